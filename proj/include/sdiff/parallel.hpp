#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace sdiff {

/// Runs fn(i) for i in [0, n) across the given number of worker threads.
/// Callers keep determinism by writing results into per-index slots and
/// reducing sequentially afterwards.
template <typename Fn>
void parallel_for_indexed(std::size_t n, int threads, Fn&& fn) {
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&fn, w, workers, n] {
            for (std::size_t i = w; i < n; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace sdiff
