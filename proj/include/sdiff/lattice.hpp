#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace sdiff {

/// Integer wavevector k = (k1, k2) indexing the Fourier mode
/// e_k = exp(i(k1*x1 + k2*x2)) on the flat 2-torus.
struct LatticeMode {
    int k1 = 0;
    int k2 = 0;

    constexpr LatticeMode() = default;
    constexpr LatticeMode(int a, int b) : k1(a), k2(b) {}

    /// -k = (-k1, -k2). Conjugating e_k as a function negates the index.
    constexpr LatticeMode negated() const { return {-k1, -k2}; }

    /// kbar = (k1, -k2), the reflection entering the Klein-bottle basis.
    constexpr LatticeMode conj_flip() const { return {k1, -k2}; }

    constexpr LatticeMode operator+(LatticeMode o) const { return {k1 + o.k1, k2 + o.k2}; }
    constexpr LatticeMode operator-(LatticeMode o) const { return {k1 - o.k1, k2 - o.k2}; }
    constexpr LatticeMode operator-() const { return negated(); }
    constexpr LatticeMode operator*(int c) const { return {c * k1, c * k2}; }

    constexpr bool is_zero() const { return k1 == 0 && k2 == 0; }

    constexpr auto operator<=>(const LatticeMode&) const = default;

    std::string str() const { return "(" + std::to_string(k1) + "," + std::to_string(k2) + ")"; }
};

constexpr LatticeMode operator*(int c, LatticeMode k) { return k * c; }

/// k x l = k1*l2 - k2*l1 (antisymmetric).
constexpr long long cross(LatticeMode k, LatticeMode l) {
    return static_cast<long long>(k.k1) * l.k2 - static_cast<long long>(k.k2) * l.k1;
}

constexpr long long dot(LatticeMode k, LatticeMode l) {
    return static_cast<long long>(k.k1) * l.k1 + static_cast<long long>(k.k2) * l.k2;
}

/// ||k||^2 = k1^2 + k2^2.
constexpr long long norm2(LatticeMode k) { return dot(k, k); }

}  // namespace sdiff
