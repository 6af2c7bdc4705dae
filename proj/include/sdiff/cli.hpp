#pragma once

namespace sdiff::cli {

/// Entry point of the command-line tool; returns the process exit code
/// (0 ok, 1 precondition/domain error, 2 verification failure, 3 I/O).
int run(int argc, const char* const* argv);

}  // namespace sdiff::cli
