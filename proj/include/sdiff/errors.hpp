#pragma once

#include <stdexcept>
#include <string>

namespace sdiff {

// Operands disagree on a runtime configuration value (e.g. torus area).
struct config_error : std::invalid_argument {
    explicit config_error(const std::string& what) : std::invalid_argument(what) {}
};

// A caller-side precondition is violated: degenerate plane, non-orthogonal
// pair, parity mismatch, invalid basis index, ...
struct precondition_error : std::invalid_argument {
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

// Input lies outside the mathematical domain of a formula (|z|>1, l too
// small, nonnegative Ricci, ...).
struct domain_error : std::domain_error {
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

}  // namespace sdiff
