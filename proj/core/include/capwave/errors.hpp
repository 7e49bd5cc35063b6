#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace capwave {

// Bad sizes, mismatched lattices, malformed configs.  CLI maps these to exit 2.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Violated mathematical preconditions (negative-order derivative of a field
// with mean, zero frequency in a resonant denominator, t = 0, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Iteration blow-ups and CFL rejections.  CLI maps these to exit 3.
struct divergence_error : std::runtime_error {
    divergence_error(const std::string& what, std::vector<double> residuals = {})
        : std::runtime_error(what), residual_history(std::move(residuals)) {}
    std::vector<double> residual_history;
};

}  // namespace capwave
