#pragma once

#include <stdexcept>
#include <string>

namespace latzeta {

// Bad arguments or inconsistent inputs (CLI exit code 2).
struct usage_error : std::invalid_argument {
    explicit usage_error(const std::string& msg) : std::invalid_argument(msg) {}
};

// Work size exceeds a configured cap (CLI exit code 3).
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation point lies outside the region of convergence (CLI exit code 3).
struct divergence_error : std::runtime_error {
    explicit divergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Exact evaluation requested where only floating evaluation is possible.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace latzeta
