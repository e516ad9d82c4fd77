#pragma once

#include <stdexcept>
#include <string>

namespace cyclo {

// A mathematical consistency check failed (broken identity, inexact descent,
// map out of range, not-a-complex, ...).  Maps to process exit code 1.
struct MathError : std::runtime_error {
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// Bad user input: malformed config, unknown name, budget exceeded, ...
// Maps to process exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cyclo
