#pragma once

#include <stdexcept>
#include <string>

namespace fairpeano {

// Invalid inputs: bad graph data, malformed files, violated preconditions.
// The CLI maps this to exit code 1.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Iterative solver gave up before reaching its tolerance. Carries the final
// residual so callers can report how close it got. CLI exit code 2.
struct NonConvergenceError : std::runtime_error {
    double residual;
    NonConvergenceError(const std::string& msg, double res)
        : std::runtime_error(msg), residual(res) {}
};

}  // namespace fairpeano
