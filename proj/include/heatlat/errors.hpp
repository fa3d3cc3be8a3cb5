#pragma once

#include <stdexcept>
#include <string>

namespace heatlat {

// Invalid parameter values or malformed configuration input.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Parameter regime the model does not admit (e.g. unpinned chain in d < 3).
struct RegimeError : std::runtime_error {
    explicit RegimeError(const std::string& what) : std::runtime_error(what) {}
};

// Regime where the requested transport integral diverges.
struct DivergenceError : RegimeError {
    explicit DivergenceError(const std::string& what) : RegimeError(what) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Estimation could not produce a meaningful value from the given data
// (non-positive normalization, non-finite state, too few replicas).
struct EstimatorFailure : std::runtime_error {
    explicit EstimatorFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace heatlat
