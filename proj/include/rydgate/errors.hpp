#pragma once

#include <stdexcept>
#include <string>

namespace rydgate {

// Shape/dimension mismatches between operands.
struct ShapeError : std::invalid_argument {
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// Dimension products exceeding the configured dense-matrix cap.
struct SizeError : std::length_error {
    explicit SizeError(const std::string& what) : std::length_error(what) {}
};

// Invalid physical parameter values (zero frequencies, l = 0, ...).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Adaptive integrator could not make progress (step-size underflow).
struct StiffnessError : std::runtime_error {
    StiffnessError(const std::string& what, int segment)
        : std::runtime_error(what), segment_index(segment) {}
    int segment_index;
};

// Secular averaging requested over a window that cannot separate a detuning.
struct DegenerateAverageError : std::runtime_error {
    explicit DegenerateAverageError(const std::string& what) : std::runtime_error(what) {}
};

// Bad run configuration (unknown keys, invalid labels, malformed sweep).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rydgate
