#pragma once

#include <stdexcept>
#include <string>

namespace agint {

// Invalid model/geometry/config input. Maps to CLI exit code 2.
struct config_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A quantitative check (oracle agreement, normalization, ...) failed.
// Maps to CLI exit code 3.
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An iterative scheme did not converge. Maps to CLI exit code 4.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct math_domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// The requested density is a point mass and has no density value.
struct point_mass_error : math_domain_error {
    explicit point_mass_error(const std::string& what) : math_domain_error(what) {}
};

}  // namespace agint
