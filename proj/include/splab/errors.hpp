#pragma once

#include <stdexcept>
#include <string>

namespace splab {

// Base for everything the library throws on purpose.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad parameters or configuration (CLI maps these to exit code 2).
struct config_error : error {
    using error::error;
};

// An operation was called outside its domain (w out of range, bad basis args).
struct domain_error : error {
    using error::error;
};

// Minimizer was handed points that do not bracket a minimum.
struct bracket_error : domain_error {
    using domain_error::domain_error;
};

// Solver failure: non-convergence, residual too large (CLI exit code 3).
struct numerical_error : error {
    using error::error;
};

// A root/crossing was searched for and does not exist on the interval.
struct not_found_error : error {
    using error::error;
};

} // namespace splab
