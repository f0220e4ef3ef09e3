#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace gwe {

// Error taxonomy maps onto the CLI exit contract: parameter and configuration
// problems exit with 2, numerical accuracy problems with 3.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parameter_error : error {
    using error::error;
};

struct config_error : error {
    using error::error;
};

struct monotonicity_error : parameter_error {
    using parameter_error::parameter_error;
};

// Raised when the integration budget runs out before the tolerances are met.
// Carries the best estimate so callers can still report something.
struct accuracy_error : error {
    double best_estimate;
    double error_estimate;
    accuracy_error(const std::string& msg, double best, double err)
        : error(msg), best_estimate(best), error_estimate(err) {}
};

// Integral provably infinite (a gamma argument in a closed form is <= 0).
struct divergence_error : accuracy_error {
    explicit divergence_error(const std::string& msg)
        : accuracy_error(msg, std::numeric_limits<double>::quiet_NaN(),
                         std::numeric_limits<double>::infinity()) {}
};

// Monte Carlo estimate unusable (e.g. a stratum mean <= 0 under a
// non-negative weight; the log-space product would be undefined).
struct mc_error : error {
    using error::error;
};

}  // namespace gwe
