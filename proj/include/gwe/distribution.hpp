#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace gwe {

// Support endpoints may be +-infinity. All integration happens in u-space
// through the quantile, so infinite endpoints never reach an integrator.
struct support {
    double lower = 0.0;
    double upper = 1.0;
    bool lower_finite() const { return std::isfinite(lower); }
    bool upper_finite() const { return std::isfinite(upper); }
};

// Evaluatable pdf/cdf/quantile triple. Immutable after construction; safe to
// share across threads. `family` and `params` drive closed-form dispatch and
// serialization.
struct distribution {
    std::string family;
    std::vector<std::pair<std::string, double>> params;
    support sup;
    std::function<double(double)> pdf;
    std::function<double(double)> cdf;
    std::function<double(double)> quantile;

    double param(const std::string& name) const;
};

distribution make_power(double theta);          // pdf theta*x^(theta-1) on (0,1)
distribution make_exponential(double lambda);   // rate parameterization
distribution make_pareto(double alpha);         // cdf 1 - x^-alpha on (1,inf)
distribution make_uniform(double low, double high);

// pdf 2x and pdf 2(1-x) on (0,1)
std::pair<distribution, distribution> make_triangular_pair();

// pdf 1-|x| on (-1,1); used by the symmetry checks, not exposed in JSON
distribution make_symmetric_triangular();

// Distribution of eta(X) for strictly increasing eta. Monotonicity of eta is
// validated on a 101-point quantile grid of the base support; failure throws
// monotonicity_error.
distribution transform(const distribution& base,
                       std::function<double(double)> eta,
                       std::function<double(double)> eta_prime,
                       std::function<double(double)> eta_inverse);

}  // namespace gwe
