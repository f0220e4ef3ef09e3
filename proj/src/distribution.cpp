#include "gwe/distribution.hpp"

#include <cmath>
#include <limits>

#include "gwe/errors.hpp"

namespace gwe {

namespace {
constexpr double inf = std::numeric_limits<double>::infinity();
}

double distribution::param(const std::string& name) const {
    for (const auto& [k, v] : params)
        if (k == name) return v;
    throw parameter_error("unknown parameter: " + name);
}

distribution make_power(double theta) {
    if (!(theta > 0.0))
        throw parameter_error("power distribution requires theta > 0");
    distribution d;
    d.family = "power";
    d.params = {{"theta", theta}};
    d.sup = {0.0, 1.0};
    d.pdf = [theta](double x) {
        if (x <= 0.0 || x >= 1.0) return 0.0;
        return theta * std::pow(x, theta - 1.0);
    };
    d.cdf = [theta](double x) {
        if (x <= 0.0) return 0.0;
        if (x >= 1.0) return 1.0;
        return std::pow(x, theta);
    };
    d.quantile = [theta](double u) { return std::pow(u, 1.0 / theta); };
    return d;
}

distribution make_exponential(double lambda) {
    if (!(lambda > 0.0))
        throw parameter_error("exponential distribution requires lambda > 0");
    distribution d;
    d.family = "exponential";
    d.params = {{"lambda", lambda}};
    d.sup = {0.0, inf};
    d.pdf = [lambda](double x) {
        if (x < 0.0) return 0.0;
        return lambda * std::exp(-lambda * x);
    };
    d.cdf = [lambda](double x) {
        if (x <= 0.0) return 0.0;
        return -std::expm1(-lambda * x);
    };
    d.quantile = [lambda](double u) { return -std::log1p(-u) / lambda; };
    return d;
}

distribution make_pareto(double alpha) {
    if (!(alpha > 0.0))
        throw parameter_error("pareto distribution requires alpha > 0");
    distribution d;
    d.family = "pareto";
    d.params = {{"alpha", alpha}};
    d.sup = {1.0, inf};
    d.pdf = [alpha](double x) {
        if (x < 1.0) return 0.0;
        return alpha * std::pow(x, -alpha - 1.0);
    };
    d.cdf = [alpha](double x) {
        if (x <= 1.0) return 0.0;
        return 1.0 - std::pow(x, -alpha);
    };
    d.quantile = [alpha](double u) { return std::pow(1.0 - u, -1.0 / alpha); };
    return d;
}

distribution make_uniform(double low, double high) {
    if (!(low < high))
        throw parameter_error("uniform distribution requires low < high");
    distribution d;
    d.family = "uniform";
    d.params = {{"low", low}, {"high", high}};
    d.sup = {low, high};
    const double width = high - low;
    d.pdf = [low, high, width](double x) {
        if (x < low || x > high) return 0.0;
        return 1.0 / width;
    };
    d.cdf = [low, high, width](double x) {
        if (x <= low) return 0.0;
        if (x >= high) return 1.0;
        return (x - low) / width;
    };
    d.quantile = [low, width](double u) { return low + u * width; };
    return d;
}

std::pair<distribution, distribution> make_triangular_pair() {
    distribution X;
    X.family = "triangular_up";
    X.sup = {0.0, 1.0};
    X.pdf = [](double x) { return (x < 0.0 || x >= 1.0) ? 0.0 : 2.0 * x; };
    X.cdf = [](double x) {
        if (x <= 0.0) return 0.0;
        if (x >= 1.0) return 1.0;
        return x * x;
    };
    X.quantile = [](double u) { return std::sqrt(u); };

    distribution Y;
    Y.family = "triangular_down";
    Y.sup = {0.0, 1.0};
    Y.pdf = [](double x) { return (x < 0.0 || x >= 1.0) ? 0.0 : 2.0 * (1.0 - x); };
    Y.cdf = [](double x) {
        if (x <= 0.0) return 0.0;
        if (x >= 1.0) return 1.0;
        return x * (2.0 - x);
    };
    Y.quantile = [](double u) { return 1.0 - std::sqrt(1.0 - u); };
    return {X, Y};
}

distribution make_symmetric_triangular() {
    distribution d;
    d.family = "symmetric_triangular";
    d.sup = {-1.0, 1.0};
    d.pdf = [](double x) {
        const double a = std::fabs(x);
        return a >= 1.0 ? 0.0 : 1.0 - a;
    };
    d.cdf = [](double x) {
        if (x <= -1.0) return 0.0;
        if (x >= 1.0) return 1.0;
        if (x < 0.0) return 0.5 * (1.0 + x) * (1.0 + x);
        return 1.0 - 0.5 * (1.0 - x) * (1.0 - x);
    };
    d.quantile = [](double u) {
        if (u < 0.5) return -1.0 + std::sqrt(2.0 * u);
        return 1.0 - std::sqrt(2.0 * (1.0 - u));
    };
    return d;
}

distribution transform(const distribution& base,
                       std::function<double(double)> eta,
                       std::function<double(double)> eta_prime,
                       std::function<double(double)> eta_inverse) {
    // strict monotonicity probed on 101 interior quantile points
    const int grid_n = 101;
    double prev = -inf;
    for (int k = 1; k <= grid_n; ++k) {
        const double x = base.quantile(double(k) / (grid_n + 1));
        const double y = eta(x);
        if (!(y > prev))
            throw monotonicity_error("transform map is not strictly increasing on the support grid");
        if (!(eta_prime(x) > 0.0))
            throw monotonicity_error("transform derivative is not positive on the support grid");
        prev = y;
    }

    support sup;
    sup.lower = base.sup.lower_finite() ? eta(base.sup.lower) : -inf;
    sup.upper = base.sup.upper_finite() ? eta(base.sup.upper) : inf;

    distribution d;
    d.family = "transformed";
    d.sup = sup;
    d.pdf = [base, eta_prime, eta_inverse, sup](double y) {
        if (y <= sup.lower || y >= sup.upper) return 0.0;
        const double x = eta_inverse(y);
        return base.pdf(x) / eta_prime(x);
    };
    d.cdf = [base, eta_inverse, sup](double y) {
        if (y <= sup.lower) return 0.0;
        if (y >= sup.upper) return 1.0;
        return base.cdf(eta_inverse(y));
    };
    d.quantile = [base, eta](double u) { return eta(base.quantile(u)); };
    return d;
}

}  // namespace gwe
