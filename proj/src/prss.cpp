#include "gwe/prss.hpp"

#include <algorithm>
#include <cmath>

#include "gwe/errors.hpp"
#include "gwe/extropy.hpp"
#include "gwe/quadrature.hpp"
#include "gwe/special.hpp"

namespace gwe {

// defined in sampling.cpp; keeps the random machinery out of this file
gwe_result mc_gwe_prss_bridge(const distribution& d, const weight& w,
                              const prss_design& design, const mc_options& mc);

namespace {

int round_half_away(double v) {
    return int(std::round(v));  // std::round ties away from zero
}

void check_rank(int i, int n) {
    if (n < 1 || i < 1 || i > n)
        throw parameter_error("rank out of range");
}

// -Q/2 times the product of stratum expectations, with first-order error
// propagation: d(prod)/dE_r scales each stratum error.
gwe_result assemble(const prss_design& design,
                    const std::vector<stratum_factor>& factors,
                    const char* method_name) {
    const signed_log q = q_constant(design);
    signed_log value = signed_log::from_value(-0.5) * q;
    for (const auto& f : factors)
        value *= signed_log::from_value(f.expectation).pow_int(f.count);

    double err = 0.0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        signed_log term = q * signed_log::from_value(0.5);
        term *= signed_log::from_value(factors[i].abs_error).abs();
        term *= signed_log::from_value(factors[i].expectation).abs().pow_int(factors[i].count - 1);
        for (std::size_t j = 0; j < factors.size(); ++j)
            if (j != i)
                term *= signed_log::from_value(factors[j].expectation).abs().pow_int(factors[j].count);
        err += factors[i].count * term.value();
    }

    gwe_result r;
    r.value = value;
    r.method = method_name;
    r.error_estimate = err;
    r.factors = factors;
    r.design = design;
    return r;
}

// quadrature of Lambda against the stratum beta density phi_{2r-1:2n-1}
stratum_factor stratum_quadrature(const std::function<double(double)>& lambda,
                                  int rank, int count, int n,
                                  double rel_tol, double abs_tol) {
    const double aa = 2.0 * rank - 1.0;
    const double bb = 2.0 * (n - rank) + 1.0;
    const double ln_norm = -log_beta(aa, bb);
    auto f = [&lambda, aa, bb, ln_norm](double u) {
        return lambda(u) * std::exp(ln_norm + (aa - 1.0) * std::log(u) +
                                    (bb - 1.0) * std::log1p(-u));
    };
    const quadrature_result q = integrate_unit(f, rel_tol, abs_tol);
    return {rank, count, q.value, q.abs_error};
}

}  // namespace

prss_design make_design(int n, double p, int cycles) {
    if (n < 1)
        throw parameter_error("set size n must be at least 1");
    if (!(p > 0.0) || !(p < 1.0))
        throw parameter_error("percentile p must lie in (0,1)");
    if (cycles < 0)
        throw parameter_error("cycle count must be non-negative");
    prss_design d;
    d.n = n;
    d.p = p;
    d.cycles = cycles;
    d.a = std::clamp(round_half_away(p * (n + 1)), 1, n);
    d.b = std::clamp(round_half_away((1.0 - p) * (n + 1)), 1, n);
    d.median_design = p == 0.5;
    return d;
}

std::vector<stratum_spec> strata(const prss_design& design) {
    const int n = design.n;
    std::vector<stratum_spec> out;
    auto add = [&out](int rank, int count) {
        if (count == 0) return;
        for (auto& s : out)
            if (s.rank == rank) { s.count += count; return; }
        out.push_back({rank, count});
    };
    if (n % 2 == 0) {
        add(design.a, n / 2);
        add(design.b, n / 2);
    } else {
        add(design.a, (n - 1) / 2);
        add(design.b, (n - 1) / 2);
        add((n + 1) / 2, 1);
    }
    return out;
}

double order_statistic_pdf(const distribution& d, int i, int n, double x) {
    check_rank(i, n);
    const double F = d.cdf(x);
    const double f = d.pdf(x);
    const double coef = std::exp(std::lgamma(n + 1.0) - std::lgamma(double(i)) -
                                 std::lgamma(double(n - i + 1)));
    return coef * std::pow(F, i - 1.0) * std::pow(1.0 - F, double(n - i)) * f;
}

double order_statistic_cdf(const distribution& d, int i, int n, double x) {
    check_rank(i, n);
    const double F = d.cdf(x);
    double sum = 0.0;
    for (int k = i; k <= n; ++k)
        sum += std::exp(log_binomial(n, k)) * std::pow(F, double(k)) *
               std::pow(1.0 - F, double(n - k));
    return std::min(1.0, sum);
}

double beta_phi_pdf(int i, int n, double u) {
    check_rank(i, n);
    if (!(u > 0.0) || !(u < 1.0))
        throw parameter_error("beta density argument must lie in (0,1)");
    return beta_pdf(2.0 * i - 1.0, 2.0 * (n - i) + 1.0, u);
}

signed_log c_constant(int i, int n) {
    check_rank(i, n);
    const double lg = log_binomial(2 * i - 2, i - 1) +
                      log_binomial(2 * (n - i), n - i) -
                      log_binomial(2 * n - 1, n - 1);
    return signed_log::from_log(1, lg);
}

signed_log q_constant(const prss_design& design) {
    const int n = design.n;
    const double lc_a = c_constant(design.a, n).log_mag;
    const double lc_b = c_constant(design.b, n).log_mag;
    double lg = n * std::log(double(n));
    if (n % 2 == 0) {
        lg += (n / 2) * (lc_a + lc_b);
    } else {
        // median stratum contributes n*((n-1)!)^4 / ((((n-1)/2)!)^4 (2n-1)!);
        // this grouping makes the n=1 design reduce to the plain GWE
        lg += ((n - 1) / 2) * (lc_a + lc_b);
        lg += std::log(double(n)) + 4.0 * std::lgamma(double(n)) -
              4.0 * std::lgamma((n + 1) / 2.0) - std::lgamma(2.0 * n);
    }
    return signed_log::from_log(1, lg);
}

double stratum_expectation(const distribution& d, const weight& w, int i, int n,
                           double rel_tol, double abs_tol) {
    check_rank(i, n);
    const lambda_transform t{d, w};
    auto lam = [&t](double u) { return t(u); };
    return stratum_quadrature(lam, i, 1, n, rel_tol, abs_tol).expectation;
}

gwe_result gwe_prss(const distribution& d, const weight& w,
                    const prss_design& design, method how, const mc_options& mc) {
    switch (how) {
        case method::quadrature: {
            const lambda_transform t{d, w};
            auto lam = [&t](double u) { return t(u); };
            std::vector<stratum_factor> fs;
            for (const auto& s : strata(design))
                fs.push_back(stratum_quadrature(lam, s.rank, s.count, design.n,
                                                1e-9, 1e-12));
            return assemble(design, fs, "quadrature");
        }
        case method::closed_form: {
            if (!w.is_power || !w.non_negative)
                throw parameter_error(
                    "closed form requires a non-negative power weight");
            if (d.family == "power")
                return gwe_prss_closed_power(d.param("theta"), w.m, design);
            if (d.family == "exponential")
                return gwe_prss_closed_exponential(d.param("lambda"), w.m, design);
            if (d.family == "pareto")
                return gwe_prss_closed_pareto(d.param("alpha"), w.m, design);
            throw parameter_error("no closed form for family: " + d.family);
        }
        case method::monte_carlo:
            return mc_gwe_prss_bridge(d, w, design, mc);
    }
    throw parameter_error("unknown evaluation method");
}

gwe_result gwe_prss_lambda(const std::function<double(double)>& lambda,
                           const prss_design& design,
                           double rel_tol, double abs_tol) {
    std::vector<stratum_factor> fs;
    for (const auto& s : strata(design))
        fs.push_back(stratum_quadrature(lambda, s.rank, s.count, design.n,
                                        rel_tol, abs_tol));
    return assemble(design, fs, "quadrature");
}

gwe_result gwe_prss_closed_power(double theta, double m, const prss_design& design) {
    if (!(theta > 0.0))
        throw parameter_error("power closed form requires theta > 0");
    if (!(m >= 0.0))
        throw parameter_error("power closed form requires m >= 0");
    const int n = design.n;
    const double z = (m + theta - 1.0) / theta;
    std::vector<stratum_factor> fs;
    for (const auto& s : strata(design)) {
        const double arg = z + 2.0 * s.rank - 1.0;
        if (!(arg > 0.0))
            throw parameter_error("power closed form gamma argument is not positive; "
                                  "the stratum integral diverges");
        const double lg = std::log(theta) + std::lgamma(2.0 * n) -
                          std::lgamma(2.0 * s.rank - 1.0) + std::lgamma(arg) -
                          std::lgamma(z + 2.0 * n);
        fs.push_back({s.rank, s.count, std::exp(lg), 0.0});
    }
    return assemble(design, fs, "closed_form");
}

gwe_result gwe_prss_closed_exponential(double lambda, double m,
                                       const prss_design& design) {
    if (!(lambda > 0.0))
        throw parameter_error("exponential closed form requires lambda > 0");
    const long mi = std::lround(m);
    if (!(m >= 0.0) || std::fabs(m - mi) > 1e-9)
        throw parameter_error("exponential closed form requires integer m >= 0");
    const int n = design.n;
    std::vector<stratum_factor> fs;
    for (const auto& s : strata(design)) {
        // E[W^m] for the (2r-1)-th of 2n standard exponential order statistics,
        // integrated in u-space against its Beta(2r-1, 2n-2r+2) law
        const double aa = 2.0 * s.rank - 1.0;
        const double bb = 2.0 * (n - s.rank + 1.0);
        const double ln_norm = -log_beta(aa, bb);
        auto f = [mi, aa, bb, ln_norm](double v) {
            const double base = std::exp(ln_norm + (aa - 1.0) * std::log(v) +
                                         (bb - 1.0) * std::log1p(-v));
            return std::pow(-std::log1p(-v), double(mi)) * base;
        };
        const quadrature_result q = integrate_unit(f, 1e-13, 1e-15);
        const double scale =
            std::pow(lambda, 1.0 - m) * (2.0 * (n - s.rank) + 1.0) / (2.0 * n);
        fs.push_back({s.rank, s.count, scale * q.value, scale * q.abs_error});
    }
    return assemble(design, fs, "closed_form");
}

gwe_result gwe_prss_closed_pareto(double alpha, double m, const prss_design& design) {
    if (!(alpha > 0.0))
        throw parameter_error("pareto closed form requires alpha > 0");
    if (!(m >= 0.0))
        throw parameter_error("pareto closed form requires m >= 0");
    const int n = design.n;
    const double e = (alpha - m + 1.0) / alpha;
    std::vector<stratum_factor> fs;
    for (const auto& s : strata(design)) {
        const double arg = 2.0 * (n - s.rank) + 1.0 + e;
        if (!(arg > 0.0))
            throw divergence_error("pareto stratum integral diverges: "
                                   "gamma argument is not positive");
        const double lg = std::log(alpha) + std::lgamma(2.0 * n) -
                          std::lgamma(2.0 * (n - s.rank) + 1.0) + std::lgamma(arg) -
                          std::lgamma(2.0 * n + e);
        fs.push_back({s.rank, s.count, std::exp(lg), 0.0});
    }
    return assemble(design, fs, "closed_form");
}

signed_log bound_ratio_rhs(const prss_design& design) {
    const int n = design.n;
    if (n < 2)
        throw parameter_error("ratio bound requires n >= 2");
    // 0^0 := 1 in the rank terms, matching the maximizer limit
    auto term = [n](int r) {
        double t = 2.0 * log_binomial(n - 1, r - 1);
        if (r > 1) t += (2.0 * r - 2.0) * std::log(double(r - 1));
        if (r < n) t += (2.0 * n - 2.0 * r) * std::log(double(n - r));
        return t;
    };
    double lg;
    if (n % 2 == 0) {
        lg = 2.0 * n * std::log(double(n)) -
             2.0 * n * (n - 1.0) * std::log(double(n - 1)) +
             (n / 2) * (term(design.a) + term(design.b));
    } else {
        lg = (2.0 * n - 2.0) * std::log(double(n)) -
             2.0 * (n - 1.0) * (n - 1.0) * std::log(double(n - 1)) +
             2.0 * std::lgamma(n + 1.0) - 4.0 * std::lgamma((n + 1) / 2.0) +
             ((n - 1) / 2) * (term(design.a) + term(design.b));
    }
    return signed_log::from_log(1, lg);
}

}  // namespace gwe
