#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gwe/distribution.hpp"
#include "gwe/signed_log.hpp"
#include "gwe/weight.hpp"

namespace gwe {

// Percentile design: ranks a = [p(n+1)], b = [q(n+1)] with q = 1-p, rounded
// half away from zero and clamped into [1,n]. cycles only affects sampling.
struct prss_design {
    int n = 1;
    double p = 0.5;
    int a = 1;
    int b = 1;
    int cycles = 1;
    bool median_design = false;  // warning flag, set when p == 0.5
};

prss_design make_design(int n, double p, int cycles = 1);

// rank -> how many of the n sets measure that rank; counts sum to n.
// Even n: a and b get n/2 each. Odd n: (n-1)/2 each plus one median set.
struct stratum_spec {
    int rank = 1;
    int count = 0;
};
std::vector<stratum_spec> strata(const prss_design& design);

// density of the i-th order statistic of n draws at x
double order_statistic_pdf(const distribution& d, int i, int n, double x);

// P(X_{i:n} <= x), exact binomial tail sum
double order_statistic_cdf(const distribution& d, int i, int n, double x);

// Beta(2i-1, 2n-2i+1) density at u; the law of squared order-statistic mass
double beta_phi_pdf(int i, int n, double u);

signed_log c_constant(int i, int n);
signed_log q_constant(const prss_design& design);

// E[Lambda(B_{2i-1:2n-1})] by adaptive quadrature
double stratum_expectation(const distribution& d, const weight& w, int i, int n,
                           double rel_tol = 1e-9, double abs_tol = 1e-12);

struct stratum_factor {
    int rank = 1;
    int count = 0;
    double expectation = 0.0;
    double abs_error = 0.0;
};

struct gwe_result {
    signed_log value;
    std::string method;      // "quadrature" | "closed_form" | "monte_carlo"
    double error_estimate = 0.0;  // absolute, first-order propagated
    std::vector<stratum_factor> factors;
    prss_design design;
};

enum class method {
    quadrature,
    closed_form,
    monte_carlo,
};

struct mc_options {
    std::uint64_t seed = 1;
    long reps = 100000;
};

// -Q/2 times the product of per-stratum expectations, assembled in log space.
// closed_form dispatches on the distribution family (power, exponential,
// pareto with power weights only).
gwe_result gwe_prss(const distribution& d, const weight& w,
                    const prss_design& design, method how = method::quadrature,
                    const mc_options& mc = {});

// same assembly for a caller-supplied u-space integrand
gwe_result gwe_prss_lambda(const std::function<double(double)>& lambda,
                           const prss_design& design,
                           double rel_tol = 1e-9, double abs_tol = 1e-12);

gwe_result gwe_prss_closed_power(double theta, double m, const prss_design& design);
gwe_result gwe_prss_closed_exponential(double lambda, double m, const prss_design& design);
gwe_result gwe_prss_closed_pareto(double alpha, double m, const prss_design& design);

// right-hand side of the percentile-vs-SRS ratio bound; requires n >= 2,
// with the convention 0^0 := 1 in the rank-dependent factors
signed_log bound_ratio_rhs(const prss_design& design);

}  // namespace gwe
