#pragma once

#include <functional>

#include "gwe/distribution.hpp"
#include "gwe/quadrature.hpp"
#include "gwe/signed_log.hpp"
#include "gwe/weight.hpp"

namespace gwe {

// u-space integrand of the weighted extropy: u -> w(F^-1(u)) * f(F^-1(u))
struct lambda_transform {
    distribution dist;
    weight w;
    double operator()(double u) const;
};

// domain-checked evaluation; u must lie in (0,1)
double lambda_eval(const lambda_transform& t, double u);

// J(X) = -1/2 * integral of f^2 = -1/2 * E[f(F^-1(U))]
double extropy(const distribution& d, double rel_tol = 1e-9, double abs_tol = 1e-12);

// general weighted extropy J_w(X) = -1/2 * E[Lambda(U)]
double gwe(const distribution& d, const weight& w,
           double rel_tol = 1e-9, double abs_tol = 1e-12);

// same, for a caller-supplied u-space integrand
double gwe_lambda(const std::function<double(double)>& lambda,
                  double rel_tol = 1e-9, double abs_tol = 1e-12);

// J_w of an n-draw simple random sample: -1/2 * (E[Lambda(U)])^n
signed_log gwe_srs(const distribution& d, const weight& w, int n,
                   double rel_tol = 1e-9, double abs_tol = 1e-12);

}  // namespace gwe
