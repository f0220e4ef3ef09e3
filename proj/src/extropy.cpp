#include "gwe/extropy.hpp"

#include <cmath>

#include "gwe/errors.hpp"

namespace gwe {

double lambda_transform::operator()(double u) const {
    const double x = dist.quantile(u);
    return w.eval(x) * dist.pdf(x);
}

double lambda_eval(const lambda_transform& t, double u) {
    if (!(u > 0.0) || !(u < 1.0))
        throw parameter_error("lambda transform argument must lie in (0,1)");
    return t(u);
}

double extropy(const distribution& d, double rel_tol, double abs_tol) {
    auto f = [&d](double u) { return d.pdf(d.quantile(u)); };
    return -0.5 * integrate_unit(f, rel_tol, abs_tol).value;
}

double gwe(const distribution& d, const weight& w, double rel_tol, double abs_tol) {
    lambda_transform t{d, w};
    auto f = [&t](double u) { return t(u); };
    return -0.5 * integrate_unit(f, rel_tol, abs_tol).value;
}

double gwe_lambda(const std::function<double(double)>& lambda,
                  double rel_tol, double abs_tol) {
    return -0.5 * integrate_unit(lambda, rel_tol, abs_tol).value;
}

signed_log gwe_srs(const distribution& d, const weight& w, int n,
                   double rel_tol, double abs_tol) {
    if (n < 1)
        throw parameter_error("sample size must be at least 1");
    const double mean_lambda = -2.0 * gwe(d, w, rel_tol, abs_tol);
    return signed_log::from_value(-0.5) * signed_log::from_value(mean_lambda).pow_int(n);
}

}  // namespace gwe
