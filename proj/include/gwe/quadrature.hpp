#pragma once

#include <functional>

namespace gwe {

struct quadrature_result {
    double value = 0.0;
    double abs_error = 0.0;
    long evaluations = 0;
};

// Adaptive Gauss-Kronrod 7-15 over (0,1) with worst-panel-first refinement.
// The rule is open: neither endpoint is ever evaluated, so integrable endpoint
// singularities are tolerated. Converges when
//   abs_error <= max(abs_tol, rel_tol * |value|),
// otherwise throws accuracy_error carrying the best estimate.
quadrature_result integrate_unit(const std::function<double(double)>& f,
                                 double rel_tol = 1e-9,
                                 double abs_tol = 1e-12,
                                 long max_evaluations = 1L << 20);

}  // namespace gwe
