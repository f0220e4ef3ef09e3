#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwe/distribution.hpp"
#include "gwe/prss.hpp"
#include "gwe/weight.hpp"

namespace gwe {

enum class relation {
    st,            // survival ordering
    lr,            // likelihood ratio
    disp,          // dispersive
    hr,            // hazard rate
    convex,        // convex transform
    star,          // star-shaped transform
    superadditive, // superadditive transform
};

enum class verdict3 { yes, no, inconclusive };

const char* relation_name(relation r);
const char* verdict_name(verdict3 v);

// A yes is grid-supported, not a proof; grid_size lets callers refine.
struct order_check_report {
    relation rel;
    verdict3 holds = verdict3::inconclusive;
    std::optional<double> witness;     // grid point violating the relation
    std::optional<double> witness2;    // second coordinate for pair checks
    std::size_t grid_size = 0;
    std::string note;
};

// merged quantile grid over both supports, sorted, deduplicated
std::vector<double> make_support_grid(const distribution& X, const distribution& Y,
                                      std::size_t count = 201);
std::vector<double> make_unit_grid(std::size_t count = 201);

// X precedes Y in each relation below
order_check_report check_st(const distribution& X, const distribution& Y,
                            const std::vector<double>& grid);
order_check_report check_lr(const distribution& X, const distribution& Y,
                            const std::vector<double>& grid);
order_check_report check_disp(const distribution& X, const distribution& Y,
                              const std::vector<double>& grid_u);
order_check_report check_hr(const distribution& X, const distribution& Y,
                            const std::vector<double>& grid);
order_check_report check_transform_order(const distribution& X, const distribution& Y,
                                         relation which,  // convex|star|superadditive
                                         const std::vector<double>& grid);

struct stratum_phi_bounds {
    int rank = 1;
    double inf_phi_pos = 0.0;  // inf of the stratum beta density over {delta > 0}
    double sup_phi_neg = 0.0;  // sup over {delta < 0}
    bool holds = true;
};

// Sign classification of delta(u) = Lambda_X(u) - Lambda_Y(u) on a grid.
// |delta| <= 1e-12 is assigned to neither set (the sets are strict).
struct delta_analysis_result {
    std::vector<double> grid;
    std::vector<double> delta_values;
    std::vector<std::pair<double, double>> pos_intervals;  // delta > 0 runs
    std::vector<std::pair<double, double>> neg_intervals;  // delta < 0 runs
    std::vector<stratum_phi_bounds> per_stratum;
    double inf_phi_pos = 0.0;  // binding (smallest) inf across strata
    double sup_phi_neg = 0.0;  // binding (largest) sup across strata
    bool condition_holds = false;
};

delta_analysis_result delta_analysis(const distribution& X, const weight& wX,
                                     const distribution& Y, const weight& wY,
                                     const prss_design& design,
                                     const std::vector<double>& grid_u);

struct comparison_verdict {
    std::string check;  // behavior-describing name, serialized as "theorem"
    std::vector<std::pair<std::string, bool>> preconditions;
    verdict3 holds = verdict3::inconclusive;
    double lhs = 0.0;
    double rhs = 0.0;
    std::optional<double> witness;
    std::size_t grid_size = 0;
    std::string note;
};

// If w1 is increasing, w1 >= w2, X precedes Y dispersively, and the two upper
// endpoints are equal and finite, then the percentile-design GWE of (X,w1) is
// at most that of (Y,w2). Unbounded supports leave the verdict inconclusive.
comparison_verdict verify_dispersive_weight_comparison(
    const distribution& X, const distribution& Y,
    const weight& w1, const weight& w2, const prss_design& design);

// Delta-condition comparison: if every stratum beta density is at least as
// large on {delta>0} as on {delta<0} and the plain GWE ordering holds, the
// percentile-design ordering follows.
comparison_verdict verify_delta_condition_comparison(
    const distribution& X, const weight& wX,
    const distribution& Y, const weight& wY, const prss_design& design);

// Increasing-transform comparison: eta increasing with eta(0)=0; the sign of
// w(eta(x))/eta'(x) - w(x) on the grid decides the direction of the
// percentile-design GWE inequality between X and eta(X).
comparison_verdict verify_transform_comparison(
    const distribution& X,
    const std::function<double(double)>& eta,
    const std::function<double(double)>& eta_prime,
    const weight& w, const prss_design& design);

// Symmetric distribution with an odd weight: the percentile-design GWE
// vanishes for odd n. holds=yes when |value| <= 1e-7; the density symmetry
// f(mu+x) = f(mu-x) about the median is grid-checked and reported in note.
comparison_verdict check_symmetry_characterization(const distribution& X,
                                                   const weight& w_odd, int n_odd,
                                                   double p = 0.3);

// Compares quadrature values of X under power weights against the
// unit-rate exponential closed form across (m,n) grids.
comparison_verdict check_exponential_characterization(const distribution& X,
                                                      const std::vector<int>& m_grid,
                                                      const std::vector<int>& n_grid,
                                                      double p = 0.3);

}  // namespace gwe
