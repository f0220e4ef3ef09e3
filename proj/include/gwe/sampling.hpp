#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "gwe/distribution.hpp"
#include "gwe/prss.hpp"
#include "gwe/weight.hpp"

namespace gwe {

// Deterministic, splittable stream. Children are derived from the root seed
// and a stream id only, so results do not depend on draw or merge order.
struct random_source {
    explicit random_source(std::uint64_t seed);

    double uniform01();  // open interval (0,1); endpoints unreachable
    random_source split(std::uint64_t stream_id) const;

    std::uint64_t root_seed;
    std::mt19937_64 engine;
};

std::vector<double> draw(const distribution& d, random_source& rng, long count);

// draws n variates, returns the i-th smallest (perfect ranking)
double sample_order_statistic(const distribution& d, int i, int n, random_source& rng);

struct prss_row {
    int cycle = 0;      // 1-based
    int set_index = 0;  // 1-based within the cycle
    int rank = 0;
    double value = 0.0;
};

struct prss_dataset {
    prss_design design;
    std::vector<prss_row> rows;  // design.cycles * design.n rows
};

prss_dataset sample_prss(const distribution& d, const prss_design& design,
                         random_source& rng);

// Beta variates are realized as the (2i-1)-th order statistic of 2n-1
// uniforms; returns (sample mean of Lambda, standard error of the mean).
std::pair<double, double> mc_stratum_expectation(const distribution& d,
                                                 const weight& w, int i, int n,
                                                 random_source& rng, long reps);

// log-product assembly with first-order error propagation; each stratum rank
// gets its own child stream keyed by the rank
gwe_result mc_gwe_prss(const distribution& d, const weight& w,
                       const prss_design& design, random_source& rng, long reps);

// two-sided Kolmogorov-Smirnov statistic; samples need not be sorted
double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf);

// asymptotic two-sided critical value at significance alpha
double ks_critical_value(std::size_t n_samples, double alpha);

}  // namespace gwe
