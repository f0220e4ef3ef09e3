#include "gwe/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gwe/errors.hpp"
#include "gwe/extropy.hpp"

namespace gwe {

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

void check_rank_bounds(int i, int n) {
    if (n < 1 || i < 1 || i > n)
        throw parameter_error("rank out of range");
}

}  // namespace

random_source::random_source(std::uint64_t seed)
    : root_seed(seed), engine(mix64(seed)) {}

double random_source::uniform01() {
    // 53-bit mantissa shifted into (0,1); both endpoints unreachable
    return (double(engine() >> 11) + 0.5) * 0x1.0p-53;
}

random_source random_source::split(std::uint64_t stream_id) const {
    return random_source(root_seed + (stream_id + 1) * 0x9E3779B97F4A7C15ULL);
}

std::vector<double> draw(const distribution& d, random_source& rng, long count) {
    if (count < 0)
        throw parameter_error("draw count must be non-negative");
    std::vector<double> out;
    out.reserve(std::size_t(count));
    for (long i = 0; i < count; ++i)
        out.push_back(d.quantile(rng.uniform01()));
    return out;
}

double sample_order_statistic(const distribution& d, int i, int n,
                              random_source& rng) {
    check_rank_bounds(i, n);
    // quantile is monotone, so ranking the uniforms ranks the variates
    std::vector<double> u(static_cast<std::size_t>(n));
    for (auto& v : u) v = rng.uniform01();
    std::nth_element(u.begin(), u.begin() + (i - 1), u.end());
    return d.quantile(u[std::size_t(i - 1)]);
}

prss_dataset sample_prss(const distribution& d, const prss_design& design,
                         random_source& rng) {
    prss_dataset ds;
    ds.design = design;
    const int n = design.n;
    const int half = (n % 2 == 0) ? n / 2 : (n - 1) / 2;
    for (int c = 1; c <= design.cycles; ++c) {
        int set_index = 0;
        auto take = [&](int rank) {
            ++set_index;
            ds.rows.push_back({c, set_index, rank,
                               sample_order_statistic(d, rank, n, rng)});
        };
        for (int s = 0; s < half; ++s) take(design.a);
        for (int s = 0; s < half; ++s) take(design.b);
        if (n % 2 == 1) take((n + 1) / 2);
    }
    return ds;
}

std::pair<double, double> mc_stratum_expectation(const distribution& d,
                                                 const weight& w, int i, int n,
                                                 random_source& rng, long reps) {
    check_rank_bounds(i, n);
    if (reps < 2)
        throw mc_error("standard error needs at least 2 replications");
    const lambda_transform t{d, w};
    const int k = 2 * i - 1;
    std::vector<double> u(std::size_t(2 * n - 1));
    double mean = 0.0;
    double m2 = 0.0;
    for (long r = 0; r < reps; ++r) {
        for (auto& v : u) v = rng.uniform01();
        std::nth_element(u.begin(), u.begin() + (k - 1), u.end());
        const double x = t(u[std::size_t(k - 1)]);
        const double delta = x - mean;
        mean += delta / double(r + 1);
        m2 += delta * (x - mean);
    }
    const double se = std::sqrt(m2 / double(reps - 1) / double(reps));
    return {mean, se};
}

gwe_result mc_gwe_prss(const distribution& d, const weight& w,
                       const prss_design& design, random_source& rng, long reps) {
    const signed_log q = q_constant(design);
    signed_log value = signed_log::from_value(-0.5) * q;
    std::vector<stratum_factor> fs;
    double rel_var = 0.0;
    for (const auto& s : strata(design)) {
        random_source child = rng.split(std::uint64_t(s.rank));
        const auto [mean, se] =
            mc_stratum_expectation(d, w, s.rank, design.n, child, reps);
        if (w.non_negative && !(mean > 0.0))
            throw mc_error("stratum estimate is not positive under a "
                           "non-negative weight; cannot assemble in log space");
        fs.push_back({s.rank, s.count, mean, se});
        value *= signed_log::from_value(mean).pow_int(s.count);
        const double rel = se / std::fabs(mean);
        rel_var += double(s.count) * double(s.count) * rel * rel;
    }
    double err = value.abs().value() * std::sqrt(rel_var);
    if (!std::isfinite(err))
        err = std::numeric_limits<double>::infinity();

    gwe_result r;
    r.value = value;
    r.method = "monte_carlo";
    r.error_estimate = err;
    r.factors = fs;
    r.design = design;
    return r;
}

// out-of-line hook used by gwe_prss when the caller asks for monte_carlo
gwe_result mc_gwe_prss_bridge(const distribution& d, const weight& w,
                              const prss_design& design, const mc_options& mc) {
    random_source rng(mc.seed);
    return mc_gwe_prss(d, w, design, rng, mc.reps);
}

double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf) {
    if (samples.empty())
        throw parameter_error("empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = double(samples.size());
    double d_max = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double F = cdf(samples[i]);
        d_max = std::max({d_max, (double(i) + 1.0) / n - F, F - double(i) / n});
    }
    return d_max;
}

double ks_critical_value(std::size_t n_samples, double alpha) {
    if (n_samples == 0 || !(alpha > 0.0) || !(alpha < 1.0))
        throw parameter_error("invalid critical value request");
    return std::sqrt(-std::log(alpha / 2.0) / 2.0) / std::sqrt(double(n_samples));
}

}  // namespace gwe
