#include "gwe/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "gwe/errors.hpp"
#include "gwe/extropy.hpp"
#include "gwe/json_io.hpp"
#include "gwe/orders.hpp"
#include "gwe/prss.hpp"
#include "gwe/sampling.hpp"

namespace gwe::cli {

namespace {

std::string normalize_method(std::string s) {
    for (auto& ch : s)
        if (ch == '-') ch = '_';
    return s;
}

method method_from_string(const std::string& raw) {
    const std::string s = normalize_method(raw);
    if (s == "quadrature") return method::quadrature;
    if (s == "closed_form") return method::closed_form;
    if (s == "monte_carlo") return method::monte_carlo;
    throw config_error("unknown method: " + raw);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

// ---------------------------------------------------------------- compute

int cmd_compute(const run_config& cfg, std::ostream& os) {
    if (cfg.distributions.empty())
        throw config_error("compute needs at least one distribution");
    std::vector<json> weight_descs = cfg.weights;
    if (weight_descs.empty())
        weight_descs.push_back(json{{"kind", "constant_one"}});
    if (cfg.methods.empty())
        throw config_error("compute needs at least one method");

    json rows = json::array();
    bool any_accuracy = false;
    bool any_config = false;
    for (const json& dj : cfg.distributions) {
        const distribution d = distribution_from_json(dj);
        for (const json& wj : weight_descs) {
            const weight w = weight_from_json(wj);
            for (int n : cfg.n_values) {
                for (double p : cfg.p_values) {
                    const prss_design design = make_design(n, p, cfg.cycles);
                    double first_value = 0.0;
                    bool have_first = false;
                    for (const std::string& ms : cfg.methods) {
                        json row;
                        row["distribution"] = distribution_to_json(d);
                        row["weight"] = weight_to_json(w);
                        row["method"] = normalize_method(ms);
                        try {
                            const gwe_result r =
                                gwe_prss(d, w, design, method_from_string(ms),
                                         {cfg.seed, cfg.reps});
                            const json rj = gwe_result_to_json(r);
                            for (const auto& [key, val] : rj.items())
                                row[key] = val;
                            row["status"] = "ok";
                            const double v = r.value.value();
                            if (!have_first) {
                                first_value = v;
                                have_first = true;
                                row["relative_difference"] = nullptr;
                            } else {
                                row["relative_difference"] =
                                    std::fabs(v - first_value) /
                                    std::max(std::fabs(first_value), 1e-300);
                            }
                        } catch (const accuracy_error& e) {
                            any_accuracy = true;
                            row["design"] = json{{"n", design.n}, {"p", design.p},
                                                 {"a", design.a}, {"b", design.b},
                                                 {"median_design", design.median_design}};
                            row["status"] = "accuracy_error";
                            row["message"] = e.what();
                        } catch (const mc_error& e) {
                            any_accuracy = true;
                            row["design"] = json{{"n", design.n}, {"p", design.p},
                                                 {"a", design.a}, {"b", design.b},
                                                 {"median_design", design.median_design}};
                            row["status"] = "mc_error";
                            row["message"] = e.what();
                        } catch (const error& e) {
                            any_config = true;
                            row["design"] = json{{"n", design.n}, {"p", design.p},
                                                 {"a", design.a}, {"b", design.b},
                                                 {"median_design", design.median_design}};
                            row["status"] = "error";
                            row["message"] = e.what();
                        }
                        rows.push_back(std::move(row));
                    }
                }
            }
        }
    }

    if (cfg.format == "csv") {
        os << "family,params,weight,n,p,a,b,median_design,method,value,sign,"
              "log_magnitude,error_estimate,relative_difference,status,message\n";
        for (const json& row : rows) {
            const json& dj = row.at("distribution");
            const json& design = row.at("design");
            os << dj.at("family").get<std::string>() << ',';
            std::string ps;
            for (const auto& [k, v] : dj.at("params").items()) {
                if (!ps.empty()) ps += ';';
                ps += k + "=" + format_double(v.get<double>());
            }
            os << csv_escape(ps) << ',';
            const json& wj = row.at("weight");
            std::string ws = wj.at("kind").get<std::string>();
            if (wj.contains("m")) ws += ";m=" + format_double(wj.at("m").get<double>());
            os << csv_escape(ws) << ',';
            os << design.at("n").get<int>() << ',' << format_double(design.at("p").get<double>())
               << ',' << design.at("a").get<int>() << ',' << design.at("b").get<int>() << ','
               << (design.at("median_design").get<bool>() ? "true" : "false") << ','
               << row.at("method").get<std::string>() << ',';
            auto num = [&os, &row](const char* key) {
                if (row.contains(key) && row.at(key).is_number())
                    os << format_double(row.at(key).get<double>());
                os << ',';
            };
            if (row.contains("value") && !row.at("value").is_null())
                os << format_double(row.at("value").get<double>());
            os << ',';
            if (row.contains("sign")) os << row.at("sign").get<int>();
            os << ',';
            num("log_magnitude");
            num("error_estimate");
            num("relative_difference");
            os << row.at("status").get<std::string>() << ',';
            if (row.contains("message"))
                os << csv_escape(row.at("message").get<std::string>());
            os << '\n';
        }
    } else {
        json j;
        j["command"] = "compute";
        j["rows"] = rows;
        os << j.dump(2) << '\n';
    }
    if (any_accuracy) return exit_accuracy;
    if (any_config) return exit_config;
    return exit_ok;
}

// ----------------------------------------------------------------- verify

struct check_result {
    std::string name;
    bool passed = false;
    bool accuracy = false;
    std::string detail;
};

struct suite_runner {
    std::vector<check_result> results;

    void add(const std::string& name,
             const std::function<std::pair<bool, std::string>()>& fn) {
        check_result r;
        r.name = name;
        try {
            const auto [ok, detail] = fn();
            r.passed = ok;
            r.detail = detail;
        } catch (const accuracy_error& e) {
            r.accuracy = true;
            r.detail = std::string("accuracy failure: ") + e.what();
        } catch (const std::exception& e) {
            r.detail = std::string("error: ") + e.what();
        }
        results.push_back(std::move(r));
    }
};

// accumulates per-cell assertions inside one named check
struct agg {
    bool ok = true;
    int cells = 0;
    std::string bad;
    void expect(bool cond, const std::string& describe) {
        ++cells;
        if (cond) return;
        if (!bad.empty()) bad += "; ";
        bad += describe;
        ok = false;
    }
    std::pair<bool, std::string> done(const std::string& good) const {
        if (ok) return {true, good + " (" + std::to_string(cells) + " assertions)"};
        return {false, bad};
    }
};

bool near_abs(double got, double want, double tol) {
    return std::fabs(got - want) <= tol;
}

bool near_rel(double got, double want, double rel) {
    return std::fabs(got - want) <= rel * std::fabs(want);
}

std::pair<bool, std::string> expect_near(double got, double want, double tol,
                                         const std::string& what) {
    std::ostringstream ss;
    ss << what << ": got " << format_double(got) << ", want "
       << format_double(want) << ", abs tol " << format_double(tol);
    return {near_abs(got, want, tol), ss.str()};
}

void suite_examples(suite_runner& run) {
    const distribution uni = make_uniform(0.0, 1.0);
    const distribution exp1 = make_exponential(1.0);
    const weight w1 = make_weight_constant_one();
    const weight wx = make_weight_power(1.0);

    run.add("plain_extropy_uniform", [&] {
        return expect_near(extropy(uni), -0.5, 1e-9, "extropy of uniform(0,1)");
    });
    run.add("plain_extropy_exponential_rate2", [&] {
        return expect_near(extropy(make_exponential(2.0)), -0.5, 1e-9,
                           "extropy of exponential(2)");
    });
    run.add("weighted_uniform_linear", [&] {
        return expect_near(gwe(uni, wx), -0.25, 1e-9, "linear weight, uniform");
    });
    run.add("weighted_exponential_linear", [&] {
        return expect_near(gwe(exp1, wx), -0.125, 1e-9,
                           "linear weight, exponential(1)");
    });
    run.add("weighted_power_quadratic", [&] {
        return expect_near(gwe(make_power(2.0), make_weight_power(2.0)), -0.4,
                           1e-9, "quadratic weight, power(2)");
    });
    run.add("prss_uniform_unweighted", [&] {
        agg a;
        a.expect(near_abs(gwe_prss(uni, w1, make_design(2, 0.3)).value.value(),
                          -8.0 / 9.0, 1e-9), "n=2 value off");
        a.expect(near_abs(gwe_prss(uni, w1, make_design(3, 0.3)).value.value(),
                          -243.0 / 125.0, 1e-9), "n=3 value off");
        return a.done("uniform design values match");
    });
    run.add("prss_exponential_linear", [&] {
        agg a;
        a.expect(near_abs(gwe_prss(exp1, wx, make_design(1, 0.3)).value.value(),
                          -0.125, 1e-10), "n=1 value off");
        a.expect(near_rel(gwe_prss(exp1, wx, make_design(2, 0.3)).value.value(),
                          -13.0 / 288.0, 1e-9), "n=2 value off");
        a.expect(near_rel(gwe_prss(exp1, wx, make_design(3, 0.3)).value.value(),
                          -3219.0 / 160000.0, 1e-9), "n=3 value off");
        return a.done("exponential design values match");
    });
    run.add("prss_power_linear", [&] {
        return expect_near(
            gwe_prss(make_power(2.0), wx, make_design(2, 0.3)).value.value(),
            -2.0 / 3.0, 1e-9, "power(2) linear weight n=2");
    });
    run.add("prss_pareto_unweighted", [&] {
        return expect_near(
            gwe_prss(make_pareto(3.0), w1, make_design(2, 0.3)).value.value(),
            -5832.0 / 5915.0, 1e-9, "pareto(3) unweighted n=2");
    });
    run.add("transformed_exponential_survival", [&] {
        // exp growth transform of a rate-lambda exponential has polynomial
        // survival (1+x)^-lambda
        const double lam = 2.0;
        const distribution z =
            transform(make_exponential(lam),
                      [](double x) { return std::expm1(x); },
                      [](double x) { return std::exp(x); },
                      [](double y) { return std::log1p(y); });
        agg a;
        for (int i = 1; i <= 19; ++i) {
            const double u = double(i) / 20.0;
            const double x = z.quantile(u);
            a.expect(near_abs(1.0 - z.cdf(x), std::pow(1.0 + x, -lam), 1e-10),
                     "survival mismatch at u=" + format_double(u));
        }
        return a.done("transformed survival follows the heavy-tail form");
    });
    run.add("triangular_equal_weight_delta_sign", [&] {
        const auto [X, Y] = make_triangular_pair();
        const auto res =
            delta_analysis(X, wx, Y, wx, make_design(2, 0.3), make_unit_grid(501));
        agg a;
        a.expect(res.neg_intervals.empty(), "negative-delta intervals not empty");
        a.expect(res.condition_holds, "stratum density condition fails");
        return a.done("equal-weight delta is non-negative on the grid");
    });
    run.add("triangular_pair_design_ordering", [&] {
        const auto [X, Y] = make_triangular_pair();
        const weight wx2 = make_weight_power(2.0);
        const double want_x[] = {-1024.0 / 2835.0, -3538944.0 / 9304295.0,
                                 -137438953472.0 / 42698023225.0};
        const double want_y[] = {-58.0 / 735.0, -75027.0 / 1630475.0,
                                 -415074430894208.0 / 5647533772505625.0};
        agg a;
        for (int n = 2; n <= 4; ++n) {
            const prss_design d = make_design(n, 0.3);
            const double lx = gwe_prss(X, wx2, d).value.value();
            const double ry = gwe_prss(Y, wx, d).value.value();
            a.expect(near_rel(lx, want_x[n - 2], 1e-8),
                     "lhs value n=" + std::to_string(n));
            a.expect(near_rel(ry, want_y[n - 2], 1e-8),
                     "rhs value n=" + std::to_string(n));
            a.expect(lx <= ry + 1e-10, "ordering n=" + std::to_string(n));
        }
        return a.done("mixed-weight design ordering matches frozen values");
    });
    run.add("transform_growth_inequality", [&] {
        agg a;
        for (int n = 1; n <= 3; ++n) {
            const auto v = verify_transform_comparison(
                exp1, [](double x) { return std::expm1(x); },
                [](double x) { return std::exp(x); }, make_weight_power(2.0),
                make_design(n, 0.3));
            a.expect(v.holds == verdict3::yes,
                     "verdict n=" + std::to_string(n) + " is " +
                         verdict_name(v.holds));
            a.expect(v.lhs >= v.rhs - 1e-10, "direction n=" + std::to_string(n));
        }
        return a.done("growth-condition inequality confirmed");
    });
}

void suite_bounds(suite_runner& run) {
    const std::vector<std::pair<std::string, distribution>> dists = {
        {"uniform", make_uniform(0.0, 1.0)},
        {"exponential_rate1", make_exponential(1.0)},
        {"exponential_rate2", make_exponential(2.0)},
        {"power_theta2", make_power(2.0)},
        {"power_theta3", make_power(3.0)},
        {"pareto_alpha2", make_pareto(2.0)},
        {"pareto_alpha3", make_pareto(3.0)},
    };
    const std::vector<std::pair<std::string, weight>> weights = {
        {"1", make_weight_constant_one()},
        {"x", make_weight_power(1.0)},
        {"x^2", make_weight_power(2.0)},
    };
    for (const auto& [dname, d] : dists) {
        run.add("ratio_bound_" + dname, [&] {
            agg a;
            for (const auto& [wname, w] : weights) {
                for (int n : {2, 3, 4, 5}) {
                    for (double p : {0.2, 0.3, 0.4}) {
                        const prss_design design = make_design(n, p);
                        const signed_log jp = gwe_prss(d, w, design).value;
                        const signed_log js = gwe_srs(d, w, n);
                        const double ratio = (jp / js).value();
                        const double rhs = bound_ratio_rhs(design).value();
                        a.expect(ratio <= rhs * (1.0 + 1e-9) + 1e-9,
                                 "w=" + wname + " n=" + std::to_string(n) +
                                     " p=" + format_double(p) + " ratio " +
                                     format_double(ratio) + " > " +
                                     format_double(rhs));
                    }
                }
            }
            return a.done("design/srs ratio stays under the bound");
        });
    }
    run.add("ratio_bound_hand_value", [&] {
        const distribution uni = make_uniform(0.0, 1.0);
        const weight w1 = make_weight_constant_one();
        const prss_design design = make_design(2, 0.3);
        const double ratio =
            (gwe_prss(uni, w1, design).value / gwe_srs(uni, w1, 2)).value();
        agg a;
        a.expect(near_abs(ratio, 16.0 / 9.0, 1e-9),
                 "ratio " + format_double(ratio));
        a.expect(near_abs(bound_ratio_rhs(design).value(), 16.0, 1e-9),
                 "bound rhs");
        a.expect(ratio <= 16.0, "ratio exceeds the bound");
        return a.done("hand-computed ratio 16/9 under bound 16");
    });
}

void suite_symmetry(suite_runner& run) {
    const std::vector<std::pair<std::string, distribution>> dists = {
        {"uniform_sym", make_uniform(-1.0, 1.0)},
        {"triangle_sym", make_symmetric_triangular()},
    };
    const std::vector<std::pair<std::string, weight>> weights = {
        {"x", make_weight_odd_power(1)},
        {"x3", make_weight_odd_power(3)},
    };
    for (const auto& [dname, d] : dists) {
        for (const auto& [wname, w] : weights) {
            run.add("odd_weight_zero_" + dname + "_" + wname, [&] {
                agg a;
                for (int n : {1, 3, 5}) {
                    const auto v = check_symmetry_characterization(d, w, n);
                    a.expect(v.holds == verdict3::yes,
                             "n=" + std::to_string(n) +
                                 " |value|=" + format_double(std::fabs(v.lhs)));
                }
                return a.done("values vanish for odd set sizes");
            });
        }
    }
    run.add("asymmetric_nonzero", [&] {
        const auto v = check_symmetry_characterization(make_exponential(1.0),
                                                       make_weight_odd_power(1), 3);
        agg a;
        a.expect(v.holds == verdict3::no,
                 std::string("verdict ") + verdict_name(v.holds));
        a.expect(std::fabs(v.lhs) > 1e-4,
                 "magnitude " + format_double(std::fabs(v.lhs)));
        bool sym_flag = true;
        for (const auto& [key, ok] : v.preconditions)
            if (key == "density_symmetric_about_median") sym_flag = ok;
        a.expect(!sym_flag, "density grid check should detect asymmetry");
        return a.done("asymmetric density yields a clearly nonzero value");
    });
}

void suite_characterization(suite_runner& run) {
    run.add("exponential_unit_rate_consistent", [&] {
        const auto v = check_exponential_characterization(make_exponential(1.0),
                                                          {0, 1, 2}, {1, 2, 3});
        return std::pair{v.holds == verdict3::yes,
                         std::string("verdict ") + verdict_name(v.holds) + "; " +
                             v.note};
    });
    run.add("exponential_scaled_inconsistent", [&] {
        const auto v = check_exponential_characterization(make_exponential(2.0),
                                                          {0, 1, 2}, {1, 2, 3});
        return std::pair{v.holds == verdict3::no,
                         std::string("verdict ") + verdict_name(v.holds) + "; " +
                             v.note};
    });
    run.add("uniform_inconsistent", [&] {
        const auto v = check_exponential_characterization(make_uniform(0.0, 1.0),
                                                          {0, 1, 2}, {1, 2, 3});
        return std::pair{v.holds == verdict3::no,
                         std::string("verdict ") + verdict_name(v.holds) + "; " +
                             v.note};
    });
    run.add("scale_power_law", [&] {
        // rate scaling collapses after multiplying by lambda^{n(m-1)}
        agg a;
        for (int m : {0, 1, 2}) {
            const weight w = make_weight_power(double(m));
            for (int n : {1, 2, 3}) {
                const prss_design d = make_design(n, 0.3);
                double ref = 0.0;
                bool first = true;
                for (double lam : {0.5, 1.0, 2.0, 4.0}) {
                    const double v =
                        gwe_prss(make_exponential(lam), w, d).value.value() *
                        std::pow(lam, double(n) * (double(m) - 1.0));
                    if (first) {
                        ref = v;
                        first = false;
                    } else {
                        a.expect(near_rel(v, ref, 1e-8),
                                 "m=" + std::to_string(m) + " n=" +
                                     std::to_string(n) + " rate " +
                                     format_double(lam));
                    }
                }
            }
        }
        return a.done("rate scaling collapses to a single constant");
    });
}

void suite_orders(suite_runner& run) {
    const distribution uni = make_uniform(0.0, 1.0);
    const distribution exp1 = make_exponential(1.0);
    const distribution exp2 = make_exponential(2.0);
    const auto [tri_up, tri_dn] = make_triangular_pair();
    const weight wx = make_weight_power(1.0);
    const weight w1 = make_weight_constant_one();

    run.add("reflexive_relations", [&] {
        agg a;
        const std::vector<std::pair<std::string, distribution>> ds = {
            {"uniform", uni}, {"exponential", exp1}};
        for (const auto& [nm, d] : ds) {
            const auto grid = make_support_grid(d, d);
            const auto ugrid = make_unit_grid();
            a.expect(check_st(d, d, grid).holds == verdict3::yes, nm + " st");
            a.expect(check_lr(d, d, grid).holds == verdict3::yes, nm + " lr");
            a.expect(check_hr(d, d, grid).holds == verdict3::yes, nm + " hr");
            a.expect(check_disp(d, d, ugrid).holds == verdict3::yes, nm + " disp");
            for (relation rel : {relation::convex, relation::star,
                                 relation::superadditive})
                a.expect(check_transform_order(d, d, rel, grid).holds ==
                             verdict3::yes,
                         nm + " " + relation_name(rel));
        }
        return a.done("all relations reflexive");
    });
    run.add("scaled_exponential_orders", [&] {
        const auto grid = make_support_grid(exp2, exp1);
        const auto ugrid = make_unit_grid();
        agg a;
        a.expect(check_st(exp2, exp1, grid).holds == verdict3::yes, "st");
        a.expect(check_lr(exp2, exp1, grid).holds == verdict3::yes, "lr");
        a.expect(check_hr(exp2, exp1, grid).holds == verdict3::yes, "hr");
        a.expect(check_disp(exp2, exp1, ugrid).holds == verdict3::yes, "disp");
        return a.done("rate-2 precedes rate-1 in all four relations");
    });
    run.add("triangular_pair_orders", [&] {
        const auto grid = make_support_grid(tri_up, tri_dn);
        const auto ugrid = make_unit_grid();
        agg a;
        const auto st = check_st(tri_up, tri_dn, grid);
        a.expect(st.holds == verdict3::no && st.witness.has_value(),
                 "st should fail with a witness");
        if (st.witness)
            a.expect((1.0 - tri_up.cdf(*st.witness)) >
                         (1.0 - tri_dn.cdf(*st.witness)),
                     "witness does not violate the survival inequality");
        a.expect(check_disp(tri_up, tri_dn, ugrid).holds == verdict3::no,
                 "disp should fail");
        a.expect(check_hr(tri_up, tri_dn, grid).holds == verdict3::no,
                 "hr should fail");
        a.expect(check_lr(tri_dn, tri_up, grid).holds == verdict3::yes,
                 "reversed lr should hold");
        return a.done("triangular pair shows the counterexample pattern");
    });
    run.add("implication_chain", [&] {
        const std::vector<std::pair<distribution, distribution>> pairs = {
            {exp2, exp1}, {exp1, exp2}, {tri_dn, tri_up},
            {tri_up, tri_dn}, {uni, uni}, {exp1, exp1}};
        agg a;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const auto& [X, Y] = pairs[i];
            const auto grid = make_support_grid(X, Y);
            const bool lr = check_lr(X, Y, grid).holds == verdict3::yes;
            const bool hr = check_hr(X, Y, grid).holds == verdict3::yes;
            const bool st = check_st(X, Y, grid).holds == verdict3::yes;
            a.expect(!lr || hr, "pair " + std::to_string(i) + ": lr without hr");
            a.expect(!hr || st, "pair " + std::to_string(i) + ": hr without st");
        }
        return a.done("likelihood ratio implies hazard rate implies survival");
    });
    run.add("dispersive_weight_inconclusive_unbounded", [&] {
        const auto v = verify_dispersive_weight_comparison(exp2, exp1, wx, wx,
                                                           make_design(2, 0.3));
        agg a;
        a.expect(v.holds == verdict3::inconclusive,
                 std::string("verdict ") + verdict_name(v.holds));
        bool disp_ok = false, upper_ok = true;
        for (const auto& [key, b] : v.preconditions) {
            if (key == "dispersive_order") disp_ok = b;
            if (key == "equal_finite_upper_endpoints") upper_ok = b;
        }
        a.expect(disp_ok, "dispersive precondition should hold");
        a.expect(!upper_ok, "endpoint precondition should fail");
        a.expect(v.lhs <= v.rhs + 1e-10, "inequality still holds numerically");
        return a.done("unbounded supports stay inconclusive");
    });
    run.add("dispersive_weight_conclusive_bounded", [&] {
        const auto v = verify_dispersive_weight_comparison(
            make_uniform(0.2, 1.0), uni, wx, wx, make_design(2, 0.3));
        agg a;
        a.expect(v.holds == verdict3::yes,
                 std::string("verdict ") + verdict_name(v.holds));
        a.expect(v.lhs <= v.rhs + 1e-10, "asserted inequality");
        return a.done("bounded shifted-uniform comparison concludes");
    });
    run.add("delta_condition_equal_weight_triangular", [&] {
        const auto v = verify_delta_condition_comparison(tri_up, wx, tri_dn, wx,
                                                         make_design(2, 0.3));
        agg a;
        a.expect(v.holds == verdict3::yes,
                 std::string("verdict ") + verdict_name(v.holds));
        a.expect(v.lhs <= v.rhs + 1e-10, "asserted inequality");
        return a.done("equal-weight comparison concludes");
    });
    run.add("delta_condition_mixed_weight_triangular", [&] {
        const auto v = verify_delta_condition_comparison(
            tri_up, make_weight_power(2.0), tri_dn, wx, make_design(2, 0.3));
        agg a;
        a.expect(v.holds == verdict3::inconclusive,
                 "delta sign change should force inconclusive, got " +
                     std::string(verdict_name(v.holds)));
        a.expect(v.lhs <= v.rhs + 1e-10, "conclusion still holds numerically");
        return a.done("mixed weights flip the delta sign near zero");
    });
    run.add("delta_condition_exponential_scaled", [&] {
        const auto v = verify_delta_condition_comparison(exp2, w1, exp1, w1,
                                                         make_design(3, 0.3));
        agg a;
        a.expect(v.holds == verdict3::yes,
                 std::string("verdict ") + verdict_name(v.holds));
        a.expect(v.lhs <= v.rhs + 1e-10, "asserted inequality");
        return a.done("scaled exponential pair concludes");
    });
    run.add("delta_condition_identity", [&] {
        const auto v =
            verify_delta_condition_comparison(uni, wx, uni, wx, make_design(2, 0.3));
        agg a;
        a.expect(v.holds == verdict3::yes,
                 std::string("verdict ") + verdict_name(v.holds));
        a.expect(near_abs(v.lhs, v.rhs, 1e-12), "equal pair values differ");
        return a.done("identical pair compares equal");
    });
    run.add("transform_identity_equality", [&] {
        const auto v = verify_transform_comparison(
            exp1, [](double x) { return x; }, [](double) { return 1.0; }, wx,
            make_design(2, 0.3));
        agg a;
        a.expect(v.holds == verdict3::yes,
                 std::string("verdict ") + verdict_name(v.holds));
        a.expect(near_abs(v.lhs, v.rhs, 1e-9), "identity sides differ");
        return a.done("identity transform compares equal");
    });
    run.add("convex_transform_chain", [&] {
        const distribution z =
            transform(exp1, [](double x) { return std::expm1(x); },
                      [](double x) { return std::exp(x); },
                      [](double y) { return std::log1p(y); });
        const auto grid = make_support_grid(exp1, z);
        agg a;
        a.expect(check_transform_order(exp1, z, relation::convex, grid).holds ==
                     verdict3::yes, "convex");
        a.expect(check_transform_order(exp1, z, relation::star, grid).holds ==
                     verdict3::yes, "star");
        a.expect(check_transform_order(exp1, z, relation::superadditive,
                                       grid).holds == verdict3::yes,
                 "superadditive");
        return a.done("shape-order chain holds for the growth transform");
    });
}

int cmd_verify(const run_config& cfg, std::ostream& os) {
    static const std::vector<std::string> known = {
        "examples", "bounds", "symmetry", "characterization", "orders", "all"};
    if (std::find(known.begin(), known.end(), cfg.suite) == known.end())
        throw config_error("unknown verify suite: " + cfg.suite);

    suite_runner run;
    if (cfg.suite == "examples" || cfg.suite == "all") suite_examples(run);
    if (cfg.suite == "bounds" || cfg.suite == "all") suite_bounds(run);
    if (cfg.suite == "symmetry" || cfg.suite == "all") suite_symmetry(run);
    if (cfg.suite == "characterization" || cfg.suite == "all")
        suite_characterization(run);
    if (cfg.suite == "orders" || cfg.suite == "all") suite_orders(run);

    int failed = 0;
    bool accuracy_only = true;
    for (const auto& r : run.results) {
        if (r.passed) continue;
        ++failed;
        if (!r.accuracy) accuracy_only = false;
    }

    if (cfg.format == "csv") {
        os << "name,passed,detail\n";
        for (const auto& r : run.results)
            os << csv_escape(r.name) << ',' << (r.passed ? "true" : "false")
               << ',' << csv_escape(r.detail) << '\n';
    } else {
        json j;
        j["command"] = "verify";
        j["suite"] = cfg.suite;
        json checks = json::array();
        for (const auto& r : run.results)
            checks.push_back(json{{"name", r.name},
                                  {"passed", r.passed},
                                  {"detail", r.detail}});
        j["checks"] = checks;
        j["total"] = run.results.size();
        j["failed"] = failed;
        os << j.dump(2) << '\n';
    }
    if (failed == 0) return exit_ok;
    return accuracy_only ? exit_accuracy : exit_assertion;
}

// ----------------------------------------------------------------- sample

int cmd_sample(const run_config& cfg, std::ostream& os) {
    if (cfg.distributions.empty())
        throw config_error("sample needs a distribution");
    const distribution d = distribution_from_json(cfg.distributions.front());
    const prss_design design =
        make_design(cfg.n_values.front(), cfg.p_values.front(), cfg.cycles);
    random_source rng(cfg.seed);
    const prss_dataset ds = sample_prss(d, design, rng);

    if (cfg.format == "csv") {
        os << "cycle,set_index,rank,value\n";
        for (const auto& row : ds.rows)
            os << row.cycle << ',' << row.set_index << ',' << row.rank << ','
               << format_double(row.value) << '\n';
    } else {
        json j;
        j["command"] = "sample";
        j["design"] = json{{"n", design.n}, {"p", design.p}, {"a", design.a},
                           {"b", design.b}, {"cycles", design.cycles},
                           {"median_design", design.median_design}};
        j["seed"] = cfg.seed;
        json rows = json::array();
        for (const auto& row : ds.rows)
            rows.push_back(json{{"cycle", row.cycle},
                                {"set_index", row.set_index},
                                {"rank", row.rank},
                                {"value", row.value}});
        j["rows"] = rows;
        os << j.dump(2) << '\n';
    }
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"general weighted extropy of percentile ranked-set designs"};
    app.name("gwe");
    app.require_subcommand(1);

    struct {
        std::string config_path, out_path, format, suite;
        std::vector<std::string> methods, dists, weights;
        std::vector<int> ns;
        std::vector<double> ps;
        std::uint64_t seed = 1;
        long reps = 100000;
        int cycles = 1;
    } fl;

    auto add_common = [&fl](CLI::App* sub) {
        sub->add_option("--config", fl.config_path, "JSON config file");
        sub->add_option("--out", fl.out_path, "output path (default stdout)");
        sub->add_option("--format", fl.format, "output format: json or csv");
        sub->add_option("--seed", fl.seed, "random seed");
        sub->add_option("--reps", fl.reps, "Monte Carlo replications");
    };
    CLI::App* c = app.add_subcommand(
        "compute", "evaluate the weighted measure over a parameter grid");
    add_common(c);
    c->add_option("--method", fl.methods,
                  "quadrature, closed-form, or monte-carlo");
    c->add_option("--distribution", fl.dists, "distribution descriptor (JSON)");
    c->add_option("--weight", fl.weights, "weight descriptor (JSON)");
    c->add_option("--n", fl.ns, "set sizes");
    c->add_option("--p", fl.ps, "percentile levels");
    CLI::App* v = app.add_subcommand("verify", "run a verification suite");
    add_common(v);
    v->add_option("--suite", fl.suite,
                  "examples, bounds, symmetry, characterization, orders, all");
    CLI::App* s = app.add_subcommand("sample", "draw a ranked-design dataset");
    add_common(s);
    s->add_option("--distribution", fl.dists, "distribution descriptor (JSON)");
    s->add_option("--n", fl.ns, "set size");
    s->add_option("--p", fl.ps, "percentile level");
    s->add_option("--cycles", fl.cycles, "number of cycles");

    std::vector<const char*> argv;
    argv.push_back("gwe");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_config;
    }

    try {
        run_config cfg;
        if (!fl.config_path.empty()) {
            std::ifstream in(fl.config_path);
            if (!in)
                throw config_error("cannot open config file: " + fl.config_path);
            cfg = run_config_from_json(json::parse(in));
        }
        CLI::App* sub = app.get_subcommands().front();
        cfg.command = sub->get_name();
        if (sub->count("--out")) cfg.out = fl.out_path;
        if (sub->count("--format")) cfg.format = fl.format;
        if (sub->count("--seed")) cfg.seed = fl.seed;
        if (sub->count("--reps")) cfg.reps = fl.reps;
        if (cfg.command == "verify" && sub->count("--suite")) cfg.suite = fl.suite;
        if (cfg.command == "compute" && sub->count("--method")) {
            cfg.methods.clear();
            for (const auto& m : fl.methods) cfg.methods.push_back(m);
        }
        if (cfg.command != "verify") {
            if (sub->count("--distribution")) {
                cfg.distributions.clear();
                for (const auto& dstr : fl.dists)
                    cfg.distributions.push_back(json::parse(dstr));
            }
            if (sub->count("--n")) cfg.n_values = fl.ns;
            if (sub->count("--p")) cfg.p_values = fl.ps;
        }
        if (cfg.command == "compute" && sub->count("--weight")) {
            cfg.weights.clear();
            for (const auto& wstr : fl.weights)
                cfg.weights.push_back(json::parse(wstr));
        }
        if (cfg.command == "sample" && sub->count("--cycles"))
            cfg.cycles = fl.cycles;
        if (cfg.format != "json" && cfg.format != "csv")
            throw config_error("format must be \"json\" or \"csv\"");

        std::ofstream file;
        std::ostream* os = &out;
        if (!cfg.out.empty()) {
            file.open(cfg.out, std::ios::binary);
            if (!file)
                throw config_error("cannot open output file: " + cfg.out);
            os = &file;
        }
        if (cfg.command == "compute") return cmd_compute(cfg, *os);
        if (cfg.command == "verify") return cmd_verify(cfg, *os);
        return cmd_sample(cfg, *os);
    } catch (const json::exception& e) {
        err << "config error: " << e.what() << "\n";
        return exit_config;
    } catch (const config_error& e) {
        err << "config error: " << e.what() << "\n";
        return exit_config;
    } catch (const accuracy_error& e) {
        err << "accuracy error: " << e.what() << "\n";
        return exit_accuracy;
    } catch (const mc_error& e) {
        err << "accuracy error: " << e.what() << "\n";
        return exit_accuracy;
    } catch (const parameter_error& e) {
        err << "config error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_assertion;
    }
}

}  // namespace gwe::cli
