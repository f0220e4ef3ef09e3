#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gwe/distribution.hpp"
#include "gwe/orders.hpp"
#include "gwe/prss.hpp"
#include "gwe/weight.hpp"

namespace gwe {

// ordered_json keeps key order stable so serialized configs round-trip
using json = nlohmann::ordered_json;

// {"family": "power"|"exponential"|"pareto"|"uniform"|"triangular_up"|
//  "triangular_down", "params": {...}}; unknown family -> config_error
distribution distribution_from_json(const json& j);
json distribution_to_json(const distribution& d);

// {"kind": "power", "m": ...} | {"kind": "constant_one"} |
// {"kind": "odd_power", "m": odd integer}
weight weight_from_json(const json& j);
json weight_to_json(const weight& w);

// {"n": int, "p": real, "cycles": int (optional, default 1)}
prss_design design_from_json(const json& j);
json design_to_json(const prss_design& d);

// {value, sign, log_magnitude, method, error_estimate, factors[],
//  design:{n,p,a,b}}; value/log_magnitude are null when not representable
json gwe_result_to_json(const gwe_result& r);

json verdict_to_json(const comparison_verdict& v);
json order_report_to_json(const order_check_report& r);

struct run_config {
    std::string command;  // "compute" | "verify" | "sample"
    std::vector<json> distributions;
    std::vector<json> weights;
    std::vector<int> n_values{1};
    std::vector<double> p_values{0.3};
    int cycles = 1;
    std::vector<std::string> methods{"quadrature"};
    std::string suite = "all";
    std::uint64_t seed = 1;
    long reps = 100000;
    std::string format = "json";  // "json" | "csv"
    std::string out;              // empty -> stdout
};

// Accepts singular descriptor keys ("distribution", "weight", "method") or
// plural list keys; scalars are promoted to one-element lists. Design grid
// keys n/p may be scalars or arrays. Parse(serialize(parse(x))) == parse(x).
run_config run_config_from_json(const json& j);
json run_config_to_json(const run_config& c);

// 17 significant digits, round-trip exact for doubles
std::string format_double(double v);

}  // namespace gwe
