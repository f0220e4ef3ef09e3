#include "gwe/json_io.hpp"

#include <cstdio>

#include "gwe/errors.hpp"

namespace gwe {

distribution distribution_from_json(const json& j) {
    if (!j.is_object() || !j.contains("family"))
        throw config_error("distribution descriptor needs a \"family\" key");
    const std::string fam = j.at("family").get<std::string>();
    const json params = j.value("params", json::object());
    auto need = [&params, &fam](const char* key) {
        if (!params.contains(key))
            throw config_error("distribution \"" + fam + "\" needs parameter \"" +
                               key + "\"");
        if (!params.at(key).is_number())
            throw config_error("parameter \"" + std::string(key) +
                               "\" of \"" + fam + "\" must be numeric");
        return params.at(key).get<double>();
    };
    if (fam == "power") return make_power(need("theta"));
    if (fam == "exponential") return make_exponential(need("lambda"));
    if (fam == "pareto") return make_pareto(need("alpha"));
    if (fam == "uniform")
        return make_uniform(params.value("low", 0.0), params.value("high", 1.0));
    if (fam == "triangular_up") return make_triangular_pair().first;
    if (fam == "triangular_down") return make_triangular_pair().second;
    throw config_error("unknown distribution family: " + fam);
}

json distribution_to_json(const distribution& d) {
    json params = json::object();
    for (const auto& [name, value] : d.params) params[name] = value;
    return json{{"family", d.family}, {"params", params}};
}

weight weight_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw config_error("weight descriptor needs a \"kind\" key");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "constant_one") return make_weight_constant_one();
    if (!j.contains("m"))
        throw config_error("weight kind \"" + kind + "\" needs exponent \"m\"");
    if (kind == "power") return make_weight_power(j.at("m").get<double>());
    if (kind == "odd_power") return make_weight_odd_power(j.at("m").get<int>());
    throw config_error("unknown weight kind: " + kind);
}

json weight_to_json(const weight& w) {
    json j{{"kind", w.kind}};
    if (w.kind != "constant_one")
        j["m"] = (w.kind == "odd_power") ? json(int(w.m)) : json(w.m);
    return j;
}

prss_design design_from_json(const json& j) {
    if (!j.is_object())
        throw config_error("design descriptor must be an object");
    if (!j.contains("n") || !j.contains("p"))
        throw config_error("design descriptor needs \"n\" and \"p\"");
    return make_design(j.at("n").get<int>(), j.at("p").get<double>(),
                       j.value("cycles", 1));
}

json design_to_json(const prss_design& d) {
    return json{{"n", d.n}, {"p", d.p}, {"cycles", d.cycles}};
}

namespace {

json design_report(const prss_design& d) {
    return json{{"n", d.n}, {"p", d.p}, {"a", d.a}, {"b", d.b},
                {"median_design", d.median_design}};
}

}  // namespace

json gwe_result_to_json(const gwe_result& r) {
    json j;
    j["value"] = r.value.value();  // non-finite serializes as null
    j["sign"] = r.value.sign;
    j["log_magnitude"] = r.value.log_mag;
    j["method"] = r.method;
    j["error_estimate"] = r.error_estimate;
    json fs = json::array();
    for (const auto& f : r.factors)
        fs.push_back(json{{"rank", f.rank},
                          {"count", f.count},
                          {"expectation", f.expectation},
                          {"abs_error", f.abs_error}});
    j["factors"] = fs;
    j["design"] = design_report(r.design);
    return j;
}

json verdict_to_json(const comparison_verdict& v) {
    json pre = json::object();
    for (const auto& [name, ok] : v.preconditions) pre[name] = ok;
    json j;
    j["theorem"] = v.check;
    j["preconditions"] = pre;
    j["holds"] = verdict_name(v.holds);
    j["lhs"] = v.lhs;
    j["rhs"] = v.rhs;
    if (v.witness) j["witness"] = *v.witness;
    j["grid_size"] = v.grid_size;
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

json order_report_to_json(const order_check_report& r) {
    json j;
    j["relation"] = relation_name(r.rel);
    j["holds"] = verdict_name(r.holds);
    if (r.witness) j["witness"] = *r.witness;
    if (r.witness2) j["witness2"] = *r.witness2;
    j["grid_size"] = r.grid_size;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

run_config run_config_from_json(const json& j) {
    if (!j.is_object())
        throw config_error("config must be a JSON object");
    run_config c;
    c.command = j.value("command", "");

    auto list_of = [&j](const char* plural, const char* singular) {
        std::vector<json> out;
        if (j.contains(plural)) {
            const json& v = j.at(plural);
            if (!v.is_array())
                throw config_error(std::string("\"") + plural + "\" must be an array");
            for (const auto& e : v) out.push_back(e);
        } else if (j.contains(singular)) {
            out.push_back(j.at(singular));
        }
        return out;
    };
    c.distributions = list_of("distributions", "distribution");
    c.weights = list_of("weights", "weight");

    auto int_list = [&j](const char* plural, const char* singular,
                         std::vector<int> def) {
        for (const char* key : {plural, singular}) {
            if (!j.contains(key)) continue;
            const json& v = j.at(key);
            std::vector<int> out;
            if (v.is_array())
                for (const auto& e : v) out.push_back(e.get<int>());
            else
                out.push_back(v.get<int>());
            return out;
        }
        return def;
    };
    auto real_list = [&j](const char* plural, const char* singular,
                          std::vector<double> def) {
        for (const char* key : {plural, singular}) {
            if (!j.contains(key)) continue;
            const json& v = j.at(key);
            std::vector<double> out;
            if (v.is_array())
                for (const auto& e : v) out.push_back(e.get<double>());
            else
                out.push_back(v.get<double>());
            return out;
        }
        return def;
    };
    c.n_values = int_list("n_values", "n", c.n_values);
    c.p_values = real_list("p_values", "p", c.p_values);
    c.cycles = j.value("cycles", c.cycles);

    if (j.contains("design")) {
        const prss_design d = design_from_json(j.at("design"));
        c.n_values = {d.n};
        c.p_values = {d.p};
        c.cycles = d.cycles;
    }

    if (j.contains("methods")) {
        const json& v = j.at("methods");
        c.methods.clear();
        if (v.is_array())
            for (const auto& e : v) c.methods.push_back(e.get<std::string>());
        else
            c.methods.push_back(v.get<std::string>());
    } else if (j.contains("method")) {
        c.methods = {j.at("method").get<std::string>()};
    }

    c.suite = j.value("suite", c.suite);
    c.seed = j.value("seed", c.seed);
    c.reps = j.value("reps", c.reps);
    c.format = j.value("format", c.format);
    c.out = j.value("out", c.out);
    if (c.format != "json" && c.format != "csv")
        throw config_error("format must be \"json\" or \"csv\"");
    return c;
}

json run_config_to_json(const run_config& c) {
    json j;
    j["command"] = c.command;
    j["distributions"] = c.distributions;
    j["weights"] = c.weights;
    j["n_values"] = c.n_values;
    j["p_values"] = c.p_values;
    j["cycles"] = c.cycles;
    j["methods"] = c.methods;
    j["suite"] = c.suite;
    j["seed"] = c.seed;
    j["reps"] = c.reps;
    j["format"] = c.format;
    j["out"] = c.out;
    return j;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace gwe
