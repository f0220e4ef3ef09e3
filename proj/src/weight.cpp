#include "gwe/weight.hpp"

#include <cmath>
#include <string>

#include "gwe/errors.hpp"

namespace gwe {

namespace {
bool is_odd_integer(double m) {
    const double r = std::round(m);
    return std::fabs(m - r) < 1e-12 && std::fmod(std::fabs(r), 2.0) == 1.0;
}
}  // namespace

weight make_weight_power(double m) {
    if (!(m >= 0.0))
        throw parameter_error("power weight requires m >= 0");
    weight w;
    w.kind = m == 0.0 ? "constant_one" : "power";
    w.name = m == 0.0 ? "1" : "x^" + std::to_string(m);
    w.m = m;
    w.is_power = true;
    w.non_negative = true;  // on the intended domain x >= 0
    w.increasing = true;
    w.odd = is_odd_integer(m);
    if (m == 0.0) {
        w.eval = [](double) { return 1.0; };
    } else {
        w.eval = [m](double x) { return std::pow(x, m); };
    }
    return w;
}

weight make_weight_constant_one() { return make_weight_power(0.0); }

weight make_weight_odd_power(int m) {
    if (m < 0 || m % 2 == 0)
        throw parameter_error("odd power weight requires an odd non-negative integer m");
    weight w;
    w.kind = "odd_power";
    w.name = "x^" + std::to_string(m);
    w.m = m;
    w.is_power = true;
    w.non_negative = false;  // negative for x < 0
    w.increasing = true;
    w.odd = true;
    w.eval = [m](double x) { return std::pow(x, double(m)); };
    return w;
}

}  // namespace gwe
