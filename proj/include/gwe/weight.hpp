#pragma once

#include <functional>
#include <string>

namespace gwe {

// Weight function with declared property flags. Flags are set by the
// constructor and grid-verified in tests; they are never inferred at runtime.
struct weight {
    std::string name;
    std::string kind;     // "power" | "constant_one" | "odd_power"
    double m = 0.0;       // exponent for power kinds
    bool is_power = false;
    bool non_negative = false;
    bool increasing = false;
    bool odd = false;
    std::function<double(double)> eval;
};

// w(x) = x^m for m >= 0, intended for non-negative supports. The odd flag is
// set iff m is an odd integer.
weight make_weight_power(double m);

weight make_weight_constant_one();

// w(x) = x^m for odd integer m; well defined for negative x, not non-negative
weight make_weight_odd_power(int m);

}  // namespace gwe
