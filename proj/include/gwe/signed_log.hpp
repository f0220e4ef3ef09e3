#pragma once

#include <cmath>
#include <cstdlib>
#include <limits>

namespace gwe {

// Sign plus natural-log magnitude. Carries products of many small or large
// factors (stratum expectations, factorial ratios) without under/overflow.
// Invariant: sign == 0 iff log_mag == -inf.
struct signed_log {
    int sign = 0;
    double log_mag = -std::numeric_limits<double>::infinity();

    static signed_log from_value(double v) {
        if (v == 0.0) return {};
        return {v > 0.0 ? 1 : -1, std::log(std::fabs(v))};
    }

    static signed_log from_log(int sign, double log_mag) {
        if (sign == 0) return {};
        return {sign, log_mag};
    }

    double value() const {
        if (sign == 0) return 0.0;
        return sign * std::exp(log_mag);
    }

    bool is_zero() const { return sign == 0; }

    signed_log operator*(const signed_log& o) const {
        if (sign == 0 || o.sign == 0) return {};
        return {sign * o.sign, log_mag + o.log_mag};
    }

    signed_log& operator*=(const signed_log& o) {
        *this = *this * o;
        return *this;
    }

    // division by zero yields an infinite magnitude with the numerator's sign
    signed_log operator/(const signed_log& o) const {
        if (sign == 0) return {};
        if (o.sign == 0)
            return {sign, std::numeric_limits<double>::infinity()};
        return {sign * o.sign, log_mag - o.log_mag};
    }

    // k >= 0; 0^0 == 1
    signed_log pow_int(int k) const {
        if (k == 0) return {1, 0.0};
        if (sign == 0) return {};
        int s = (sign < 0 && (k % 2 != 0)) ? -1 : 1;
        return {s, log_mag * k};
    }

    signed_log abs() const {
        if (sign == 0) return {};
        return {1, log_mag};
    }
};

inline bool operator<(const signed_log& a, const signed_log& b) {
    if (a.sign != b.sign) return a.sign < b.sign;
    if (a.sign > 0) return a.log_mag < b.log_mag;
    if (a.sign < 0) return a.log_mag > b.log_mag;
    return false;
}

inline bool operator<=(const signed_log& a, const signed_log& b) {
    return !(b < a);
}

}  // namespace gwe
