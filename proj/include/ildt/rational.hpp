#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "ildt/checked.hpp"
#include "ildt/error.hpp"

namespace ildt {

// Exact rational on checked 64-bit integers, always stored reduced with a
// positive denominator. Used for densification ratios and triad-ratio limits,
// where floating point would hide whether a tolerance genuinely holds.
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    Rational() = default;
    Rational(int64_t n, int64_t d = 1) : num(n), den(d) {
        if (den == 0) throw Error("rational with zero denominator");
        if (den < 0) {
            num = checked_sub(0, num);
            den = checked_sub(0, den);
        }
        int64_t g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    Rational operator+(const Rational& o) const {
        return Rational(checked_add(checked_mul(num, o.den), checked_mul(o.num, den)),
                        checked_mul(den, o.den));
    }
    Rational operator-(const Rational& o) const {
        return Rational(checked_sub(checked_mul(num, o.den), checked_mul(o.num, den)),
                        checked_mul(den, o.den));
    }
    Rational operator*(const Rational& o) const {
        return Rational(checked_mul(num, o.num), checked_mul(den, o.den));
    }
    Rational operator/(const Rational& o) const {
        if (o.num == 0) throw Error("rational division by zero");
        return Rational(checked_mul(num, o.den), checked_mul(den, o.num));
    }
    Rational abs() const { return num < 0 ? Rational(checked_sub(0, num), den) : *this; }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return checked_mul(num, o.den) < checked_mul(o.num, den);
    }
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace ildt
