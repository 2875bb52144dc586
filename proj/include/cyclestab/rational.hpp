#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "cyclestab/errors.hpp"

namespace cyclestab {

// Exact fraction with a positive denominator. Parameters like alpha are
// carried exactly so that bound checks never go through floating point.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }
    explicit Rational(long long n) : num(n), den(1) {}

    void normalize() {
        if (den == 0) throw ParamError("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double as_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    bool operator==(const Rational& o) const = default;
};

// Parses "p/q" or a bare integer.
inline Rational parse_rational(std::string_view s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(std::stoll(std::string(s)));
        }
        long long p = std::stoll(std::string(s.substr(0, slash)));
        long long q = std::stoll(std::string(s.substr(slash + 1)));
        return Rational(p, q);
    } catch (const std::exception&) {
        throw ParamError("cannot parse rational: '" + std::string(s) + "'");
    }
}

// a/b rounded toward negative infinity, b > 0.
inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Smallest z >= 0 with z*z*b >= a (i.e. z = ceil(sqrt(a/b))), a >= 0, b > 0.
inline long long ceil_sqrt_ratio(long long a, long long b) {
    if (a <= 0) return 0;
    long long z = static_cast<long long>(std::sqrt(static_cast<double>(a) / static_cast<double>(b)));
    while (z > 0 && static_cast<__int128>(z - 1) * (z - 1) * b >= a) --z;
    while (static_cast<__int128>(z) * z * b < a) ++z;
    return z;
}

}  // namespace cyclestab
