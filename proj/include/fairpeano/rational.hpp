#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "fairpeano/errors.hpp"

namespace fairpeano {

// Exact fractions for density arithmetic. Comparisons and products go
// through __int128 so desk-scale graph counts cannot overflow.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw InputError("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    explicit Rational(long long n) : num(n), den(1) {}

    double value() const { return double(num) / double(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend Rational operator-(const Rational& a, const Rational& b) {
        const __int128 n = (__int128)a.num * b.den - (__int128)b.num * a.den;
        const __int128 d = (__int128)a.den * b.den;
        // desk-scale values stay far inside long long after reduction
        __int128 x = n < 0 ? -n : n;
        __int128 y = d;
        while (y != 0) {
            const __int128 t = x % y;
            x = y;
            y = t;
        }
        if (x == 0) x = 1;
        return Rational((long long)(n / x), (long long)(d / x));
    }
};

}  // namespace fairpeano
