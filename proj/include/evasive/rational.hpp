#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "evasive/errors.hpp"

namespace evasive {

/// Exact rational with normalized sign and lowest terms.
struct Rational {
    std::int64_t num;
    std::int64_t den;

    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw ParameterError("Rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    static Rational zero() { return Rational(0, 1); }
    static Rational one() { return Rational(1, 1); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

} // namespace evasive
