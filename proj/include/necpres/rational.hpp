#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace necpres {

// Exact rational with a small normalized representation. Winner logic for
// Copeland^alpha must detect alpha-induced ties exactly, so no floating
// point is allowed anywhere near scores.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }
    explicit Rational(std::int64_t n) : num(n), den(1) {}

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a) { return Rational(-a.num, a.den); }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// Tie value for Copeland^alpha, restricted to rationals in [0,1].
struct Alpha {
    Rational value;

    Alpha() : value(0, 1) {}
    Alpha(std::int64_t n, std::int64_t d) : value(n, d) {
        if (value.num < 0 || value.num > value.den)
            throw std::invalid_argument("alpha must lie in [0,1]");
    }
    std::int64_t num() const { return value.num; }
    std::int64_t den() const { return value.den; }
    std::string str() const { return std::to_string(value.num) + "/" + std::to_string(value.den); }
};

}  // namespace necpres
