#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rainbow {

// Exact rational over int64 storage. Always reduced, denominator > 0.
// Intermediate products go through __int128; results that do not fit back
// into int64 throw std::overflow_error instead of wrapping.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    Rational(int64_t value) : num_(value), den_(1) {}

    Rational(int64_t num, int64_t den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        __int128 n = num, d = den;
        if (d < 0) { n = -n; d = -d; }
        normalize_(n, d);
    }

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }

    Rational operator-() const { return Rational(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128_((__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_,
                        (__int128)a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128_((__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_,
                        (__int128)a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128_((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return from128_((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __int128 lhs = (__int128)a.num_ * b.den_;
        __int128 rhs = (__int128)b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Canonical "p/q" rendering, e.g. "2/3", "0/1", "50/1".
    std::string to_fraction_string() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

private:
    static Rational from128_(__int128 n, __int128 d) {
        Rational r;
        if (d < 0) { n = -n; d = -d; }
        r.normalize_(n, d);
        return r;
    }

    void normalize_(__int128 n, __int128 d) {
        __int128 g = gcd128_(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("Rational: value does not fit int64");
        num_ = static_cast<int64_t>(n);
        den_ = static_cast<int64_t>(d);
    }

    static __int128 gcd128_(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    int64_t num_;
    int64_t den_;
};

} // namespace rainbow
