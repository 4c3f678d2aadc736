#ifndef MUBKIT_RATIONAL_HPP
#define MUBKIT_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "mubkit/common.hpp"

namespace mubkit {

// Exact rational with int64 numerator/denominator, always reduced, den > 0.
// Intermediate products go through __int128; anything that would not fit back
// into int64 throws instead of wrapping.
class Rational {
public:
    constexpr Rational() : n_(0), d_(1) {}
    constexpr Rational(long long n) : n_(n), d_(1) {}
    Rational(long long n, long long d) : n_(n), d_(d) { normalize(); }

    long long num() const noexcept { return n_; }
    long long den() const noexcept { return d_; }
    bool is_zero() const noexcept { return n_ == 0; }
    bool is_integer() const noexcept { return d_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        if (a.d_ == 1 && b.d_ == 1) return Rational(checked(static_cast<__int128>(a.n_) + b.n_));
        __int128 n = static_cast<__int128>(a.n_) * b.d_ + static_cast<__int128>(b.n_) * a.d_;
        __int128 d = static_cast<__int128>(a.d_) * b.d_;
        return make(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    Rational operator-() const {
        Rational r;
        r.n_ = -n_;
        r.d_ = d_;
        return r;
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        if (a.d_ == 1 && b.d_ == 1) return Rational(checked(static_cast<__int128>(a.n_) * b.n_));
        return make(static_cast<__int128>(a.n_) * b.n_, static_cast<__int128>(a.d_) * b.d_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.n_ == 0) fail("DivisionByZero", "rational division by zero");
        return make(static_cast<__int128>(a.n_) * b.d_, static_cast<__int128>(a.d_) * b.n_);
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.n_ == b.n_ && a.d_ == b.d_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.n_) * b.d_ < static_cast<__int128>(b.n_) * a.d_;
    }

    double to_double() const { return static_cast<double>(n_) / static_cast<double>(d_); }

    std::string str() const {
        if (d_ == 1) return std::to_string(n_);
        return std::to_string(n_) + "/" + std::to_string(d_);
    }

    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }

private:
    long long n_, d_;

    static long long checked(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) fail("Overflow", "rational arithmetic overflow");
        return static_cast<long long>(v);
    }
    static Rational make(__int128 n, __int128 d) {
        if (d == 0) fail("DivisionByZero", "zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        Rational r;
        r.n_ = checked(n);
        r.d_ = checked(d);
        return r;
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }
    void normalize() { *this = make(n_, d_); }
};

} // namespace mubkit

#endif
