#include "mubkit/cyclo.hpp"

#include <cmath>
#include <numeric>

namespace mubkit {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool prime_power(long long n, long long& q, int& a) {
    if (n < 2) return false;
    long long d = 2;
    while (d * d <= n && n % d != 0) ++d;
    if (d * d > n) d = n; // n prime
    q = d;
    a = 0;
    while (n % q == 0) {
        n /= q;
        ++a;
    }
    return n == 1;
}

long long squarefree_part(long long n, long long& square_root_out) {
    long long s = 1, d = n;
    for (long long f = 2; f * f <= d; ++f) {
        while (d % (f * f) == 0) {
            d /= f * f;
            s *= f;
        }
    }
    square_root_out = s;
    return d;
}

Cyclo Cyclo::root_of_unity(long long order, long long exponent) {
    long long q;
    int a;
    if (order == 1) return Cyclo(Rational(1));
    if (!prime_power(order, q, a)) fail("OrderMismatch", "cyclotomic order must be a prime power");
    Cyclo z;
    z.order_ = order;
    z.q_ = q;
    z.rad_ = 1;
    exponent %= order;
    if (exponent < 0) exponent += order;
    std::vector<Rational> raw(order, Rational(0));
    raw[exponent] = Rational(1);
    z.c_.assign(order - order / q, Rational(0));
    z.reduce_tail(raw);
    z.c_.assign(raw.begin(), raw.begin() + (order - order / q));
    return z;
}

Cyclo Cyclo::scaled(const Rational& r, long long rad) {
    if (rad <= 0) fail("BadParameter", "radicand must be positive");
    long long s;
    long long d = squarefree_part(rad, s);
    Cyclo z(r * Rational(s));
    z.rad_ = d;
    if (z.is_zero()) z.rad_ = 1;
    return z;
}

Cyclo Cyclo::inv_sqrt(long long n) {
    // 1/sqrt(n) = sqrt(d)/(s*d) for n = s^2*d with d squarefree
    if (n <= 0) fail("BadParameter", "inv_sqrt needs n > 0");
    long long s;
    long long d = squarefree_part(n, s);
    return scaled(Rational(1, s * d), d);
}

bool Cyclo::is_zero() const noexcept {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool Cyclo::is_rational() const noexcept {
    if (is_zero()) return true;
    if (rad_ != 1) return false;
    for (size_t k = 1; k < c_.size(); ++k)
        if (!c_[k].is_zero()) return false;
    return true;
}

Rational Cyclo::rational_value() const {
    if (!is_rational()) fail("NotRational", "scalar is not rational");
    return is_zero() ? Rational(0) : c_[0];
}

void Cyclo::reduce_tail(std::vector<Rational>& raw) const {
    // substitute gamma^{(q-1)L/q + r} = -sum_{t<q-1} gamma^{t L/q + r}
    if (order_ == 1) return;
    long long step = order_ / q_;
    for (long long e = order_ - 1; e >= order_ - step; --e) {
        if (raw[e].is_zero()) continue;
        long long r = e - (q_ - 1) * step;
        for (long long t = 0; t + 1 < q_; ++t) raw[t * step + r] -= raw[e];
        raw[e] = Rational(0);
    }
}

Cyclo Cyclo::embedded(long long newOrder) const {
    if (newOrder == order_) return *this;
    if (order_ == 1) {
        Cyclo z = root_of_unity(newOrder, 0);
        for (auto& x : z.c_) x = Rational(0);
        z.c_[0] = c_[0];
        z.rad_ = rad_;
        return z;
    }
    long long f = newOrder / order_;
    Cyclo z = root_of_unity(newOrder, 0);
    for (auto& x : z.c_) x = Rational(0);
    // canonical exponents k < L - L/q map to k*f < L' - L'/q, still canonical
    for (size_t k = 0; k < c_.size(); ++k) z.c_[k * f] = c_[k];
    z.rad_ = rad_;
    return z;
}

void Cyclo::align(Cyclo& a, Cyclo& b) {
    if (a.order_ == b.order_) return;
    if (a.order_ == 1) {
        a = a.embedded(b.order_);
        return;
    }
    if (b.order_ == 1) {
        b = b.embedded(a.order_);
        return;
    }
    if (a.q_ != b.q_) fail("OrderMismatch", "cyclotomic orders with different prime radicals");
    if (a.order_ < b.order_)
        a = a.embedded(b.order_);
    else
        b = b.embedded(a.order_);
}

void Cyclo::fold_radical() {
    // sqrt(2) = gamma_8 - gamma_8^3 lives in the field once L is a multiple of 8
    while (rad_ % 2 == 0 && q_ == 2 && order_ % 8 == 0) {
        Cyclo s2 = root_of_unity(order_, order_ / 8) - root_of_unity(order_, 3 * (order_ / 8));
        Cyclo folded = *this;
        folded.rad_ = rad_ / 2;
        *this = folded * s2;
    }
}

Cyclo operator+(const Cyclo& a0, const Cyclo& b0) {
    Cyclo a = a0, b = b0;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Cyclo::align(a, b);
    if (a.rad_ != b.rad_) {
        a.fold_radical();
        b.fold_radical();
        if (a.rad_ != b.rad_)
            fail("ScaleMismatch", "adding exact scalars with different radicands");
    }
    for (size_t k = 0; k < a.c_.size(); ++k) a.c_[k] += b.c_[k];
    if (a.is_zero()) a.rad_ = 1;
    return a;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo Cyclo::operator-() const {
    Cyclo z = *this;
    for (auto& x : z.c_) x = -x;
    return z;
}

Cyclo operator*(const Cyclo& a0, const Cyclo& b0) {
    Cyclo a = a0, b = b0;
    if (a.is_zero() || b.is_zero()) return Cyclo();
    Cyclo::align(a, b);
    Cyclo z;
    z.order_ = a.order_;
    z.q_ = a.q_;
    long long g = std::gcd(a.rad_, b.rad_);
    z.rad_ = (a.rad_ / g) * (b.rad_ / g);
    Rational gr(g);
    if (a.order_ == 1) {
        z.c_.assign(1, gr * a.c_[0] * b.c_[0]);
        if (z.is_zero()) z.rad_ = 1;
        return z;
    }
    std::vector<Rational> raw(a.order_, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            raw[(i + j) % a.order_] += a.c_[i] * b.c_[j];
        }
    }
    z.c_.assign(a.order_ - a.order_ / a.q_, Rational(0));
    z.reduce_tail(raw);
    for (size_t k = 0; k < z.c_.size(); ++k) z.c_[k] = gr * raw[k];
    if (z.is_zero()) z.rad_ = 1;
    return z;
}

Cyclo operator*(const Rational& r, const Cyclo& a) {
    Cyclo z = a;
    for (auto& x : z.c_) x *= r;
    if (z.is_zero()) z.rad_ = 1;
    return z;
}

Cyclo Cyclo::conj() const {
    if (order_ == 1) return *this;
    std::vector<Rational> raw(order_, Rational(0));
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        raw[(order_ - k) % order_] += c_[k];
    }
    Cyclo z = *this;
    reduce_tail(raw);
    for (size_t k = 0; k < z.c_.size(); ++k) z.c_[k] = raw[k];
    return z;
}

bool Cyclo::operator==(const Cyclo& o) const {
    Cyclo d = *this - o; // throws ScaleMismatch when genuinely incomparable
    return d.is_zero();
}

std::complex<double> Cyclo::to_complex() const {
    std::complex<double> acc(0.0, 0.0);
    constexpr double tau = 6.283185307179586476925286766559;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        double ang = tau * static_cast<double>(k) / static_cast<double>(order_);
        acc += c_[k].to_double() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc * std::sqrt(static_cast<double>(rad_));
}

std::vector<Rational> Cyclo::coeffs_at_order(long long order) const {
    Cyclo z = embedded(order);
    return z.c_;
}

} // namespace mubkit
