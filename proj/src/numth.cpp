#include "mubkit/numth.hpp"

#include <cmath>
#include <complex>
#include <numeric>

#include "mubkit/cyclo.hpp"

namespace mubkit {

RadicalValue RadicalValue::sqrt_int(long long n, const Rational& coeff) {
    if (n <= 0) fail("BadParameter", "radicand must be positive");
    long long s;
    long long d = squarefree_part(n, s);
    RadicalValue v;
    Rational c = coeff * Rational(s);
    if (!c.is_zero()) v.c_[d] = c;
    return v;
}

void RadicalValue::prune() {
    for (auto it = c_.begin(); it != c_.end();) {
        if (it->second.is_zero())
            it = c_.erase(it);
        else
            ++it;
    }
}

RadicalValue& RadicalValue::operator+=(const RadicalValue& o) {
    for (const auto& [d, c] : o.c_) c_[d] += c;
    prune();
    return *this;
}

RadicalValue operator-(const RadicalValue& a, const RadicalValue& b) {
    RadicalValue r = a;
    for (const auto& [d, c] : b.c_) r.c_[d] -= c;
    r.prune();
    return r;
}

RadicalValue operator*(const RadicalValue& a, const RadicalValue& b) {
    RadicalValue r;
    for (const auto& [d1, c1] : a.c_)
        for (const auto& [d2, c2] : b.c_) {
            long long g = std::gcd(d1, d2);
            r.c_[(d1 / g) * (d2 / g)] += c1 * c2 * Rational(g);
        }
    r.prune();
    return r;
}

double RadicalValue::to_double() const {
    double acc = 0;
    for (const auto& [d, c] : c_) acc += c.to_double() * std::sqrt(static_cast<double>(d));
    return acc;
}

std::string RadicalValue::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (const auto& [d, c] : c_) {
        if (!s.empty()) s += " + ";
        s += c.str();
        if (d != 1) s += "*sqrt(" + std::to_string(d) + ")";
    }
    return s;
}

namespace {

// the primed-summation omission rule: skip n when N even with both
// N/gcd(n,N) and n/gcd(n,N) odd
bool omitted(long long N, long long n) {
    if (N % 2 != 0) return false;
    long long g = std::gcd(n, N);
    return (N / g) % 2 == 1 && (n / g) % 2 == 1;
}

} // namespace

RadicalValue g_exact(long long N) {
    if (N < 2) fail("BadParameter", "g(N) needs N >= 2");
    RadicalValue v(Rational(-(N - 1)));
    for (long long n = 1; n < N; ++n) {
        if (omitted(N, n)) continue;
        v += RadicalValue::sqrt_int(std::gcd(n, N));
    }
    return v;
}

double g_float(long long N) {
    constexpr double tau = 6.283185307179586476925286766559;
    double acc = -(static_cast<double>(N) - 1.0);
    double invs = 1.0 / std::sqrt(static_cast<double>(N));
    for (long long n = 1; n < N; ++n) {
        std::complex<double> sum(0, 0);
        for (long long l = 0; l < N; ++l) {
            long long e = ((N - l) % (2 * N)) * (l % (2 * N)) % (2 * N) * (n % (2 * N)) % (2 * N);
            sum += std::polar(1.0, tau * e / (2.0 * N));
        }
        acc += invs * std::abs(sum);
    }
    return acc;
}

RadicalValue h_value(long long N) {
    if (N < 1) fail("BadParameter", "h(N) needs N >= 1");
    if (N == 1) return RadicalValue(Rational(1));
    RadicalValue v = g_exact(N);
    v += RadicalValue(Rational(N - 1));
    v += RadicalValue::sqrt_int(N, N % 2 == 0 ? Rational(1, 2) : Rational(1));
    return v;
}

GaussSumCheck gauss_sum_check(long long N, long long n, double tol) {
    if (n < 1 || n > N - 1) fail("BadParameter", "need 1 <= n <= N-1");
    constexpr double tau = 6.283185307179586476925286766559;
    GaussSumCheck r;
    std::complex<double> sum(0, 0);
    for (long long l = 0; l < N; ++l) {
        long long e = ((N - l) * l % (2 * N) + 2 * N) % (2 * N) * (n % (2 * N)) % (2 * N);
        sum += std::polar(1.0, tau * e / (2.0 * N));
    }
    r.float_value = std::abs(sum) / std::sqrt(static_cast<double>(N));
    r.exact_value = omitted(N, n) ? 0.0 : std::sqrt(static_cast<double>(std::gcd(n, N)));
    r.matches = std::abs(r.float_value - r.exact_value) < tol;
    return r;
}

bool is_prime_via_g(long long N) {
    if (N < 2) fail("BadParameter", "primality test needs N >= 2");
    return g_exact(N).is_zero();
}

} // namespace mubkit
