#ifndef MUBKIT_NUMTH_HPP
#define MUBKIT_NUMTH_HPP

#include <map>

#include "mubkit/rational.hpp"

namespace mubkit {

// Exact element of the ring Z[sqrt(d) : d squarefree] with rational
// coefficients: a map radicand -> coefficient representing sum c_d sqrt(d).
// Zero coefficients are dropped, so the value is 0 iff the map is empty
// (the sqrt(d) are linearly independent over the rationals).
class RadicalValue {
public:
    RadicalValue() = default;
    explicit RadicalValue(const Rational& r) {
        if (!r.is_zero()) c_[1] = r;
    }
    static RadicalValue sqrt_int(long long n, const Rational& coeff = Rational(1));

    bool is_zero() const noexcept { return c_.empty(); }
    const std::map<long long, Rational>& terms() const noexcept { return c_; }

    RadicalValue& operator+=(const RadicalValue& o);
    friend RadicalValue operator+(RadicalValue a, const RadicalValue& b) { return a += b; }
    friend RadicalValue operator-(const RadicalValue& a, const RadicalValue& b);
    friend RadicalValue operator*(const RadicalValue& a, const RadicalValue& b);
    bool operator==(const RadicalValue& o) const { return c_ == o.c_; }

    double to_double() const;
    std::string str() const;

private:
    std::map<long long, Rational> c_;
    void prune();
};

// g(N) = sum'_{n=1}^{N-1} sqrt(gcd(n,N)) - (N-1); the primed sum omits even-N
// terms with both N/gcd and n/gcd odd. Vanishes exactly at primes.
RadicalValue g_exact(long long N);
// direct evaluation of the double exponential sum with gamma_{2N}
double g_float(long long N);

// h(N) = g(N) + N + sqrt(N) - 1 (odd N) or g(N) + N + sqrt(N)/2 - 1 (even N);
// multiplicative over coprime factors, h(1) = 1
RadicalValue h_value(long long N);

// |N^{-1/2} sum_l gamma_{2N}^{(N-l) l n}| evaluated in float and matched
// against the exact two-case rule; returns the exact value (0 or sqrt(gcd))
struct GaussSumCheck {
    double float_value = 0;
    double exact_value = 0;
    bool matches = false;
};
GaussSumCheck gauss_sum_check(long long N, long long n, double tol = 1e-8);

bool is_prime_via_g(long long N);

} // namespace mubkit

#endif
