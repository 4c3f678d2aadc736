#ifndef MUBKIT_CYCLO_HPP
#define MUBKIT_CYCLO_HPP

#include <complex>
#include <vector>

#include "mubkit/rational.hpp"

namespace mubkit {

// Exact scalar of the form  sqrt(rad) * sum_k c_k gamma_L^k  with rational
// coefficients, gamma_L = exp(2*pi*i/L) and L a prime power q^a.
//
// Canonical form: coefficients are reduced with Phi_{q^a}(gamma_L) = 0, i.e.
// every exponent k >= L - L/q is eliminated, so equality of canonical forms is
// equality of complex values. rad is a squarefree positive integer; symbolic
// normalizations like N^{-1/2} are stored this way instead of as floats.
class Cyclo {
public:
    Cyclo() : order_(1), q_(1), rad_(1), c_(1, Rational(0)) {}
    explicit Cyclo(const Rational& r) : order_(1), q_(1), rad_(1), c_(1, r) {}
    explicit Cyclo(long long n) : Cyclo(Rational(n)) {}

    // gamma_order^exponent (exponent taken mod order); order must be a prime power.
    static Cyclo root_of_unity(long long order, long long exponent);
    // r * sqrt(rad); rad > 0 is reduced to its squarefree part.
    static Cyclo scaled(const Rational& r, long long rad);
    // 1/sqrt(n) for n > 0.
    static Cyclo inv_sqrt(long long n);

    long long order() const noexcept { return order_; }
    long long rad() const noexcept { return rad_; }
    const std::vector<Rational>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept;
    bool is_rational() const noexcept;
    Rational rational_value() const; // requires is_rational()

    Cyclo conj() const;
    Cyclo operator-() const;
    Cyclo abs2() const { return *this * conj(); }

    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
    friend Cyclo operator*(const Rational& r, const Cyclo& a);

    // Exact value equality. Throws ScaleMismatch if the two radicands differ
    // and neither side is zero (never the case in this library's flows).
    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    std::complex<double> to_complex() const;

    // Serialization helper: coefficients padded/reduced to a given order.
    std::vector<Rational> coeffs_at_order(long long order) const;

private:
    long long order_; // L = q^a
    long long q_;     // prime radical of L (1 when L == 1)
    long long rad_;   // squarefree, > 0
    std::vector<Rational> c_; // length max(1, L - L/q), canonical

    void reduce_tail(std::vector<Rational>& raw) const; // raw has length order_
    Cyclo embedded(long long newOrder) const;
    static void align(Cyclo& a, Cyclo& b);
    void fold_radical(); // folds sqrt(2) into the coefficients when q==2, L>=8
};

bool is_prime(long long n);
// factors a prime power n = q^a; returns false if n is not a prime power
bool prime_power(long long n, long long& q, int& a);
long long squarefree_part(long long n, long long& square_root_out);

} // namespace mubkit

#endif
