#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mubkit/numth.hpp"

using namespace mubkit;

TEST_CASE("radical arithmetic reduces products to squarefree radicands") {
    RadicalValue a = RadicalValue::sqrt_int(2);
    RadicalValue b = RadicalValue::sqrt_int(8); // = 2 sqrt(2)
    CHECK((a * a) == RadicalValue(Rational(2)));
    CHECK(b == RadicalValue::sqrt_int(2, Rational(2)));
    RadicalValue c = RadicalValue::sqrt_int(6) * RadicalValue::sqrt_int(10); // = 2 sqrt(15)
    CHECK(c == RadicalValue::sqrt_int(15, Rational(2)));
    CHECK((a - a).is_zero());
    CHECK(std::abs(c.to_double() - 2 * std::sqrt(15.0)) < 1e-12);
}

TEST_CASE("g at primes, prime powers, and 2p") {
    CHECK(g_exact(7).is_zero());
    CHECK(g_exact(97).is_zero());
    // g(4) = sqrt(2) - 1
    RadicalValue g4 = g_exact(4);
    RadicalValue want = RadicalValue::sqrt_int(2) - RadicalValue(Rational(1));
    CHECK(g4 == want);
    // prime-power formula at (3,2): (3-1)(sqrt(3)-1) = 2 sqrt(3) - 2
    RadicalValue g9 = g_exact(9);
    RadicalValue want9 = RadicalValue::sqrt_int(3, Rational(2)) - RadicalValue(Rational(2));
    CHECK(g9 == want9);
    // (7,2): (7-1)(sqrt(7)-1) = 6 sqrt(7) - 6 != 0
    RadicalValue g49 = g_exact(49);
    RadicalValue want49 = RadicalValue::sqrt_int(7, Rational(6)) - RadicalValue(Rational(6));
    CHECK(g49 == want49);
    // g(14) = (sqrt(7)-1)(sqrt(2)+1-sqrt(7))/(2+sqrt(2)) ~ -0.1116
    double g2p = (std::sqrt(7.0) - 1) * (std::sqrt(2.0) + 1 - std::sqrt(7.0)) / (2 + std::sqrt(2.0));
    CHECK(std::abs(g_exact(14).to_double() - g2p) < 1e-12);
    CHECK(!is_prime_via_g(91));
    CHECK(is_prime_via_g(97));
    CHECK(!is_prime_via_g(49));
}

TEST_CASE("g_exact vs g_float") {
    for (long long N : {2, 3, 4, 6, 9, 12, 14, 15, 27, 32, 45}) {
        CHECK(std::abs(g_exact(N).to_double() - g_float(N)) < 1e-8);
    }
}

TEST_CASE("h multiplicativity on coprime pairs") {
    CHECK(h_value(1) == RadicalValue(Rational(1)));
    CHECK(h_value(6) == h_value(2) * h_value(3));
    CHECK(h_value(12) == h_value(4) * h_value(3));
    CHECK(h_value(35) == h_value(5) * h_value(7));
    CHECK(h_value(90) == h_value(2) * h_value(9) * h_value(5));
    // non-coprime factorizations are not multiplicative in general
    CHECK(!(h_value(4) == h_value(2) * h_value(2)));
}

TEST_CASE("gauss sum two-case rule") {
    auto r = gauss_sum_check(6, 3); // N2 = 2 even -> sqrt(3)
    CHECK(r.matches);
    CHECK(r.exact_value == doctest::Approx(std::sqrt(3.0)));
    r = gauss_sum_check(6, 2); // N even, N/gcd = 3 odd, n/gcd = 1 odd -> 0
    CHECK(r.matches);
    CHECK(r.exact_value == 0.0);
    r = gauss_sum_check(5, 2); // prime: magnitude sqrt(p), normalized 1
    CHECK(r.matches);
    CHECK(r.exact_value == 1.0);
    for (long long N : {4, 6, 8, 9, 10, 12}) {
        for (long long n = 1; n < N; ++n) CHECK(gauss_sum_check(N, n).matches);
    }
}

TEST_CASE("sign structure and the census of negatives up to 1000") {
    int neg = 0;
    for (long long N = 2; N <= 1000; ++N) {
        double v = g_exact(N).to_double();
        if (v < 0) {
            ++neg;
            CHECK(N % 4 == 2); // negatives only at odd multiples of 2
        }
        bool composite = !is_prime_via_g(N);
        if (composite && (N % 2 == 1 || N % 4 == 0)) CHECK(v > 0);
    }
    CHECK(neg == 92);
}
