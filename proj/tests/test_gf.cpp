#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "mubkit/gf.hpp"

using namespace mubkit;

TEST_CASE("GF(4): reference addition and multiplication tables") {
    GfSpec f(2, 2);
    CHECK(f.mul(2, 2) == 3); // the defining choice, unique for N = 4
    int addT[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    int mulT[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    for (GfEl a = 0; a < 4; ++a)
        for (GfEl b = 0; b < 4; ++b) {
            CHECK(f.add(a, b) == addT[a][b]);
            CHECK(f.mul(a, b) == mulT[a][b]);
        }
    CHECK(gf_arith(f, "add", 2, 3) == 1);
}

TEST_CASE("GF(27) with mu=(1,2,2): worked constants") {
    std::vector<int> mu{1, 2, 2};
    GfSpec f(3, 3, &mu);
    CHECK(f.mul(3, 9) == 25);
    CHECK(f.mul(9, 9) == 8);
    CHECK(f.mul(3, 13) == 1);
    CHECK(f.mul(9, 17) == 1);
    CHECK(gf_arith(f, "inv", 3) == 13);
    // the reference bilinear-form matrices and their inverses
    std::vector<std::vector<int>> M = {{1, 0, 0, 0, 0, 1, 0, 1, 2},
                                       {0, 1, 0, 1, 0, 2, 0, 2, 2},
                                       {0, 0, 1, 0, 1, 2, 1, 2, 0}};
    std::vector<std::vector<int>> Minv = {{1, 0, 0, 0, 1, 1, 0, 1, 0},
                                          {2, 1, 2, 1, 0, 0, 2, 0, 2},
                                          {1, 1, 1, 1, 1, 0, 1, 0, 0}};
    CHECK(f.mult_matrices() == M);
    CHECK(f.mult_matrix_inverses() == Minv);
    CHECK(f.dual_gens() == std::vector<GfEl>{1, 12, 3});
    // conjugate coefficients (u_0, u_1, u_2) = (k_0, k_2, k_1 - k_2)
    for (GfEl k = 0; k < 27; ++k) {
        auto d = f.digits(k);
        auto u = f.conj_coeffs(k);
        CHECK(u[0] == d[0]);
        CHECK(u[1] == d[2]);
        CHECK(u[2] == ((d[1] - d[2]) % 3 + 3) % 3);
    }
}

TEST_CASE("default defining constants") {
    CHECK(GfSpec(2, 3).mul(2, 4) == 5);
    CHECK(GfSpec(2, 4).mul(2, 8) == 3);
    CHECK(GfSpec(2, 5).mul(2, 16) == 5);
    CHECK(GfSpec(3, 3).mul(3, 9) == 25);
}

TEST_CASE("character exponent") {
    GfSpec f4(2, 2);
    CHECK(f4.char_exp(3) == 1);
    std::vector<int> mu{1, 2, 2};
    GfSpec f27(3, 3, &mu);
    CHECK(f27.char_exp(25) == 1);
    CHECK(f27.char_exp(0) == 0);
}

TEST_CASE("errors") {
    CHECK_THROWS_WITH_AS(GfSpec(6, 1), doctest::Contains("NotPrime"), Error);
    std::vector<int> bad{0, 0}; // x^2 is reducible
    CHECK_THROWS_WITH_AS(GfSpec(2, 2, &bad), doctest::Contains("ReduciblePolynomial"), Error);
    GfSpec f(5, 1);
    CHECK_THROWS_WITH_AS(f.inv(0), doctest::Contains("DivisionByZero"), Error);
    CHECK(f.mul(3, 0) == 0);
}

TEST_CASE("axiom verification") {
    CHECK(GfSpec(2, 2).verify_axioms().ok);
    std::vector<int> mu{1, 2, 2};
    CHECK(GfSpec(3, 3, &mu).verify_axioms().ok);
    CHECK(GfSpec(5, 2).verify_axioms().ok);
    CHECK(GfSpec(13, 1).verify_axioms().ok);
}

TEST_CASE("add decomposes digit-wise and dual generators have the defining property") {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {5, 2}}) {
        GfSpec f(p, m);
        for (GfEl a = 0; a < f.N(); ++a)
            for (GfEl b = 0; b < f.N(); ++b) {
                auto da = f.digits(a), db = f.digits(b), ds = f.digits(f.add(a, b));
                for (int i = 0; i < m; ++i) CHECK(ds[i] == (da[i] + db[i]) % p);
            }
        // gamma^{p^j (.) g_n} = gamma^{delta_{j,n}}
        GfEl pj = 1;
        for (int j = 0; j < m; ++j) {
            for (int n = 0; n < m; ++n)
                CHECK(f.char_exp(f.mul(pj, f.dual_gens()[n])) == (j == n ? 1 : 0));
            pj *= p;
        }
    }
}

TEST_CASE("mod-4 ring masquerading as a field fails verification") {
    // 2 (.)_4 2 = 0: the mod-4 ring has zero divisors, so inverse checks fail.
    // GfSpec cannot even represent it; emulate by checking the defining symptom.
    GfSpec f(2, 2);
    bool ring_has_zero_divisor = (2 * 2) % 4 == 0;
    CHECK(ring_has_zero_divisor);
    CHECK(f.mul(2, 2) != 0); // the field choice avoids it
}

TEST_CASE("additive characters: gamma^i gamma^j = gamma^{i (+) j}") {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {5, 1}}) {
        GfSpec f(p, m);
        for (GfEl i = 0; i < f.N(); ++i)
            for (GfEl j = 0; j < f.N(); ++j)
                CHECK((f.char_exp(i) + f.char_exp(j)) % p == f.char_exp(f.add(i, j)));
    }
}
