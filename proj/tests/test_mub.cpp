#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "mubkit/mub.hpp"

using namespace mubkit;

namespace {
std::shared_ptr<const GfSpec> field(int p, int m) { return std::make_shared<GfSpec>(p, m); }
}

TEST_CASE("alpha table: boundary, group law, symmetry") {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 1}, {3, 2}, {2, 3}, {5, 1}}) {
        auto f = field(p, m);
        AlphaTable a(f, true);
        CHECK(a.check_boundary());
        CHECK(a.check_group_law());
        CHECK(a.check_symmetry());
    }
}

TEST_CASE("alpha examples") {
    auto f4 = field(2, 2);
    AlphaTable a4(f4, true);
    // conj(alpha^1_l) = (1, -i, i, 1)
    Cyclo i1 = Cyclo::root_of_unity(4, 1);
    CHECK(a4.at(1, 0).conj() == Cyclo(Rational(1)));
    CHECK(a4.at(1, 1).conj() == -i1);
    CHECK(a4.at(1, 2).conj() == i1);
    CHECK(a4.at(1, 3).conj() == Cyclo(Rational(1)));

    auto f3 = field(3, 1);
    AlphaTable a3(f3, true);
    CHECK(a3.at(1, 1) == Cyclo::root_of_unity(3, 1));
}

TEST_CASE("twisted alpha: group law holds, symmetry breaks for odd p, bases unchanged") {
    auto f = field(3, 2);
    std::vector<GfEl> b(9, 0);
    for (GfEl i = 1; i < 9; ++i) b[static_cast<size_t>(i)] = i;
    AlphaTable tw(f, false, &b);
    CHECK(tw.check_boundary());
    CHECK(tw.check_group_law());
    CHECK(!tw.check_symmetry());
    MubSet m1 = build_mub(f, AlphaTable(f, true));
    MubSet m2 = build_mub(f, tw);
    // each basis is the same set of columns, up to permutation
    for (int i = 0; i < 9; ++i) {
        CMatrix g = m1.bases[i].dagger() * m2.bases[i];
        int ones = 0;
        for (int r = 0; r < 9; ++r)
            for (int c = 0; c < 9; ++c) {
                Cyclo a2 = g.ex(r, c).abs2();
                if (a2.is_rational() && a2.rational_value() == Rational(1)) ++ones;
            }
        CHECK(ones == 9); // permutation matrix up to phases
    }
}

TEST_CASE("U operators: identity, period p, group property, orthogonality traces") {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 1}, {2, 3}}) {
        auto f = field(p, m);
        GaloisHW hw(f);
        AlphaTable a(f, true);
        int N = static_cast<int>(f->N());
        for (GfEl i = 0; i <= N; ++i) CHECK(build_U(hw, a, i, 0).equal_exact(CMatrix::identity_exact(N)));
        for (GfEl i = 0; i <= N; ++i)
            for (GfEl k = 0; k < N; ++k) {
                CMatrix u = build_U(hw, a, i, k);
                CHECK(u.check_unitary() == 0.0);
                CMatrix pw = CMatrix::identity_exact(N);
                for (int t = 0; t < p; ++t) pw = u * pw;
                CHECK(pw.equal_exact(CMatrix::identity_exact(N)));
                for (GfEl l = 0; l < N; ++l) {
                    CMatrix prod = u * build_U(hw, a, i, l);
                    CHECK(prod.equal_exact(build_U(hw, a, i, f->add(k, l))));
                }
            }
        // tr(U^i_k^dag U^j_l) = N delta_{k,l} delta_{i (.) k, j (.) l}
        for (GfEl i = 0; i < N; ++i)
            for (GfEl j = 0; j < N; ++j)
                for (GfEl k = 0; k < N; ++k)
                    for (GfEl l = 0; l < N; ++l) {
                        Cyclo t = (build_U(hw, a, i, k).dagger() * build_U(hw, a, j, l)).trace_exact();
                        bool expectN = (k == l) && (f->mul(i, k) == f->mul(j, l));
                        if (expectN)
                            CHECK(t.rational_value() == Rational(N));
                        else
                            CHECK(t.is_zero());
                    }
    }
}

TEST_CASE("(U^1_1)^2 = 1 for N = 4 via direct squaring") {
    auto f = field(2, 2);
    GaloisHW hw(f);
    AlphaTable a(f, true);
    CMatrix u = build_U(hw, a, 1, 1);
    CHECK((u * u).equal_exact(CMatrix::identity_exact(4)));
}

TEST_CASE("maximal MUB sets are exactly unbiased") {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}, {2, 3}}) {
        MubSet mub = build_mub(field(p, m));
        std::string w;
        CHECK_MESSAGE(mub_verify_exact(mub, &w), w);
    }
}

TEST_CASE("basis 0 is the dual (inverse Galois-Fourier) basis") {
    MubSet mub = build_mub(field(3, 1));
    GaloisHW hw(mub.spec);
    for (int l = 0; l < 3; ++l)
        for (int k = 0; k < 3; ++k) {
            Cyclo expect = Cyclo::inv_sqrt(3) * hw.gamma_pow(mub.spec->neg(mub.spec->mul(k, l)));
            CHECK(mub.bases[0].ex(l, k) == expect);
        }
}

TEST_CASE("eigenvalue check: U^i_l |e^i_k> = gamma^{k (.) l} |e^i_k>, exact") {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
        auto f = field(p, m);
        MubSet mub = build_mub(f);
        GaloisHW hw(f);
        int N = static_cast<int>(f->N());
        for (GfEl i = 0; i < N; ++i)
            for (GfEl l = 0; l < N; ++l) {
                CMatrix u = build_U(hw, mub.alpha, i, l);
                CMatrix lhs = u * mub.bases[i];
                CMatrix rhs = CMatrix::zeros_exact(N, N);
                for (GfEl k = 0; k < N; ++k) {
                    Cyclo ev = hw.gamma_pow(f->mul(k, l));
                    for (int r = 0; r < N; ++r)
                        rhs.ex(r, static_cast<int>(k)) = ev * mub.bases[i].ex(r, static_cast<int>(k));
                }
                CHECK(lhs.equal_exact(rhs));
            }
    }
}

TEST_CASE("shift action and trace pairing with the V operators") {
    auto f = field(2, 2);
    MubSet mub = build_mub(f);
    GaloisHW hw(f);
    int N = 4;
    for (GfEl i = 0; i < N; ++i)
        for (GfEl mm = 0; mm < N; ++mm)
            for (GfEl nn = 0; nn < N; ++nn) {
                // V^n_m |e^i_0> = |e^i_{i (.) m (-) n}> conj(alpha^i_m)
                std::vector<Cyclo> lhs(N), rhs(N);
                for (int r = 0; r < N; ++r) {
                    Cyclo acc;
                    for (int c = 0; c < N; ++c) acc += hw.V(mm, nn).ex(r, c) * mub.bases[i].ex(c, 0);
                    lhs[r] = acc;
                }
                GfEl target = f->sub(f->mul(i, mm), nn);
                Cyclo ph = mub.alpha.at(i, mm).conj();
                for (int r = 0; r < N; ++r) rhs[r] = ph * mub.bases[i].ex(r, static_cast<int>(target));
                for (int r = 0; r < N; ++r) CHECK(lhs[r] == rhs[r]);
                // tr(U^i_l^dag V_m^n) = N delta_{i(.)l,n} delta_{l,m} conj(alpha^i_l)
                Cyclo t = (build_U(hw, mub.alpha, i, mm).dagger() * hw.V(mm, nn)).trace_exact();
                if (f->mul(i, mm) == nn)
                    CHECK(t == Rational(N) * mub.alpha.at(i, mm).conj());
                else
                    CHECK(t.is_zero());
            }
}

TEST_CASE("complementary observables (N = 4): five pairwise complementary period-4 unitaries") {
    MubSet mub = build_mub(field(2, 2));
    std::vector<CMatrix> Z;
    for (int i = 0; i <= 4; ++i) Z.push_back(complementary_observable(mub, i));
    CMatrix id = CMatrix::identity_exact(4);
    for (auto& z : Z) {
        CMatrix p4 = id;
        for (int t = 0; t < 4; ++t) p4 = z * p4;
        CHECK(p4.equal_exact(id));
    }
    // Z_N diagonal with entries gamma_N^k
    for (int k = 0; k < 4; ++k) CHECK(Z[4].ex(k, k) == Cyclo::root_of_unity(4, k));
    for (int i = 0; i <= 4; ++i)
        for (int j = 0; j <= 4; ++j) {
            if (i == j) continue;
            CMatrix zi = id;
            for (int mm = 0; mm < 4; ++mm) {
                CMatrix zj = id;
                for (int nn = 0; nn < 4; ++nn) {
                    if (mm || nn) {
                        Cyclo t = (zi * zj).trace_exact();
                        CHECK(t.is_zero());
                    }
                    zj = Z[j] * zj;
                }
                zi = Z[i] * zi;
            }
        }
}

TEST_CASE("complementary observables (N = 2) reproduce the Pauli triple up to labels") {
    MubSet mub = build_mub(field(2, 1));
    std::vector<CMatrix> Z;
    for (int i = 0; i <= 2; ++i) Z.push_back(complementary_observable(mub, i).to_float());
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j) {
            if (i == j) continue;
            CMatrix prod = Z[i] * Z[j];
            CHECK(std::abs(prod.trace()) < 1e-12);
        }
}

TEST_CASE("clifford maps diagonalize and C_0 is the dual transform") {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 2}, {3, 1}}) {
        auto f = field(p, m);
        MubSet mub = build_mub(f);
        GaloisHW hw(f);
        int N = static_cast<int>(f->N());
        CHECK(clifford(mub, N).equal_exact(CMatrix::identity_exact(N)));
        CHECK(clifford(mub, 0).equal_exact(mub.bases[0]));
        for (int i = 0; i < N; ++i) {
            CMatrix c = clifford(mub, i);
            CHECK(c.check_unitary() == 0.0);
            for (GfEl l = 0; l < N; ++l) {
                CMatrix d = c.dagger() * build_U(hw, mub.alpha, i, l) * c;
                for (int r = 0; r < N; ++r)
                    for (int s = 0; s < N; ++s)
                        if (r != s) CHECK(d.ex(r, s).is_zero());
            }
        }
    }
}

TEST_CASE("intertwiner: identity map and Fourier map") {
    CMatrix id = CMatrix::identity(3);
    std::vector<std::pair<CMatrix, CMatrix>> idmap{{id, id}};
    // the identity map alone is wildly non-unique
    CHECK_THROWS_WITH_AS(solve_intertwiner(3, idmap), doctest::Contains("NonUniqueSolution"), Error);

    RingHW hw(3);
    // X -> Z, Z -> X^{-1} has the Fourier matrix as its unique solution
    std::vector<std::pair<CMatrix, CMatrix>> fmap{{hw.X(), hw.Z()}, {hw.Z(), hw.x_pow(-1)}};
    CMatrix U = solve_intertwiner(3, fmap);
    CHECK((U * hw.X() * U.dagger()).max_abs_diff(hw.Z()) < 1e-9);
    // compare with gamma^{jk}/sqrt(3) up to a global phase
    CMatrix F = CMatrix::zeros(3, 3);
    constexpr double tau = 6.283185307179586476925286766559;
    for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) F.fl(j, k) = std::polar(1.0 / std::sqrt(3.0), tau * j * k / 3);
    cdouble ph = U.fl(0, 0) / F.fl(0, 0);
    CHECK((ph * F).max_abs_diff(U) < 1e-9);
}

TEST_CASE("intertwiner: inconsistent map fails") {
    RingHW hw(3);
    std::vector<std::pair<CMatrix, CMatrix>> bad{{hw.X(), hw.X() * hw.X()}, {hw.Z(), hw.Z()}};
    CHECK_THROWS_AS(solve_intertwiner(3, bad), Error);
}

TEST_CASE("intertwiner: the period-5 two-q-bit map") {
    // generators sx(x)1, sz(x)1, 1(x)sx, 1(x)sz mapped to
    // sy(x)sy, 1(x)sx, sy(x)1, sx(x)sx; the solution cycles the five
    // complementary observables and has period 5 up to a phase
    CMatrix sx = CMatrix::from_rows({{0, 1}, {1, 0}});
    CMatrix sy = CMatrix::from_rows({{0, cdouble(0, -1)}, {cdouble(0, 1), 0}});
    CMatrix sz = CMatrix::from_rows({{1, 0}, {0, -1}});
    CMatrix id = CMatrix::identity(2);
    auto t = [](const CMatrix& a, const CMatrix& b) { return a.tensor(b); };
    std::vector<std::pair<CMatrix, CMatrix>> map{
        {t(sx, id), t(sy, sy)}, {t(sz, id), t(id, sx)}, {t(id, sx), t(sy, id)}, {t(id, sz), t(sx, sx)}};
    CMatrix U = solve_intertwiner(4, map);
    CHECK(U.check_unitary() < 1e-9);
    CMatrix U5 = CMatrix::identity(4);
    for (int k = 0; k < 5; ++k) U5 = U * U5;
    // proportional to the identity
    cdouble ph = U5.fl(0, 0);
    CHECK(std::abs(std::abs(ph) - 1.0) < 1e-9);
    CHECK(U5.max_abs_diff(ph * CMatrix::identity(4)) < 1e-9);
    // conjugation permutes the five MUB (as projector sets) in a 5-cycle
    MubSet mub = build_mub(std::make_shared<GfSpec>(2, 2));
    auto proj_set = [&](const CMatrix& basis) {
        std::vector<CMatrix> ps;
        CMatrix b = basis.to_float();
        for (int k = 0; k < 4; ++k) {
            CMatrix p = CMatrix::zeros(4, 4);
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) p.fl(r, c) = b.fl(r, k) * std::conj(b.fl(c, k));
            ps.push_back(p);
        }
        return ps;
    };
    auto same_set = [&](const std::vector<CMatrix>& a, const std::vector<CMatrix>& b) {
        std::vector<bool> used(a.size(), false);
        for (const auto& pa : a) {
            bool found = false;
            for (size_t i = 0; i < b.size() && !found; ++i)
                if (!used[i] && pa.max_abs_diff(b[i]) < 1e-8) {
                    used[i] = true;
                    found = true;
                }
            if (!found) return false;
        }
        return true;
    };
    std::vector<int> image(5, -1);
    for (int i = 0; i <= 4; ++i) {
        CMatrix mapped = U * mub.bases[static_cast<size_t>(i)].to_float();
        auto ms = proj_set(mapped);
        for (int j = 0; j <= 4; ++j)
            if (same_set(ms, proj_set(mub.bases[static_cast<size_t>(j)]))) image[static_cast<size_t>(i)] = j;
        CHECK(image[static_cast<size_t>(i)] >= 0);
    }
    // the induced permutation is a single 5-cycle
    std::vector<bool> seen(5, false);
    int cur = 0, steps = 0;
    while (!seen[static_cast<size_t>(cur)]) {
        seen[static_cast<size_t>(cur)] = true;
        cur = image[static_cast<size_t>(cur)];
        ++steps;
    }
    CHECK(steps == 5);
}

TEST_CASE("eigenvalue identity sampled for the large exact dimensions") {
    // U^i_l |e^i_k> = gamma^{k (.) l} |e^i_k>, exact; full sweeps run for the
    // small dimensions elsewhere, here N = 16 and 27 are spot-checked
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}}) {
        auto f = field(p, m);
        MubSet mub = build_mub(f);
        GaloisHW hw(f);
        int N = static_cast<int>(f->N());
        for (GfEl i : {GfEl(1), GfEl(N - 1)})
            for (GfEl l : {GfEl(1), GfEl(2), GfEl(N - 2)}) {
                CMatrix u = build_U(hw, mub.alpha, i, l);
                CMatrix lhs = u * mub.bases[static_cast<size_t>(i)];
                CMatrix d = CMatrix::zeros_exact(N, N);
                for (GfEl k = 0; k < N; ++k)
                    d.ex(static_cast<int>(k), static_cast<int>(k)) = hw.gamma_pow(f->mul(k, l));
                CMatrix rhs = mub.bases[static_cast<size_t>(i)] * d;
                CHECK(lhs.equal_exact(rhs));
            }
    }
}
