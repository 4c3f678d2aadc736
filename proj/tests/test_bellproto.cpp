#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mubkit/bellproto.hpp"

using namespace mubkit;

namespace {

std::shared_ptr<const GfSpec> field(int p, int m) { return std::make_shared<GfSpec>(p, m); }

StateVec random_state(int N, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0, 1);
    StateVec v(N);
    for (auto& x : v) x = cdouble(g(rng), g(rng));
    double s = std::sqrt(norm2(v));
    for (auto& x : v) x /= s;
    return v;
}

} // namespace

TEST_CASE("bell seed for N = 2 and orthonormality") {
    GfSpec f(2, 1);
    StateVec b00 = bell_state(f, 0, 0);
    double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(b00[0] - s) < 1e-15);
    CHECK(std::abs(b00[3] - s) < 1e-15);
    CHECK(std::abs(b00[1]) < 1e-15);
    CHECK(std::abs(b00[2]) < 1e-15);
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
        GfSpec ff(p, m);
        int N = static_cast<int>(ff.N());
        for (GfEl m1 = 0; m1 < N; ++m1)
            for (GfEl n1 = 0; n1 < N; ++n1)
                for (GfEl m2 = 0; m2 < N; ++m2)
                    for (GfEl n2 = 0; n2 < N; ++n2) {
                        cdouble ip = inner(bell_state(ff, m1, n1), bell_state(ff, m2, n2));
                        double expect = (m1 == m2 && n1 == n2) ? 1.0 : 0.0;
                        CHECK(std::abs(ip - expect) < 1e-12);
                    }
    }
}

TEST_CASE("shift operators permute Bell states with the stated phase") {
    auto fp = field(2, 2);
    const GfSpec& f = *fp;
    GaloisHW hw(fp);
    int N = 4;
    for (GfEl m = 0; m < N; ++m)
        for (GfEl n = 0; n < N; ++n)
            for (GfEl r = 0; r < N; ++r)
                for (GfEl s = 0; s < N; ++s) {
                    StateVec lhs = apply_local(hw.V(r, s).to_float(), bell_state(f, m, n), 1, 2, N);
                    StateVec rhs = bell_state(f, f.add(m, r), f.add(n, s));
                    cdouble ph = hw.gamma_pow(f.neg(f.mul(r, n))).to_complex();
                    double dev = 0;
                    for (size_t i = 0; i < lhs.size(); ++i) dev = std::max(dev, std::abs(lhs[i] - ph * rhs[i]));
                    CHECK(dev < 1e-12);
                }
}

TEST_CASE("seed invariance under simultaneous shifts") {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}}) {
        auto fp = field(p, m);
        const GfSpec& f = *fp;
        GaloisHW hw(fp);
        int N = static_cast<int>(f.N());
        StateVec seed = bell_state(f, 0, 0);
        for (GfEl mm = 0; mm < N; ++mm)
            for (GfEl nn = 0; nn < N; ++nn) {
                CMatrix v = hw.V(mm, nn).to_float();
                CMatrix vconj = v;
                for (int i = 0; i < N; ++i)
                    for (int j = 0; j < N; ++j) vconj.fl(i, j) = std::conj(v.fl(i, j));
                StateVec t = apply_local(vconj, seed, 0, 2, N);
                t = apply_local(v, t, 1, 2, N);
                double dev = 0;
                for (size_t i = 0; i < t.size(); ++i) dev = std::max(dev, std::abs(t[i] - seed[i]));
                CHECK(dev < 1e-12);
            }
    }
}

TEST_CASE("Bell ergodic relation on random product kets") {
    auto fp = field(3, 1);
    const GfSpec& f = *fp;
    GaloisHW hw(fp);
    int N = 3;
    StateVec phi = random_state(N, 1), psi = random_state(N, 2);
    StateVec prod(static_cast<size_t>(N) * N);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b)
            prod[static_cast<size_t>(a) + static_cast<size_t>(N) * b] = std::conj(phi[a]) * psi[b];
    StateVec acc(prod.size(), cdouble(0, 0));
    for (GfEl mm = 0; mm < N; ++mm)
        for (GfEl nn = 0; nn < N; ++nn) {
            CMatrix v = hw.V(mm, nn).to_float();
            CMatrix vconj = v;
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) vconj.fl(i, j) = std::conj(v.fl(i, j));
            StateVec t = apply_local(vconj, prod, 0, 2, N);
            t = apply_local(v, t, 1, 2, N);
            for (size_t i = 0; i < acc.size(); ++i) acc[i] += t[i] / static_cast<double>(N);
        }
    StateVec expect = bell_state(f, 0, 0);
    cdouble scale = std::sqrt(static_cast<double>(N)) * inner(phi, psi);
    double dev = 0;
    for (size_t i = 0; i < acc.size(); ++i) dev = std::max(dev, std::abs(acc[i] - scale * expect[i]));
    CHECK(dev < 1e-9);
}

TEST_CASE("basis-change covariance of the Bell basis (N = 4, all i, m, n)") {
    auto fp = field(2, 2);
    const GfSpec& f = *fp;
    MubSet mub = build_mub(fp);
    int N = 4;
    for (int i = 0; i < N; ++i) {
        CMatrix c = clifford(mub, i).to_float();
        CMatrix cconj = c;
        for (int r = 0; r < N; ++r)
            for (int s = 0; s < N; ++s) cconj.fl(r, s) = std::conj(c.fl(r, s));
        GaloisHW hw(fp);
        for (GfEl m = 0; m < N; ++m)
            for (GfEl n = 0; n < N; ++n) {
                StateVec lhs = apply_local(cconj, bell_state(f, m, n), 0, 2, N);
                lhs = apply_local(c, lhs, 1, 2, N);
                StateVec rhs = bell_state(f, f.mul(n, 1), f.sub(f.mul(i, n), m));
                cdouble ph = hw.gamma_pow(f.mul(m, n)).to_complex() * mub.alpha.at(i, n).to_complex();
                double dev = 0;
                for (size_t t = 0; t < lhs.size(); ++t) dev = std::max(dev, std::abs(lhs[t] - ph * rhs[t]));
                CHECK(dev < 1e-12);
            }
    }
}

TEST_CASE("dense coding decodes every message") {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
        GfSpec f(p, m);
        for (GfEl mm = 0; mm < f.N(); ++mm)
            for (GfEl nn = 0; nn < f.N(); ++nn) {
                auto r = dense_coding_sim(f, mm, nn);
                CHECK(r.m == mm);
                CHECK(r.n == nn);
                CHECK(std::abs(r.probability - 1.0) < 1e-12);
            }
    }
}

TEST_CASE("teleportation: uniform branch probabilities, unit fidelity") {
    GfSpec f5(5, 1);
    auto branches = teleport_sim(f5, random_state(5, 3));
    CHECK(branches.size() == 25);
    for (const auto& b : branches) {
        CHECK(std::abs(b.probability - 0.04) < 1e-9);
        CHECK(std::abs(b.fidelity - 1.0) < 1e-9);
    }
    GfSpec f2(2, 1);
    StateVec basis0{1.0, 0.0};
    for (const auto& b : teleport_sim(f2, basis0)) CHECK(std::abs(b.fidelity - 1.0) < 1e-12);
}

TEST_CASE("cerf cloning: extreme cases and random a") {
    GfSpec f(3, 1);
    int N = 3;
    StateVec psi = random_state(N, 4);
    std::vector<std::vector<cdouble>> a(N, std::vector<cdouble>(N, cdouble(0, 0)));
    a[0][0] = 1.0;
    auto r = cerf_clone(f, a, psi);
    CHECK(r.closed_form_residual1 < 1e-9);
    CHECK(r.closed_form_residual3 < 1e-9);
    // rho1 = |psi><psi|, rho3 = 1/N
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            CHECK(std::abs(r.rho1.value(i, j) - psi[i] * std::conj(psi[j])) < 1e-9);
            CHECK(std::abs(r.rho3.value(i, j) - (i == j ? 1.0 / N : 0.0)) < 1e-9);
        }
    // uniform a: roles swap, b = delta
    for (auto& row : a)
        for (auto& x : row) x = 1.0 / N;
    r = cerf_clone(f, a, psi);
    CHECK(std::abs(r.b[0][0] - 1.0) < 1e-12);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            CHECK(std::abs(r.rho3.value(i, j) - psi[i] * std::conj(psi[j])) < 1e-9);
            CHECK(std::abs(r.rho1.value(i, j) - (i == j ? 1.0 / N : 0.0)) < 1e-9);
        }
    // random a
    std::mt19937_64 rng(9);
    std::normal_distribution<double> g(0, 1);
    double s = 0;
    for (auto& row : a)
        for (auto& x : row) {
            x = cdouble(g(rng), g(rng));
            s += std::norm(x);
        }
    for (auto& row : a)
        for (auto& x : row) x /= std::sqrt(s);
    r = cerf_clone(f, a, psi);
    CHECK(r.closed_form_residual1 < 1e-9);
    CHECK(r.closed_form_residual3 < 1e-9);
    std::vector<std::vector<cdouble>> badA(N, std::vector<cdouble>(N, cdouble(1.0, 0)));
    CHECK_THROWS_WITH_AS(cerf_clone(f, badA, psi), doctest::Contains("NotNormalized"), Error);
}

TEST_CASE("entanglement swapping") {
    for (auto [p, mm, nn] : std::vector<std::tuple<int, GfEl, GfEl>>{{2, 0, 0}, {3, 1, 1}}) {
        GfSpec f(p, 1);
        int N = p;
        auto branches = swap_sim(f, mm, nn);
        CHECK(branches.size() == static_cast<size_t>(N) * N);
        for (const auto& b : branches) {
            CHECK(std::abs(b.probability - 1.0 / (N * N)) < 1e-9);
            CHECK(std::abs(b.fidelity - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("double-Bell overlap magnitude 1/N") {
    auto fp = field(3, 1);
    const GfSpec& f = *fp;
    int N = 3;
    // <B^{(03)}_{m',n'}, B^{(21)}_{-m',-n'} | B^{(01)}_{m,n}, B^{(23)}_{-m,-n}> has modulus 1/N
    for (GfEl m = 0; m < N; ++m)
        for (GfEl n = 0; n < N; ++n) {
            StateVec b01 = bell_state(f, m, n), b23 = bell_state(f, f.neg(m), f.neg(n));
            for (GfEl mp = 0; mp < N; ++mp)
                for (GfEl np = 0; np < N; ++np) {
                    StateVec b03 = bell_state(f, mp, np), b21 = bell_state(f, f.neg(mp), f.neg(np));
                    cdouble acc(0, 0);
                    for (int q0 = 0; q0 < N; ++q0)
                        for (int q1 = 0; q1 < N; ++q1)
                            for (int q2 = 0; q2 < N; ++q2)
                                for (int q3 = 0; q3 < N; ++q3) {
                                    cdouble lhs = b03[q0 + N * q3] * b21[q2 + N * q1];
                                    cdouble rhs = b01[q0 + N * q1] * b23[q2 + N * q3];
                                    acc += std::conj(lhs) * rhs;
                                }
                    CHECK(std::abs(std::abs(acc) - 1.0 / N) < 1e-12);
                }
        }
}
