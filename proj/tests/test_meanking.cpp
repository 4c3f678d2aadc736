#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mubkit/meanking.hpp"

using namespace mubkit;

namespace {
std::shared_ptr<const GfSpec> field(int p, int m) { return std::make_shared<GfSpec>(p, m); }
}

TEST_CASE("mk basis is orthonormal and sits on the Bell pyramid") {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        auto f = field(p, m);
        MubSet mub = build_mub(f);
        int N = mub.N();
        MkBasis mk = mk_basis(mub);
        for (GfEl m1 = 0; m1 < N; ++m1)
            for (GfEl n1 = 0; n1 < N; ++n1)
                for (GfEl m2 = 0; m2 < N; ++m2)
                    for (GfEl n2 = 0; n2 < N; ++n2) {
                        cdouble ip = inner(mk.at(m1, n1), mk.at(m2, n2));
                        double expect = (m1 == m2 && n1 == n2) ? 1.0 : 0.0;
                        CHECK(std::abs(ip - expect) < 1e-12);
                    }
        // <B_{0,0}|(m,n)> = 1/N
        StateVec b00 = bell_state(*f, 0, 0);
        for (GfEl mm = 0; mm < N; ++mm)
            for (GfEl nn = 0; nn < N; ++nn)
                CHECK(std::abs(inner(b00, mk.at(mm, nn)) - cdouble(1.0 / N, 0)) < 1e-12);
        // pyramid angle: normalized superpositions have pairwise overlap (N+2)/(2N+2)
        if (N <= 5) {
            double want = static_cast<double>(N + 2) / (2 * N + 2);
            double scale = std::sqrt(static_cast<double>(N) / (2 * N + 2));
            std::vector<StateVec> edges;
            for (GfEl mm = 0; mm < N; ++mm)
                for (GfEl nn = 0; nn < N; ++nn) {
                    StateVec e = mk.at(mm, nn);
                    for (size_t t = 0; t < e.size(); ++t) e[t] = scale * (e[t] + b00[t]);
                    edges.push_back(std::move(e));
                }
            for (size_t a = 0; a < edges.size(); ++a)
                for (size_t b = a + 1; b < edges.size(); ++b)
                    CHECK(std::abs(inner(edges[a], edges[b]) - cdouble(want, 0)) < 1e-12);
        }
        // Bell expansion coefficients all have modulus 1/N
        for (GfEl mm = 0; mm < N; ++mm)
            for (GfEl nn = 0; nn < N; ++nn)
                for (GfEl r = 0; r < N; ++r)
                    for (GfEl s = 0; s < N; ++s)
                        CHECK(std::abs(std::abs(inner(bell_state(*f, r, s), mk.at(mm, nn))) - 1.0 / N) <
                              1e-12);
    }
}

TEST_CASE("inference rule") {
    GfSpec f(2, 2);
    CHECK(mk_infer(f, 2, 2, 1) == 2); // the worked grid entry
    CHECK(mk_infer(f, 4, 3, 1) == 3); // i = N: k = m
    CHECK(mk_infer(f, 0, 1, 3) == 3); // (-)3 = 3 in GF(4)
}

TEST_CASE("protocol succeeds with certainty; detectors fire uniformly") {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        MubSet mub = build_mub(field(p, m));
        MkStats st = mk_protocol_sim(mub);
        CHECK(st.cases == (mub.N() + 1) * mub.N());
        CHECK(st.success_rate == 1.0);
        CHECK(st.max_prob_dev < 1e-12);
    }
    // Monte Carlo marginals stay within 3 sigma (allowing a small safety margin
    // for the many binomials sampled)
    MkStats st = mk_protocol_sim(build_mub(field(2, 2)), 20000, 12345);
    CHECK(st.mc_trials > 0);
    CHECK(st.mc_worst_sigma < 4.5);
}

TEST_CASE("affine plane axioms and counts") {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        GfSpec f(p, m);
        auto plane = affine_plane(f);
        int N = static_cast<int>(f.N());
        CHECK(plane.axioms_ok);
        CHECK(plane.lines.size() == static_cast<size_t>(N) * N + N);
        // N+1 lines through each point
        std::vector<int> through(static_cast<size_t>(N) * N, 0);
        for (const auto& l : plane.lines)
            for (int pt : l.points) ++through[static_cast<size_t>(pt)];
        for (int t : through) CHECK(t == N + 1);
    }
}

TEST_CASE("mutually orthogonal Latin squares") {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}, {5, 1}}) {
        GfSpec f(p, m);
        int N = static_cast<int>(f.N());
        auto squares = affine_mols(f);
        CHECK(squares.size() == static_cast<size_t>(N) - 1);
        for (const auto& sq : squares) {
            for (int r = 0; r < N; ++r) {
                std::vector<bool> row(N, false), col(N, false);
                for (int c = 0; c < N; ++c) {
                    row[static_cast<size_t>(sq[r][c])] = true;
                    col[static_cast<size_t>(sq[c][r])] = true;
                }
                CHECK(std::all_of(row.begin(), row.end(), [](bool b) { return b; }));
                CHECK(std::all_of(col.begin(), col.end(), [](bool b) { return b; }));
            }
        }
        for (size_t a = 0; a < squares.size(); ++a)
            for (size_t b = a + 1; b < squares.size(); ++b) {
                std::vector<int> pairs(static_cast<size_t>(N) * N, 0);
                for (int r = 0; r < N; ++r)
                    for (int c = 0; c < N; ++c)
                        ++pairs[static_cast<size_t>(squares[a][r][c]) * N + squares[b][r][c]];
                for (int cnt : pairs) CHECK(cnt == 1); // every ordered pair exactly once
            }
    }
}

TEST_CASE("N = 3 squares match the textbook Graeco-Latin pair up to relabeling") {
    GfSpec f(3, 1);
    auto squares = affine_mols(f);
    REQUIRE(squares.size() == 2);
    // (r+c) mod 3 and (r-c) mod 3 patterns
    auto canon = [](std::vector<std::vector<GfEl>> sq) {
        // relabel symbols so the first row reads 0,1,2,...
        int n = static_cast<int>(sq.size());
        std::vector<GfEl> map(n);
        for (int c = 0; c < n; ++c) map[static_cast<size_t>(sq[0][c])] = c;
        for (auto& row : sq)
            for (auto& x : row) x = map[static_cast<size_t>(x)];
        return sq;
    };
    std::vector<std::vector<GfEl>> plus(3, std::vector<GfEl>(3)), minus(3, std::vector<GfEl>(3));
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            plus[r][c] = (r + c) % 3;
            minus[r][c] = ((r - c) % 3 + 3) % 3;
        }
    std::vector<std::vector<std::vector<GfEl>>> got{canon(squares[0]), canon(squares[1])};
    std::vector<std::vector<std::vector<GfEl>>> want{canon(plus), canon(minus)};
    bool direct = (got[0] == want[0] && got[1] == want[1]) || (got[0] == want[1] && got[1] == want[0]);
    CHECK(direct);
}

TEST_CASE("grids agree with the inference table") {
    GfSpec f(2, 2);
    auto grids = mk_grids(f);
    CHECK(grids.size() == 5);
    CHECK(grids[2][2][1] == 2);
    for (int i = 0; i <= 4; ++i)
        for (GfEl m = 0; m < 4; ++m)
            for (GfEl n = 0; n < 4; ++n) CHECK(grids[static_cast<size_t>(i)][m][n] == mk_infer(f, i, m, n));
    // exactly one line of each slope through each point: each k appears once per column
    for (int i = 0; i < 4; ++i)
        for (GfEl m = 0; m < 4; ++m) {
            std::vector<bool> seen(4, false);
            for (GfEl n = 0; n < 4; ++n) seen[static_cast<size_t>(grids[static_cast<size_t>(i)][m][n])] = true;
            CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
        }
}
