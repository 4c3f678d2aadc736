#include "mubkit/meanking.hpp"

#include <cmath>
#include <random>

namespace mubkit {

namespace {

StateVec conjugate_pair_state(const CMatrix& basis, int col, int N) {
    // |e*, e> for the col-th column of the basis matrix
    StateVec v(static_cast<size_t>(N) * N);
    for (int a = 0; a < N; ++a) {
        cdouble ca = std::conj(basis.value(a, col));
        for (int b = 0; b < N; ++b)
            v[static_cast<size_t>(a) + static_cast<size_t>(N) * b] = ca * basis.value(b, col);
    }
    return v;
}

} // namespace

MkBasis mk_basis(const MubSet& mub) {
    int N = mub.N();
    const GfSpec& f = *mub.spec;
    GaloisHW hw(mub.spec);
    StateVec seed(static_cast<size_t>(N) * N, cdouble(0, 0));
    double s = 1.0 / std::sqrt(static_cast<double>(N));
    for (int i = 0; i <= N; ++i) {
        StateVec t = conjugate_pair_state(mub.bases[i], 0, N);
        for (size_t x = 0; x < seed.size(); ++x) seed[x] += s * t[x];
    }
    StateVec b00 = bell_state(f, 0, 0);
    for (size_t x = 0; x < seed.size(); ++x) seed[x] -= b00[x];

    MkBasis mk;
    mk.N = N;
    mk.vectors.assign(static_cast<size_t>(N) * N, {});
    for (GfEl m = 0; m < N; ++m)
        for (GfEl n = 0; n < N; ++n) {
            CMatrix vm = hw.V(m, n).to_float();
            CMatrix vmconj = vm;
            for (int r = 0; r < N; ++r)
                for (int c = 0; c < N; ++c) vmconj.fl(r, c) = std::conj(vm.fl(r, c));
            StateVec t = apply_local(vmconj, seed, 0, 2, N);
            t = apply_local(vm, t, 1, 2, N);
            mk.vectors[static_cast<size_t>(m) * N + n] = std::move(t);
        }
    return mk;
}

GfEl mk_infer(const GfSpec& f, int i, GfEl m, GfEl n) {
    if (i == f.N()) return m;
    return f.sub(f.mul(i, m), n);
}

MkStats mk_protocol_sim(const MubSet& mub, long long trials, std::uint64_t seed) {
    int N = mub.N();
    const GfSpec& f = *mub.spec;
    MkBasis mk = mk_basis(mub);
    MkStats st;
    std::mt19937_64 rng(seed);
    long long successes = 0, total = 0;
    for (int i = 0; i <= N; ++i)
        for (GfEl k = 0; k < N; ++k) {
            StateVec prep = conjugate_pair_state(mub.bases[i], static_cast<int>(k), N);
            std::vector<double> probs(static_cast<size_t>(N) * N);
            bool all_infer_ok = true;
            for (GfEl m = 0; m < N; ++m)
                for (GfEl n = 0; n < N; ++n) {
                    double p = std::norm(inner(mk.at(m, n), prep));
                    probs[static_cast<size_t>(m) * N + n] = p;
                    if (p > 1e-12) {
                        st.max_prob_dev = std::max(st.max_prob_dev, std::abs(p - 1.0 / N));
                        if (mk_infer(f, i, m, n) != k) all_infer_ok = false;
                    }
                }
            ++st.cases;
            if (all_infer_ok) ++successes;
            ++total;
            if (trials > 0) {
                // sample detectors and re-run the inference on draws
                std::discrete_distribution<int> dist(probs.begin(), probs.end());
                std::vector<long long> hits(probs.size(), 0);
                for (long long t = 0; t < trials; ++t) ++hits[static_cast<size_t>(dist(rng))];
                st.mc_trials += trials;
                for (size_t d = 0; d < probs.size(); ++d) {
                    if (probs[d] < 1e-12) continue;
                    double expect = trials * probs[d];
                    double sigma = std::sqrt(trials * probs[d] * (1 - probs[d]));
                    if (sigma > 0)
                        st.mc_worst_sigma =
                            std::max(st.mc_worst_sigma, std::abs(hits[d] - expect) / sigma);
                }
            }
        }
    st.success_rate = static_cast<double>(successes) / total;
    return st;
}

AffinePlane affine_plane(const GfSpec& f) {
    int N = static_cast<int>(f.N());
    AffinePlane plane;
    plane.N = N;
    // canonical (a,b): (1,b) for every b, plus (0,1)
    std::vector<std::pair<GfEl, GfEl>> dirs;
    for (GfEl b = 0; b < N; ++b) dirs.push_back({1, b});
    dirs.push_back({0, 1});
    for (auto [a, b] : dirs)
        for (GfEl c = 0; c < N; ++c) {
            AffineLine line{a, b, c, {}};
            for (GfEl m = 0; m < N; ++m)
                for (GfEl n = 0; n < N; ++n)
                    if (f.mul(a, m) == f.add(f.mul(b, n), c))
                        line.points.push_back(static_cast<int>(m) * N + static_cast<int>(n));
            plane.lines.push_back(std::move(line));
        }

    auto fail_with = [&plane](const std::string& why) {
        plane.axioms_ok = false;
        plane.violation = why;
    };
    plane.axioms_ok = true;
    // each line has N points; N^2 + N lines
    if (plane.lines.size() != static_cast<size_t>(N) * N + N) fail_with("line count");
    for (const auto& l : plane.lines)
        if (static_cast<int>(l.points.size()) != N) fail_with("line size");
    // A1: two distinct points lie on exactly one common line
    for (int pnt = 0; pnt < N * N && plane.axioms_ok; ++pnt)
        for (int q = pnt + 1; q < N * N && plane.axioms_ok; ++q) {
            int common = 0;
            for (const auto& l : plane.lines) {
                bool hasP = std::find(l.points.begin(), l.points.end(), pnt) != l.points.end();
                bool hasQ = std::find(l.points.begin(), l.points.end(), q) != l.points.end();
                if (hasP && hasQ) ++common;
            }
            if (common != 1)
                fail_with("A1 fails for points " + std::to_string(pnt) + "," + std::to_string(q));
        }
    // A2: unique parallel through an external point
    for (size_t li = 0; li < plane.lines.size() && plane.axioms_ok; ++li)
        for (int pnt = 0; pnt < N * N && plane.axioms_ok; ++pnt) {
            const auto& l = plane.lines[li];
            if (std::find(l.points.begin(), l.points.end(), pnt) != l.points.end()) continue;
            int parallels = 0;
            for (const auto& l2 : plane.lines) {
                if (std::find(l2.points.begin(), l2.points.end(), pnt) == l2.points.end()) continue;
                std::vector<int> inter;
                std::set_intersection(l.points.begin(), l.points.end(), l2.points.begin(),
                                      l2.points.end(), std::back_inserter(inter));
                if (inter.empty()) ++parallels;
            }
            if (parallels != 1) fail_with("A2 fails");
        }
    // A3 is immediate for N >= 2
    if (N < 2) fail_with("A3 fails");
    return plane;
}

std::vector<std::vector<std::vector<GfEl>>> affine_mols(const GfSpec& f) {
    int N = static_cast<int>(f.N());
    std::vector<std::vector<std::vector<GfEl>>> squares;
    for (GfEl i = 1; i < N; ++i) {
        std::vector<std::vector<GfEl>> sq(N, std::vector<GfEl>(N));
        for (GfEl m = 0; m < N; ++m)
            for (GfEl n = 0; n < N; ++n) sq[static_cast<size_t>(m)][static_cast<size_t>(n)] = mk_infer(f, static_cast<int>(i), m, n);
        squares.push_back(std::move(sq));
    }
    return squares;
}

std::vector<std::vector<std::vector<GfEl>>> mk_grids(const GfSpec& f) {
    int N = static_cast<int>(f.N());
    std::vector<std::vector<std::vector<GfEl>>> grids;
    for (int i = 0; i <= N; ++i) {
        std::vector<std::vector<GfEl>> g(N, std::vector<GfEl>(N));
        for (GfEl m = 0; m < N; ++m)
            for (GfEl n = 0; n < N; ++n) g[static_cast<size_t>(m)][static_cast<size_t>(n)] = mk_infer(f, i, m, n);
        grids.push_back(std::move(g));
    }
    return grids;
}

} // namespace mubkit
