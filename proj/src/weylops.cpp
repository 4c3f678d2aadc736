#include "mubkit/weylops.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace mubkit {

Cyclo GaloisHW::gamma_pow(GfEl e) const {
    int e0 = spec_->char_exp(e);
    if (spec_->p() == 2) return Cyclo::root_of_unity(4, 2 * e0); // gamma = -1 = i^2
    return Cyclo::root_of_unity(spec_->p(), e0);
}

CMatrix GaloisHW::V(GfEl i, GfEl j) const {
    {
        std::lock_guard<std::mutex> lock(mx_);
        auto it = cache_.find({i, j});
        if (it != cache_.end()) return it->second;
    }
    const GfSpec& f = *spec_;
    int N = static_cast<int>(f.N());
    CMatrix m = CMatrix::zeros_exact(N, N);
    for (GfEl k = 0; k < N; ++k) {
        GfEl row = f.add(k, i);
        m.ex(static_cast<int>(row), static_cast<int>(k)) = gamma_pow(f.mul(row, j));
    }
    std::lock_guard<std::mutex> lock(mx_);
    cache_.emplace(std::make_pair(i, j), m);
    return m;
}

RingHW::RingHW(int N) : N_(N) {
    if (N < 2) fail("BadParameter", "ring dimension must be >= 2");
    X_ = CMatrix::zeros(N, N);
    Z_ = CMatrix::zeros(N, N);
    constexpr double tau = 6.283185307179586476925286766559;
    for (int k = 0; k < N; ++k) {
        X_.fl((k + 1) % N, k) = 1.0;
        Z_.fl(k, k) = std::polar(1.0, tau * k / N);
    }
}

CMatrix RingHW::x_pow(int k) const {
    CMatrix m = CMatrix::identity(N_);
    int kk = ((k % N_) + N_) % N_;
    for (int i = 0; i < kk; ++i) m = X_ * m;
    return m;
}

CMatrix RingHW::z_pow(int k) const {
    CMatrix m = CMatrix::zeros(N_, N_);
    constexpr double tau = 6.283185307179586476925286766559;
    for (int j = 0; j < N_; ++j) m.fl(j, j) = std::polar(1.0, tau * j * k / N_);
    return m;
}

CMatrix RingHW::xzn_pow(int n, int k) const {
    CMatrix base = X_ * z_pow(n);
    CMatrix m = CMatrix::identity(N_);
    int kk = ((k % N_) + N_) % N_;
    for (int i = 0; i < kk; ++i) m = base * m;
    return m;
}

cdouble RingHW::beta(int n) const {
    if (n % N_ == 0) return 1.0;
    int N1 = std::gcd(n, N_);
    int N2 = N_ / N1;
    if (N2 % 2 == 0) return std::polar(1.0, M_PI / N2);
    return 1.0;
}

CMatrix RingHW::eigenbasis(int n) const {
    // <l|n,k> = N^{-1/2} beta^{-l} gamma_N^{-kl} gamma_N^{n l(l-1)/2}
    CMatrix m = CMatrix::zeros(N_, N_);
    constexpr double tau = 6.283185307179586476925286766559;
    cdouble b = beta(n);
    double s = 1.0 / std::sqrt(static_cast<double>(N_));
    for (int k = 0; k < N_; ++k)
        for (int l = 0; l < N_; ++l) {
            double ang = tau * (-(static_cast<double>(k) * l) + n * 0.5 * l * (l - 1.0)) / N_;
            m.fl(l, k) = s * std::pow(b, -l) * std::polar(1.0, ang);
        }
    return m;
}

CMatrix RingHW::xz_expand(const CMatrix& F) const {
    if (F.rows() != N_ || F.cols() != N_) fail("DimensionMismatch", "xz_expand needs an N x N matrix");
    constexpr double tau = 6.283185307179586476925286766559;
    CMatrix grid = CMatrix::zeros(N_, N_);
    double s = 1.0 / std::sqrt(static_cast<double>(N_));
    for (int j = 0; j < N_; ++j) {
        // <j^| has components conj(<l|j^>) = gamma^{jl}/sqrt(N)
        for (int k = 0; k < N_; ++k) {
            cdouble num(0, 0);
            for (int l = 0; l < N_; ++l)
                num += std::polar(s, tau * j * l / N_) * F.value(l, k);
            cdouble den = std::polar(s, tau * j * k / N_);
            grid.fl(j, k) = num / den;
        }
    }
    return grid;
}

CMatrix RingHW::xz_synthesize(const CMatrix& grid) const {
    constexpr double tau = 6.283185307179586476925286766559;
    CMatrix F = CMatrix::zeros(N_, N_);
    for (int a = 0; a < N_; ++a)
        for (int b = 0; b < N_; ++b) {
            cdouble acc(0, 0);
            for (int j = 0; j < N_; ++j)
                acc += grid.value(j, b) * std::polar(1.0, tau * j * (b - a) / N_);
            F.fl(a, b) = acc / static_cast<double>(N_);
        }
    return F;
}

RingHW::Factors RingHW::composite_factor(int N1, int N2) const {
    if (N1 * N2 != N_ || N1 <= 1 || N2 <= 1) fail("NotComposite", "need N1*N2 = N with both > 1");
    constexpr double tau = 6.283185307179586476925286766559;
    // projector onto the Z^{N2} = 1 eigenspace; Z^{N2}|k> = gamma_{N1}^k |k>
    CMatrix proj = CMatrix::zeros(N_, N_);
    for (int k = 0; k < N_; ++k) proj.fl(k, k) = (k % N1 == 0) ? 1.0 : 0.0;

    Factors f;
    CMatrix xInvN1 = x_pow(-N1);
    f.X1 = X_ - ((CMatrix::identity(N_) - xInvN1) * proj) * X_;
    f.X2 = x_pow(N1);
    f.Z1 = CMatrix::zeros(N_, N_);
    f.Z2 = CMatrix::zeros(N_, N_);
    for (int k = 0; k < N_; ++k) {
        int k1 = k % N1, k2 = k / N1;
        f.Z1.fl(k, k) = std::polar(1.0, tau * k1 / N1);
        f.Z2.fl(k, k) = std::polar(1.0, tau * k2 / N2);
    }
    return f;
}

CMatrix ring_ops(const RingHW& hw, const std::string& what, int n, int k) {
    if (what == "X_pow") return hw.x_pow(k);
    if (what == "Z_pow") return hw.z_pow(k);
    if (what == "XZn_pow") return hw.xzn_pow(n, k);
    if (what == "eigenbasis") return hw.eigenbasis(n);
    fail("BadParameter", "unknown ring op " + what);
}

namespace {

int pair_order(int m, int n, int N) {
    int om = N / std::gcd(m, N);
    int on = N / std::gcd(n, N);
    return om * on / std::gcd(om, on);
}

// columns of the joint eigenbasis of the cyclic subgroup generated by (m,n),
// extracted from the projector polynomials of the period-N generator
CMatrix subgroup_eigenbasis(const RingHW& hw, int m, int n) {
    int N = hw.N();
    cdouble phase = (N % 2 == 0) ? std::polar(1.0, M_PI * m * n / N) : cdouble(1.0, 0.0);
    CMatrix G = phase * (hw.x_pow(m) * hw.z_pow(n));
    std::vector<CMatrix> powers(N, CMatrix::identity(N));
    for (int l = 1; l < N; ++l) powers[l] = G * powers[l - 1];
    constexpr double tau = 6.283185307179586476925286766559;
    CMatrix basis = CMatrix::zeros(N, N);
    for (int k = 0; k < N; ++k) {
        CMatrix P = CMatrix::zeros(N, N);
        for (int l = 0; l < N; ++l)
            P = P + std::polar(1.0 / N, -tau * k * l / N) * powers[l];
        // P is rank one; take its best column as the eigenvector
        int best = 0;
        double bestn = -1;
        for (int j = 0; j < N; ++j) {
            double acc = 0;
            for (int i = 0; i < N; ++i) acc += std::norm(P.value(i, j));
            if (acc > bestn) {
                bestn = acc;
                best = j;
            }
        }
        double nrm = std::sqrt(bestn);
        for (int i = 0; i < N; ++i) basis.fl(i, k) = P.value(i, best) / nrm;
    }
    return basis;
}

bool bases_mu(const CMatrix& A, const CMatrix& B, double tol) {
    int N = A.rows();
    CMatrix G = A.dagger() * B;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (std::abs(std::norm(G.value(i, j)) - 1.0 / N) > tol) return false;
    return true;
}

} // namespace

int max_clique(const std::vector<std::vector<bool>>& adj) {
    int n = static_cast<int>(adj.size());
    int best = 0;
    std::vector<int> cur;
    std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& cand) {
        if (static_cast<int>(cur.size()) > best) best = static_cast<int>(cur.size());
        if (cur.size() + cand.size() <= static_cast<size_t>(best)) return;
        for (size_t idx = 0; idx < cand.size(); ++idx) {
            int v = cand[idx];
            cur.push_back(v);
            std::vector<int> next;
            for (size_t jdx = idx + 1; jdx < cand.size(); ++jdx)
                if (adj[v][cand[jdx]]) next.push_back(cand[jdx]);
            grow(next);
            cur.pop_back();
        }
    };
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    grow(all);
    return best;
}

std::vector<std::vector<int>> cliques_of_size(const std::vector<std::vector<bool>>& adj, int size) {
    int n = static_cast<int>(adj.size());
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& cand) {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        if (cur.size() + cand.size() < static_cast<size_t>(size)) return;
        for (size_t idx = 0; idx < cand.size(); ++idx) {
            int v = cand[idx];
            cur.push_back(v);
            std::vector<int> next;
            for (size_t jdx = idx + 1; jdx < cand.size(); ++jdx)
                if (adj[v][cand[jdx]]) next.push_back(cand[jdx]);
            grow(next);
            cur.pop_back();
        }
    };
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    grow(all);
    return out;
}

SubgroupReport ring_subgroups(int N, double tol) {
    if (N > 12) fail("BadParameter", "exhaustive subgroup enumeration capped at N <= 12");
    RingHW hw(N);
    SubgroupReport rep;
    rep.N = N;
    std::vector<std::vector<int>> seen; // element sets, sorted
    for (int m = 0; m < N; ++m)
        for (int n = 0; n < N; ++n) {
            if (m == 0 && n == 0) continue;
            if (pair_order(m, n, N) != N) continue;
            std::vector<int> elems;
            for (int k = 0; k < N; ++k) elems.push_back((k * m % N) * N + (k * n % N));
            std::sort(elems.begin(), elems.end());
            if (std::find(seen.begin(), seen.end(), elems) != seen.end()) continue;
            seen.push_back(elems);
            // canonical generator: lexicographically smallest order-N element
            std::pair<int, int> gen{N, N};
            for (int k = 1; k < N; ++k) {
                int gm = k * m % N, gn = k * n % N;
                if (pair_order(gm, gn, N) == N) gen = std::min(gen, {gm, gn});
            }
            rep.generators.push_back(gen);
            rep.elements.push_back(elems);
        }
    // deterministic order
    std::vector<size_t> idx(rep.generators.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](size_t a, size_t b) { return rep.generators[a] < rep.generators[b]; });
    {
        SubgroupReport sorted;
        sorted.N = N;
        for (size_t i : idx) {
            sorted.generators.push_back(rep.generators[i]);
            sorted.elements.push_back(rep.elements[i]);
        }
        rep.generators.swap(sorted.generators);
        rep.elements.swap(sorted.elements);
    }

    size_t S = rep.generators.size();
    std::vector<CMatrix> bases;
    bases.reserve(S);
    for (auto [m, n] : rep.generators) bases.push_back(subgroup_eigenbasis(hw, m, n));
    rep.adjacency.assign(S, std::vector<bool>(S, false));
    rep.partners.assign(S, {});
    for (size_t a = 0; a < S; ++a)
        for (size_t b = a + 1; b < S; ++b)
            if (bases_mu(bases[a], bases[b], tol)) {
                rep.adjacency[a][b] = rep.adjacency[b][a] = true;
                rep.partners[a].push_back(static_cast<int>(b));
                rep.partners[b].push_back(static_cast<int>(a));
            }
    rep.clique_number = max_clique(rep.adjacency);
    return rep;
}

} // namespace mubkit
