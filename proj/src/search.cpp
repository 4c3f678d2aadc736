#include "mubkit/search.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "mubkit/weylops.hpp" // cliques_of_size

namespace mubkit {

double grassmann_d2(const CMatrix& b1, const CMatrix& b2) {
    if (b1.rows() != b2.rows() || b1.cols() != b2.cols() || !b1.square())
        fail("DimensionMismatch", "grassmann_d2 needs two square bases of equal size");
    CMatrix g = b1.dagger().to_float() * b2.to_float();
    double acc = 0;
    for (int i = 0; i < g.rows(); ++i)
        for (int j = 0; j < g.cols(); ++j) {
            double p = std::norm(g.fl(i, j));
            acc += p * (1.0 - p);
        }
    return acc;
}

namespace {

// residuals r_j = |<h_j|z>|^2 - 1/N for z_k = e^{i phi_k}/sqrt(N);
// J is the real Jacobian wrt phi_1..phi_{N-1} (phi_0 fixed)
struct PhaseProblem {
    int N;
    std::vector<cdouble> Hconj; // conj(H) row-major

    explicit PhaseProblem(const HMat& h) : N(h.N()) {
        Hconj.resize(static_cast<size_t>(N) * N);
        for (int k = 0; k < N; ++k)
            for (int j = 0; j < N; ++j)
                Hconj[static_cast<size_t>(k) * N + j] = std::conj(h.m.value(k, j));
    }

    void overlaps(const std::vector<double>& phi, std::vector<cdouble>& w) const {
        w.assign(static_cast<size_t>(N), cdouble(0, 0));
        for (int k = 0; k < N; ++k) {
            cdouble ph = std::polar(1.0 / N, phi[static_cast<size_t>(k)]);
            for (int j = 0; j < N; ++j) w[static_cast<size_t>(j)] += ph * Hconj[static_cast<size_t>(k) * N + j];
        }
    }

    double value(const std::vector<double>& phi, std::vector<double>* res = nullptr) const {
        std::vector<cdouble> w;
        overlaps(phi, w);
        double f = 0;
        if (res) res->assign(static_cast<size_t>(N), 0.0);
        for (int j = 0; j < N; ++j) {
            double r = std::norm(w[static_cast<size_t>(j)]) - 1.0 / N;
            if (res) (*res)[static_cast<size_t>(j)] = r;
            f += r * r;
        }
        return f;
    }

    // Gauss-Newton / Levenberg step with backtracking; returns new f
    double descend(std::vector<double>& phi, int iters, double target) const {
        int P = N - 1;
        double lambda = 1e-3;
        std::vector<double> res;
        double f = value(phi, &res);
        std::vector<std::vector<double>> J(static_cast<size_t>(N), std::vector<double>(static_cast<size_t>(P), 0.0));
        for (int it = 0; it < iters && f > target; ++it) {
            std::vector<cdouble> w;
            overlaps(phi, w);
            for (int j = 0; j < N; ++j) {
                cdouble wj = std::conj(w[static_cast<size_t>(j)]);
                for (int k = 1; k < N; ++k) {
                    cdouble t = wj * Hconj[static_cast<size_t>(k) * N + j] *
                                std::polar(1.0 / N, phi[static_cast<size_t>(k)]);
                    J[static_cast<size_t>(j)][static_cast<size_t>(k - 1)] = -2.0 * t.imag();
                }
            }
            // normal equations with Levenberg damping
            std::vector<std::vector<double>> A(static_cast<size_t>(P), std::vector<double>(static_cast<size_t>(P), 0.0));
            std::vector<double> g(static_cast<size_t>(P), 0.0);
            for (int j = 0; j < N; ++j)
                for (int a = 0; a < P; ++a) {
                    g[static_cast<size_t>(a)] += J[static_cast<size_t>(j)][static_cast<size_t>(a)] * res[static_cast<size_t>(j)];
                    for (int b = a; b < P; ++b)
                        A[static_cast<size_t>(a)][static_cast<size_t>(b)] +=
                            J[static_cast<size_t>(j)][static_cast<size_t>(a)] * J[static_cast<size_t>(j)][static_cast<size_t>(b)];
                }
            for (int a = 0; a < P; ++a)
                for (int b = 0; b < a; ++b) A[static_cast<size_t>(a)][static_cast<size_t>(b)] = A[static_cast<size_t>(b)][static_cast<size_t>(a)];
            bool improved = false;
            for (int attempt = 0; attempt < 8 && !improved; ++attempt) {
                std::vector<std::vector<double>> M = A;
                for (int a = 0; a < P; ++a) M[static_cast<size_t>(a)][static_cast<size_t>(a)] += lambda * (1.0 + A[static_cast<size_t>(a)][static_cast<size_t>(a)]);
                // solve M d = -g by Gaussian elimination
                std::vector<double> d = g;
                std::vector<std::vector<double>> W = M;
                std::vector<int> piv(static_cast<size_t>(P));
                bool singular = false;
                for (int c = 0; c < P && !singular; ++c) {
                    int best = c;
                    for (int r2 = c + 1; r2 < P; ++r2)
                        if (std::abs(W[static_cast<size_t>(r2)][static_cast<size_t>(c)]) > std::abs(W[static_cast<size_t>(best)][static_cast<size_t>(c)])) best = r2;
                    if (std::abs(W[static_cast<size_t>(best)][static_cast<size_t>(c)]) < 1e-300) {
                        singular = true;
                        break;
                    }
                    std::swap(W[static_cast<size_t>(c)], W[static_cast<size_t>(best)]);
                    std::swap(d[static_cast<size_t>(c)], d[static_cast<size_t>(best)]);
                    for (int r2 = c + 1; r2 < P; ++r2) {
                        double fac = W[static_cast<size_t>(r2)][static_cast<size_t>(c)] / W[static_cast<size_t>(c)][static_cast<size_t>(c)];
                        if (fac == 0) continue;
                        for (int c2 = c; c2 < P; ++c2) W[static_cast<size_t>(r2)][static_cast<size_t>(c2)] -= fac * W[static_cast<size_t>(c)][static_cast<size_t>(c2)];
                        d[static_cast<size_t>(r2)] -= fac * d[static_cast<size_t>(c)];
                    }
                }
                if (singular) {
                    lambda *= 10;
                    continue;
                }
                for (int c = P - 1; c >= 0; --c) {
                    for (int c2 = c + 1; c2 < P; ++c2) d[static_cast<size_t>(c)] -= W[static_cast<size_t>(c)][static_cast<size_t>(c2)] * d[static_cast<size_t>(c2)];
                    d[static_cast<size_t>(c)] /= W[static_cast<size_t>(c)][static_cast<size_t>(c)];
                }
                // backtracking on the step -d
                double step = 1.0;
                for (int bt = 0; bt < 6 && !improved; ++bt) {
                    std::vector<double> cand = phi;
                    for (int a = 0; a < P; ++a) cand[static_cast<size_t>(a + 1)] -= step * d[static_cast<size_t>(a)];
                    std::vector<double> res2;
                    double f2 = value(cand, &res2);
                    if (f2 < f) {
                        phi.swap(cand);
                        res.swap(res2);
                        f = f2;
                        improved = true;
                        lambda = std::max(lambda / 3, 1e-12);
                    } else {
                        step *= 0.5;
                    }
                }
                if (!improved) lambda *= 10;
            }
            if (!improved) break; // stuck in a flat spot; restart will move on
        }
        return f;
    }
};

} // namespace

UnbiasedCatalog unbiased_vector_search(const HMat& anchor, long long max_restarts, double accept_tol,
                                       double dedup_tol, std::uint64_t seed, int saturation_window) {
    if (max_restarts < 1) fail("BadParameter", "need at least one restart");
    int N = anchor.N();
    PhaseProblem prob(anchor);
    UnbiasedCatalog cat;
    cat.anchor = anchor;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 6.283185307179586476925286766559);
    std::vector<std::vector<double>> found_phases;
    int since_new = 0;
    constexpr double tau = 6.283185307179586476925286766559;
    for (long long r = 0; r < max_restarts; ++r) {
        ++cat.restarts_used;
        std::vector<double> phi(static_cast<size_t>(N), 0.0);
        for (int k = 1; k < N; ++k) phi[static_cast<size_t>(k)] = uni(rng);
        double f = prob.descend(phi, 120, accept_tol * accept_tol);
        ++since_new;
        if (f < accept_tol * accept_tol) {
            for (int k = 1; k < N; ++k) {
                phi[static_cast<size_t>(k)] = std::fmod(phi[static_cast<size_t>(k)], tau);
                if (phi[static_cast<size_t>(k)] < 0) phi[static_cast<size_t>(k)] += tau;
            }
            bool fresh = true;
            for (const auto& other : found_phases) {
                double dist = 0;
                for (int k = 1; k < N; ++k) {
                    double dd = std::abs(std::polar(1.0, phi[static_cast<size_t>(k)]) - std::polar(1.0, other[static_cast<size_t>(k)]));
                    dist += dd * dd;
                }
                if (std::sqrt(dist / N) < dedup_tol) {
                    fresh = false;
                    break;
                }
            }
            if (fresh) {
                found_phases.push_back(phi);
                since_new = 0;
            }
        }
        if (since_new >= saturation_window) {
            cat.saturated = true;
            break;
        }
    }
    // materialize vectors and residuals
    double s = 1.0 / std::sqrt(static_cast<double>(N));
    for (const auto& phi : found_phases) {
        std::vector<cdouble> z(static_cast<size_t>(N));
        for (int k = 0; k < N; ++k) z[static_cast<size_t>(k)] = std::polar(s, phi[static_cast<size_t>(k)]);
        std::vector<double> res;
        prob.value(phi, &res);
        for (double rr : res) cat.worst_residual = std::max(cat.worst_residual, std::abs(rr));
        cat.vectors.push_back(std::move(z));
    }
    cat.Nv = static_cast<int>(cat.vectors.size());
    // cluster into bases: cliques of size N in the orthogonality graph
    size_t M = cat.vectors.size();
    std::vector<std::vector<bool>> adj(M, std::vector<bool>(M, false));
    for (size_t a = 0; a < M; ++a)
        for (size_t b = a + 1; b < M; ++b) {
            cdouble ip(0, 0);
            for (int k = 0; k < N; ++k) ip += std::conj(cat.vectors[a][static_cast<size_t>(k)]) * cat.vectors[b][static_cast<size_t>(k)];
            if (std::abs(ip) < 1e-6) adj[a][b] = adj[b][a] = true;
        }
    cat.bases = cliques_of_size(adj, N);
    cat.Nt = static_cast<int>(cat.bases.size());
    return cat;
}

namespace {

struct ConstellationProblem {
    int N;
    std::vector<int> shape;
    int vecs = 0;

    explicit ConstellationProblem(int n, std::vector<int> sh) : N(n), shape(std::move(sh)) {
        for (int s : shape) vecs += s;
    }

    int params() const { return vecs * 2 * N; }

    // vector t starts at offset(t) in the flat parameter array: x_0..x_{N-1}, y_0..y_{N-1}
    cdouble vcomp(const std::vector<double>& p, int t, int k) const {
        return {p[static_cast<size_t>(t * 2 * N + k)], p[static_cast<size_t>(t * 2 * N + N + k)]};
    }

    double penalty(const std::vector<double>& p) const {
        double f = 0;
        std::vector<std::pair<int, int>> owner; // (set, index)
        for (int s = 0; s < static_cast<int>(shape.size()); ++s)
            for (int t = 0; t < shape[static_cast<size_t>(s)]; ++t) owner.push_back({s, t});
        for (int a = 0; a < vecs; ++a) {
            double n2 = 0;
            for (int k = 0; k < N; ++k) n2 += std::norm(vcomp(p, a, k));
            f += (n2 - 1) * (n2 - 1);
            for (int b = a + 1; b < vecs; ++b) {
                cdouble ip(0, 0);
                for (int k = 0; k < N; ++k) ip += std::conj(vcomp(p, a, k)) * vcomp(p, b, k);
                if (owner[static_cast<size_t>(a)].first == owner[static_cast<size_t>(b)].first)
                    f += std::norm(ip);
                else {
                    double d = std::norm(ip) - 1.0 / N;
                    f += d * d;
                }
            }
        }
        return f;
    }

    // residual vector and its Jacobian, for the Gauss-Newton polish
    void residuals(const std::vector<double>& p, std::vector<double>& r,
                   std::vector<std::vector<double>>* J) const {
        std::vector<std::pair<int, int>> owner;
        for (int s = 0; s < static_cast<int>(shape.size()); ++s)
            for (int t = 0; t < shape[static_cast<size_t>(s)]; ++t) owner.push_back({s, t});
        r.clear();
        if (J) J->clear();
        int P = params();
        auto push = [&](double val, const std::vector<std::pair<int, double>>& row) {
            r.push_back(val);
            if (J) {
                std::vector<double> jr(static_cast<size_t>(P), 0.0);
                for (auto [idx, v] : row) jr[static_cast<size_t>(idx)] += v;
                J->push_back(std::move(jr));
            }
        };
        for (int a = 0; a < vecs; ++a) {
            double n2 = 0;
            std::vector<std::pair<int, double>> row;
            for (int k = 0; k < N; ++k) {
                cdouble v = vcomp(p, a, k);
                n2 += std::norm(v);
                row.push_back({a * 2 * N + k, 2 * v.real()});
                row.push_back({a * 2 * N + N + k, 2 * v.imag()});
            }
            push(n2 - 1, row);
            for (int b = a + 1; b < vecs; ++b) {
                cdouble ip(0, 0);
                for (int k = 0; k < N; ++k) ip += std::conj(vcomp(p, a, k)) * vcomp(p, b, k);
                if (owner[static_cast<size_t>(a)].first == owner[static_cast<size_t>(b)].first) {
                    std::vector<std::pair<int, double>> rowRe, rowIm;
                    for (int k = 0; k < N; ++k) {
                        cdouble va = vcomp(p, a, k), vb = vcomp(p, b, k);
                        rowRe.push_back({a * 2 * N + k, vb.real()});
                        rowRe.push_back({a * 2 * N + N + k, vb.imag()});
                        rowRe.push_back({b * 2 * N + k, va.real()});
                        rowRe.push_back({b * 2 * N + N + k, va.imag()});
                        rowIm.push_back({a * 2 * N + k, vb.imag()});
                        rowIm.push_back({a * 2 * N + N + k, -vb.real()});
                        rowIm.push_back({b * 2 * N + k, -va.imag()});
                        rowIm.push_back({b * 2 * N + N + k, va.real()});
                    }
                    push(ip.real(), rowRe);
                    push(ip.imag(), rowIm);
                } else {
                    std::vector<std::pair<int, double>> row;
                    for (int k = 0; k < N; ++k) {
                        cdouble ca = std::conj(ip) * vcomp(p, b, k);
                        cdouble cb = ip * vcomp(p, a, k);
                        row.push_back({a * 2 * N + k, 2 * ca.real()});
                        row.push_back({a * 2 * N + N + k, 2 * ca.imag()});
                        row.push_back({b * 2 * N + k, 2 * cb.real()});
                        row.push_back({b * 2 * N + N + k, 2 * cb.imag()});
                    }
                    push(std::norm(ip) - 1.0 / N, row);
                }
            }
        }
    }

    // Levenberg-Marquardt tail polish; returns the final penalty
    double polish(std::vector<double>& p, int iters) const {
        int P = params();
        double lambda = 1e-4;
        double f = penalty(p);
        for (int it = 0; it < iters && f > 1e-26; ++it) {
            std::vector<double> r;
            std::vector<std::vector<double>> J;
            residuals(p, r, &J);
            size_t R = r.size();
            std::vector<std::vector<double>> A(static_cast<size_t>(P), std::vector<double>(static_cast<size_t>(P), 0.0));
            std::vector<double> g(static_cast<size_t>(P), 0.0);
            for (size_t q = 0; q < R; ++q) {
                for (int a2 = 0; a2 < P; ++a2) {
                    double ja = J[q][static_cast<size_t>(a2)];
                    if (ja == 0) continue;
                    g[static_cast<size_t>(a2)] += ja * r[q];
                    for (int b2 = a2; b2 < P; ++b2) A[static_cast<size_t>(a2)][static_cast<size_t>(b2)] += ja * J[q][static_cast<size_t>(b2)];
                }
            }
            for (int a2 = 0; a2 < P; ++a2)
                for (int b2 = 0; b2 < a2; ++b2) A[static_cast<size_t>(a2)][static_cast<size_t>(b2)] = A[static_cast<size_t>(b2)][static_cast<size_t>(a2)];
            bool improved = false;
            for (int attempt = 0; attempt < 8 && !improved; ++attempt) {
                std::vector<std::vector<double>> W = A;
                for (int a2 = 0; a2 < P; ++a2) W[static_cast<size_t>(a2)][static_cast<size_t>(a2)] += lambda * (1.0 + A[static_cast<size_t>(a2)][static_cast<size_t>(a2)]);
                std::vector<double> d = g;
                bool singular = false;
                for (int c = 0; c < P && !singular; ++c) {
                    int best = c;
                    for (int r2 = c + 1; r2 < P; ++r2)
                        if (std::abs(W[static_cast<size_t>(r2)][static_cast<size_t>(c)]) > std::abs(W[static_cast<size_t>(best)][static_cast<size_t>(c)])) best = r2;
                    if (std::abs(W[static_cast<size_t>(best)][static_cast<size_t>(c)]) < 1e-300) {
                        singular = true;
                        break;
                    }
                    std::swap(W[static_cast<size_t>(c)], W[static_cast<size_t>(best)]);
                    std::swap(d[static_cast<size_t>(c)], d[static_cast<size_t>(best)]);
                    for (int r2 = c + 1; r2 < P; ++r2) {
                        double fac = W[static_cast<size_t>(r2)][static_cast<size_t>(c)] / W[static_cast<size_t>(c)][static_cast<size_t>(c)];
                        if (fac == 0) continue;
                        for (int c2 = c; c2 < P; ++c2) W[static_cast<size_t>(r2)][static_cast<size_t>(c2)] -= fac * W[static_cast<size_t>(c)][static_cast<size_t>(c2)];
                        d[static_cast<size_t>(r2)] -= fac * d[static_cast<size_t>(c)];
                    }
                }
                if (singular) {
                    lambda *= 10;
                    continue;
                }
                for (int c = P - 1; c >= 0; --c) {
                    for (int c2 = c + 1; c2 < P; ++c2) d[static_cast<size_t>(c)] -= W[static_cast<size_t>(c)][static_cast<size_t>(c2)] * d[static_cast<size_t>(c2)];
                    d[static_cast<size_t>(c)] /= W[static_cast<size_t>(c)][static_cast<size_t>(c)];
                }
                std::vector<double> cand = p;
                for (int a2 = 0; a2 < P; ++a2) cand[static_cast<size_t>(a2)] -= d[static_cast<size_t>(a2)];
                double f2 = penalty(cand);
                if (f2 < f) {
                    p.swap(cand);
                    f = f2;
                    improved = true;
                    lambda = std::max(lambda / 4, 1e-14);
                } else {
                    lambda *= 10;
                }
            }
            if (!improved) break;
        }
        return f;
    }

    // numerical-free analytic gradient
    void gradient(const std::vector<double>& p, std::vector<double>& g) const {
        g.assign(p.size(), 0.0);
        std::vector<std::pair<int, int>> owner;
        for (int s = 0; s < static_cast<int>(shape.size()); ++s)
            for (int t = 0; t < shape[static_cast<size_t>(s)]; ++t) owner.push_back({s, t});
        for (int a = 0; a < vecs; ++a) {
            double n2 = 0;
            for (int k = 0; k < N; ++k) n2 += std::norm(vcomp(p, a, k));
            double w = 2 * (n2 - 1);
            for (int k = 0; k < N; ++k) {
                g[static_cast<size_t>(a * 2 * N + k)] += w * 2 * vcomp(p, a, k).real();
                g[static_cast<size_t>(a * 2 * N + N + k)] += w * 2 * vcomp(p, a, k).imag();
            }
            for (int b = a + 1; b < vecs; ++b) {
                cdouble ip(0, 0);
                for (int k = 0; k < N; ++k) ip += std::conj(vcomp(p, a, k)) * vcomp(p, b, k);
                // chain factor: d(term)/d|ip|^2, i.e. 1 for |ip|^2 itself and
                // 2(|ip|^2 - 1/N) for the squared unbiasedness residual
                double w2 = (owner[static_cast<size_t>(a)].first == owner[static_cast<size_t>(b)].first)
                                ? 1.0
                                : 2.0 * (std::norm(ip) - 1.0 / N);
                // d|ip|^2/d(xa_k, ya_k) = (2Re, 2Im) of conj(ip)*vb_k;
                // d|ip|^2/d(xb_k, yb_k) = (2Re, 2Im) of ip*va_k
                for (int k = 0; k < N; ++k) {
                    cdouble ca = std::conj(ip) * vcomp(p, b, k);
                    cdouble cb = ip * vcomp(p, a, k);
                    g[static_cast<size_t>(a * 2 * N + k)] += w2 * 2 * ca.real();
                    g[static_cast<size_t>(a * 2 * N + N + k)] += w2 * 2 * ca.imag();
                    g[static_cast<size_t>(b * 2 * N + k)] += w2 * 2 * cb.real();
                    g[static_cast<size_t>(b * 2 * N + N + k)] += w2 * 2 * cb.imag();
                }
            }
        }
    }
};

} // namespace

double constellation_penalty(const std::vector<std::vector<std::vector<cdouble>>>& sets, int N) {
    std::vector<int> shape;
    for (const auto& s : sets) shape.push_back(static_cast<int>(s.size()));
    ConstellationProblem prob(N, shape);
    std::vector<double> p(static_cast<size_t>(prob.params()), 0.0);
    int t = 0;
    for (const auto& s : sets)
        for (const auto& v : s) {
            for (int k = 0; k < N; ++k) {
                p[static_cast<size_t>(t * 2 * N + k)] = v[static_cast<size_t>(k)].real();
                p[static_cast<size_t>(t * 2 * N + N + k)] = v[static_cast<size_t>(k)].imag();
            }
            ++t;
        }
    return prob.penalty(p);
}

ConstellationResult constellation_search(const std::vector<int>& shape, int N, int restarts,
                                         std::uint64_t seed, int max_iters) {
    long long total = 0;
    for (int s : shape) total += s;
    if (total > static_cast<long long>(N) * (N + 1)) fail("BadParameter", "constellation too large");
    ConstellationProblem prob(N, shape);
    ConstellationResult out;
    out.shape = shape;
    out.best_penalty = 1e100;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0, 1);
    int P = prob.params();
    for (int r = 0; r < restarts; ++r) {
        ++out.restarts_used;
        std::vector<double> p(static_cast<size_t>(P));
        for (auto& x : p) x = gauss(rng);
        // normalize each vector to unit length as a starting point
        for (int t = 0; t < prob.vecs; ++t) {
            double n2 = 0;
            for (int k = 0; k < 2 * N; ++k) n2 += p[static_cast<size_t>(t * 2 * N + k)] * p[static_cast<size_t>(t * 2 * N + k)];
            double s = 1.0 / std::sqrt(n2);
            for (int k = 0; k < 2 * N; ++k) p[static_cast<size_t>(t * 2 * N + k)] *= s;
        }
        double f = prob.penalty(p);
        std::vector<double> g;
        double step = 0.1;
        for (int it = 0; it < max_iters && f > 1e-14; ++it) {
            prob.gradient(p, g);
            double gn = 0;
            for (double x : g) gn += x * x;
            if (gn < 1e-28) break;
            bool moved = false;
            for (int bt = 0; bt < 20 && !moved; ++bt) {
                std::vector<double> cand = p;
                for (size_t k = 0; k < cand.size(); ++k) cand[k] -= step * g[k];
                double f2 = prob.penalty(cand);
                if (f2 < f) {
                    p.swap(cand);
                    f = f2;
                    moved = true;
                    step *= 1.6;
                } else {
                    step *= 0.4;
                }
            }
            if (!moved) break;
        }
        // quadratic tail: the gradient phase only reaches the basin
        f = prob.polish(p, 60);
        if (f < out.best_penalty) {
            out.best_penalty = f;
            out.witness.clear();
            int t = 0;
            for (int s : shape) {
                std::vector<std::vector<cdouble>> setv;
                for (int q = 0; q < s; ++q) {
                    std::vector<cdouble> v(static_cast<size_t>(N));
                    for (int k = 0; k < N; ++k) v[static_cast<size_t>(k)] = prob.vcomp(p, t, k);
                    setv.push_back(std::move(v));
                    ++t;
                }
                out.witness.push_back(std::move(setv));
            }
        }
        if (out.best_penalty < 1e-12) break;
    }
    out.success = out.best_penalty < 1e-12;
    return out;
}

ExtendabilityReport extendability_probe(const UnbiasedCatalog& catalog) {
    if (catalog.bases.size() < 2) fail("IncompleteCatalog", "need at least two bases in the catalog");
    int N = catalog.anchor.N();
    ExtendabilityReport rep;
    auto basis_matrix = [&](const std::vector<int>& idx) {
        CMatrix b = CMatrix::zeros(N, N);
        for (int c = 0; c < N; ++c)
            for (int r = 0; r < N; ++r) b.fl(r, c) = catalog.vectors[static_cast<size_t>(idx[static_cast<size_t>(c)])][static_cast<size_t>(r)];
        return b;
    };
    for (size_t a = 0; a < catalog.bases.size(); ++a)
        for (size_t b = a + 1; b < catalog.bases.size(); ++b) {
            double d2 = grassmann_d2(basis_matrix(catalog.bases[a]), basis_matrix(catalog.bases[b]));
            rep.max_d2_raw = std::max(rep.max_d2_raw, d2);
            ++rep.pairs;
        }
    rep.max_d2_normalized = rep.max_d2_raw / (N - 1);
    return rep;
}

} // namespace mubkit
