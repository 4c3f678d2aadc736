#include "mubkit/bellproto.hpp"

#include <cmath>

namespace mubkit {

double norm2(const StateVec& v) {
    double s = 0;
    for (const auto& x : v) s += std::norm(x);
    return s;
}

cdouble inner(const StateVec& a, const StateVec& b) {
    if (a.size() != b.size()) fail("DimensionMismatch", "inner product");
    cdouble s(0, 0);
    for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

StateVec bell_state(const GfSpec& f, GfEl m, GfEl n) {
    int N = static_cast<int>(f.N());
    GaloisHW hw(std::make_shared<GfSpec>(f));
    StateVec v(static_cast<size_t>(N) * N, cdouble(0, 0));
    double s = 1.0 / std::sqrt(static_cast<double>(N));
    for (GfEl k = 0; k < N; ++k) {
        GfEl km = f.add(k, m);
        v[static_cast<size_t>(k) + static_cast<size_t>(N) * km] =
            s * hw.gamma_pow(f.mul(km, n)).to_complex();
    }
    return v;
}

StateVec apply_local(const CMatrix& op, const StateVec& psi, int which, int nparticles, int N) {
    size_t dim = psi.size();
    size_t stride = 1;
    for (int t = 0; t < which; ++t) stride *= N;
    StateVec out(dim, cdouble(0, 0));
    for (size_t base = 0; base < dim; ++base) {
        int digit = static_cast<int>(base / stride) % N;
        if (digit != 0) continue; // enumerate each fiber once
        for (int col = 0; col < N; ++col) {
            cdouble amp = psi[base + stride * col];
            if (amp == cdouble(0, 0)) continue;
            for (int row = 0; row < N; ++row) {
                cdouble o = op.value(row, col);
                if (o != cdouble(0, 0)) out[base + stride * row] += o * amp;
            }
        }
    }
    (void)nparticles;
    return out;
}

namespace {

// density matrix of the kept particles (ascending order), tracing out the rest
CMatrix partial_trace(const StateVec& psi, int nparticles, int N, const std::vector<int>& keep) {
    std::vector<int> traced;
    for (int t = 0; t < nparticles; ++t)
        if (std::find(keep.begin(), keep.end(), t) == keep.end()) traced.push_back(t);
    size_t dimKeep = 1;
    for (size_t t = 0; t < keep.size(); ++t) dimKeep *= N;
    size_t dimTr = psi.size() / dimKeep;
    auto compose = [&](size_t kIdx, size_t tIdx) {
        size_t full = 0, mult = 1;
        std::vector<int> digit(nparticles, 0);
        size_t kk = kIdx, tt = tIdx;
        for (int q : keep) {
            digit[q] = static_cast<int>(kk % N);
            kk /= N;
        }
        for (int q : traced) {
            digit[q] = static_cast<int>(tt % N);
            tt /= N;
        }
        for (int t = 0; t < nparticles; ++t) {
            full += static_cast<size_t>(digit[t]) * mult;
            mult *= N;
        }
        return full;
    };
    CMatrix rho = CMatrix::zeros(static_cast<int>(dimKeep), static_cast<int>(dimKeep));
    for (size_t tr = 0; tr < dimTr; ++tr)
        for (size_t i = 0; i < dimKeep; ++i) {
            cdouble ai = psi[compose(i, tr)];
            if (ai == cdouble(0, 0)) continue;
            for (size_t j = 0; j < dimKeep; ++j)
                rho.fl(static_cast<int>(i), static_cast<int>(j)) += ai * std::conj(psi[compose(j, tr)]);
        }
    return rho;
}

} // namespace

DenseCodingResult dense_coding_sim(const GfSpec& f, GfEl m, GfEl n) {
    int N = static_cast<int>(f.N());
    GaloisHW hw(std::make_shared<GfSpec>(f));
    StateVec seed = bell_state(f, 0, 0);
    StateVec sent = apply_local(hw.V(m, n).to_float(), seed, 1, 2, N);
    DenseCodingResult best{0, 0, -1.0};
    for (GfEl mm = 0; mm < N; ++mm)
        for (GfEl nn = 0; nn < N; ++nn) {
            double p = std::norm(inner(bell_state(f, mm, nn), sent));
            if (p > best.probability) best = {mm, nn, p};
        }
    return best;
}

std::vector<TeleportBranch> teleport_sim(const GfSpec& f, const StateVec& psi) {
    int N = static_cast<int>(f.N());
    if (static_cast<int>(psi.size()) != N) fail("DimensionMismatch", "psi must have dimension N");
    if (std::abs(norm2(psi) - 1.0) > 1e-12) fail("NotNormalized", "psi must be a unit vector");
    GaloisHW hw(std::make_shared<GfSpec>(f));
    // initial state: q-nits 1 and 3 in the Bell seed, q-nit 2 carries psi
    size_t dim = static_cast<size_t>(N) * N * N;
    StateVec state(dim, cdouble(0, 0));
    double s = 1.0 / std::sqrt(static_cast<double>(N));
    for (int k = 0; k < N; ++k)
        for (int j = 0; j < N; ++j)
            state[static_cast<size_t>(k) + static_cast<size_t>(N) * j +
                  static_cast<size_t>(N) * N * k] = s * psi[j];
    std::vector<TeleportBranch> out;
    for (GfEl m = 0; m < N; ++m)
        for (GfEl n = 0; n < N; ++n) {
            StateVec bell = bell_state(f, m, n);
            StateVec v3(N, cdouble(0, 0));
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b) {
                    cdouble w = std::conj(bell[static_cast<size_t>(a) + static_cast<size_t>(N) * b]);
                    if (w == cdouble(0, 0)) continue;
                    for (int c = 0; c < N; ++c)
                        v3[c] += w * state[static_cast<size_t>(a) + static_cast<size_t>(N) * b +
                                           static_cast<size_t>(N) * N * c];
                }
            double p = norm2(v3);
            StateVec fixed = matvec(hw.V(m, n).to_float(), v3);
            double fid = std::norm(inner(psi, fixed)) / p;
            out.push_back({m, n, p, fid});
        }
    return out;
}

CloneResult cerf_clone(const GfSpec& f, const std::vector<std::vector<cdouble>>& a,
                       const StateVec& psi) {
    int N = static_cast<int>(f.N());
    double asum = 0;
    for (const auto& row : a)
        for (const auto& x : row) asum += std::norm(x);
    if (std::abs(asum - 1.0) > 1e-9) fail("NotNormalized", "sum |a_mn|^2 must be 1");
    if (std::abs(norm2(psi) - 1.0) > 1e-9) fail("NotNormalized", "psi must be a unit vector");
    GaloisHW hw(std::make_shared<GfSpec>(f));

    // |Psi_{1-3}> = sum_{m,n} a_{m,n} (V_m^n x 1 x V_m^n^dag) |psi, B^{(23)}_{0,0}>
    size_t dim = static_cast<size_t>(N) * N * N;
    StateVec base(dim, cdouble(0, 0));
    double s = 1.0 / std::sqrt(static_cast<double>(N));
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k)
            base[static_cast<size_t>(j) + static_cast<size_t>(N) * k +
                 static_cast<size_t>(N) * N * k] = psi[j] * s;
    StateVec state(dim, cdouble(0, 0));
    for (GfEl m = 0; m < N; ++m)
        for (GfEl n = 0; n < N; ++n) {
            cdouble amn = a[static_cast<size_t>(m)][static_cast<size_t>(n)];
            if (amn == cdouble(0, 0)) continue;
            CMatrix v = hw.V(m, n).to_float();
            StateVec t = apply_local(v, base, 0, 3, N);
            t = apply_local(v.dagger(), t, 2, 3, N);
            for (size_t i = 0; i < dim; ++i) state[i] += amn * t[i];
        }

    CloneResult res;
    res.rho1 = partial_trace(state, 3, N, {0});
    res.rho2 = partial_trace(state, 3, N, {1});
    res.rho3 = partial_trace(state, 3, N, {2});

    // b = double Galois-Fourier transform of a
    res.b.assign(static_cast<size_t>(N), std::vector<cdouble>(static_cast<size_t>(N), cdouble(0, 0)));
    for (GfEl m = 0; m < N; ++m)
        for (GfEl n = 0; n < N; ++n) {
            cdouble acc(0, 0);
            for (GfEl mp = 0; mp < N; ++mp)
                for (GfEl np = 0; np < N; ++np) {
                    GfEl e = f.sub(f.mul(n, mp), f.mul(m, np));
                    acc += hw.gamma_pow(e).to_complex() * a[static_cast<size_t>(mp)][static_cast<size_t>(np)];
                }
            res.b[static_cast<size_t>(m)][static_cast<size_t>(n)] = acc / static_cast<double>(N);
        }

    // closed forms: rho1 = sum |a|^2 V psi psi^dag V^dag, rho3 likewise with |b|^2
    CMatrix proj = CMatrix::zeros(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) proj.fl(i, j) = psi[i] * std::conj(psi[j]);
    CMatrix cf1 = CMatrix::zeros(N, N), cf3 = CMatrix::zeros(N, N);
    for (GfEl m = 0; m < N; ++m)
        for (GfEl n = 0; n < N; ++n) {
            CMatrix v = hw.V(m, n).to_float();
            CMatrix term = v * proj * v.dagger();
            cf1 = cf1 + cdouble(std::norm(a[static_cast<size_t>(m)][static_cast<size_t>(n)]), 0) * term;
            cf3 = cf3 + cdouble(std::norm(res.b[static_cast<size_t>(m)][static_cast<size_t>(n)]), 0) * term;
        }
    res.closed_form_residual1 = res.rho1.max_abs_diff(cf1);
    res.closed_form_residual3 = res.rho3.max_abs_diff(cf3);
    return res;
}

std::vector<SwapBranch> swap_sim(const GfSpec& f, GfEl m, GfEl n) {
    int N = static_cast<int>(f.N());
    GaloisHW hw(std::make_shared<GfSpec>(f));
    StateVec b01 = bell_state(f, m, n);
    StateVec b23 = bell_state(f, f.neg(m), f.neg(n));
    size_t dim = static_cast<size_t>(N) * N * N * N;
    StateVec state(dim, cdouble(0, 0));
    for (int q0 = 0; q0 < N; ++q0)
        for (int q1 = 0; q1 < N; ++q1) {
            cdouble w01 = b01[static_cast<size_t>(q0) + static_cast<size_t>(N) * q1];
            if (w01 == cdouble(0, 0)) continue;
            for (int q2 = 0; q2 < N; ++q2)
                for (int q3 = 0; q3 < N; ++q3) {
                    cdouble w23 = b23[static_cast<size_t>(q2) + static_cast<size_t>(N) * q3];
                    if (w23 == cdouble(0, 0)) continue;
                    state[static_cast<size_t>(q0) + static_cast<size_t>(N) * q1 +
                          static_cast<size_t>(N) * N * q2 + static_cast<size_t>(N) * N * N * q3] =
                        w01 * w23;
                }
        }
    std::vector<SwapBranch> out;
    for (GfEl mp = 0; mp < N; ++mp)
        for (GfEl np = 0; np < N; ++np) {
            // project pair (12) onto |B^{(21)}_{(-)m',(-)n'}>; first slot is q-nit 2
            StateVec b21 = bell_state(f, f.neg(mp), f.neg(np));
            StateVec v03(static_cast<size_t>(N) * N, cdouble(0, 0));
            for (int q1 = 0; q1 < N; ++q1)
                for (int q2 = 0; q2 < N; ++q2) {
                    cdouble w = std::conj(b21[static_cast<size_t>(q2) + static_cast<size_t>(N) * q1]);
                    if (w == cdouble(0, 0)) continue;
                    for (int q0 = 0; q0 < N; ++q0)
                        for (int q3 = 0; q3 < N; ++q3)
                            v03[static_cast<size_t>(q0) + static_cast<size_t>(N) * q3] +=
                                w * state[static_cast<size_t>(q0) + static_cast<size_t>(N) * q1 +
                                          static_cast<size_t>(N) * N * q2 +
                                          static_cast<size_t>(N) * N * N * q3];
                }
            double p = norm2(v03);
            StateVec target = bell_state(f, mp, np);
            double fid = std::norm(inner(target, v03)) / p;
            out.push_back({mp, np, p, fid});
        }
    return out;
}

} // namespace mubkit
