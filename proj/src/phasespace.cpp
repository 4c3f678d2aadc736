#include "mubkit/phasespace.hpp"

#include <cmath>

#include "mubkit/linalg.hpp"

namespace mubkit {

CoeffGrid weyl_analyze(const GaloisHW& hw, const CMatrix& X) {
    int N = static_cast<int>(hw.field().N());
    if (X.rows() != N || X.cols() != N) fail("DimensionMismatch", "weyl_analyze needs N x N");
    CoeffGrid g{"weyl", N, N, {}};
    g.v.assign(static_cast<size_t>(N) * N, cdouble(0, 0));
    CMatrix Xf = X.to_float();
    for (GfEl m = 0; m < N; ++m)
        for (GfEl n = 0; n < N; ++n)
            g.at(static_cast<int>(m), static_cast<int>(n)) = (hw.V(m, n).dagger().to_float() * Xf).trace();
    return g;
}

CMatrix weyl_synthesize(const GaloisHW& hw, const CoeffGrid& grid) {
    int N = static_cast<int>(hw.field().N());
    CMatrix X = CMatrix::zeros(N, N);
    for (GfEl m = 0; m < N; ++m)
        for (GfEl n = 0; n < N; ++n)
            X = X + (grid.at(static_cast<int>(m), static_cast<int>(n)) / static_cast<double>(N)) *
                        hw.V(m, n).to_float();
    return X;
}

CoeffGrid weyl_to_ubar(const MubSet& mub, const CoeffGrid& weyl) {
    const GfSpec& f = *mub.spec;
    int N = mub.N();
    CoeffGrid g{"ubar", N + 1, N, {}};
    g.v.assign(static_cast<size_t>(N + 1) * N, cdouble(0, 0));
    for (int i = 0; i < N; ++i)
        for (GfEl l = 0; l < N; ++l)
            g.at(i, static_cast<int>(l)) = mub.alpha.at(i, l).conj().to_complex() *
                                           weyl.at(static_cast<int>(l), static_cast<int>(f.mul(i, l)));
    for (GfEl l = 0; l < N; ++l) g.at(N, static_cast<int>(l)) = weyl.at(0, static_cast<int>(l));
    return g;
}

WignerBasis wigner_basis(const MubSet& mub) {
    int N = mub.N();
    const GfSpec& f = *mub.spec;
    WignerBasis wb;
    wb.spec = mub.spec;
    wb.symmetric_phases = mub.alpha.symmetric();
    std::vector<CMatrix> proj; // proj[i*N+k] = |e^i_k><e^i_k|, float
    proj.reserve(static_cast<size_t>(N + 1) * N);
    for (int i = 0; i <= N; ++i) {
        CMatrix b = mub.bases[i].to_float();
        for (int k = 0; k < N; ++k) {
            CMatrix p = CMatrix::zeros(N, N);
            for (int r = 0; r < N; ++r)
                for (int c = 0; c < N; ++c) p.fl(r, c) = b.fl(r, k) * std::conj(b.fl(c, k));
            proj.push_back(std::move(p));
        }
    }
    CMatrix id = CMatrix::identity(N);
    for (GfEl m = 0; m < N; ++m)
        for (GfEl n = 0; n < N; ++n) {
            CMatrix w = proj[static_cast<size_t>(N) * N + m] - id; // computational-basis term
            for (int i = 0; i < N; ++i) {
                GfEl k = f.sub(f.mul(i, m), n);
                w = w + proj[static_cast<size_t>(i) * N + k];
            }
            wb.W.push_back(std::move(w));
        }
    return wb;
}

CoeffGrid wigner_analyze(const WignerBasis& wb, const CMatrix& rho) {
    int N = static_cast<int>(wb.spec->N());
    if (rho.rows() != N || rho.cols() != N) fail("DimensionMismatch", "wigner_analyze needs N x N");
    CoeffGrid g{"wigner", N, N, {}};
    g.v.assign(static_cast<size_t>(N) * N, cdouble(0, 0));
    CMatrix r = rho.to_float();
    for (GfEl m = 0; m < N; ++m)
        for (GfEl n = 0; n < N; ++n)
            g.at(static_cast<int>(m), static_cast<int>(n)) = (r * wb.at(m, n)).trace();
    return g;
}

CMatrix wigner_synthesize(const WignerBasis& wb, const CoeffGrid& grid) {
    int N = static_cast<int>(wb.spec->N());
    CMatrix rho = CMatrix::zeros(N, N);
    for (GfEl m = 0; m < N; ++m)
        for (GfEl n = 0; n < N; ++n)
            rho = rho + (grid.at(static_cast<int>(m), static_cast<int>(n)) / static_cast<double>(N)) *
                            wb.at(m, n);
    return rho;
}

CMatrix marginal(const WignerBasis& wb, GfEl a, GfEl b, GfEl c) {
    const GfSpec& f = *wb.spec;
    int N = static_cast<int>(f.N());
    if (a == 0 && b == 0) fail("DegenerateLine", "marginal needs (a,b) != (0,0)");
    CMatrix acc = CMatrix::zeros(N, N);
    for (GfEl m = 0; m < N; ++m)
        for (GfEl n = 0; n < N; ++n)
            if (f.mul(a, m) == f.add(f.mul(b, n), c)) acc = acc + wb.at(m, n);
    return cdouble(1.0 / N, 0) * acc;
}

WignerCriteria wigner_criteria(const MubSet& mub, const WignerBasis& wb) {
    const GfSpec& f = *mub.spec;
    int N = mub.N();
    GaloisHW hw(mub.spec);
    WignerCriteria cr;
    CMatrix id = CMatrix::identity(N);
    for (GfEl m = 0; m < N; ++m)
        for (GfEl n = 0; n < N; ++n) {
            const CMatrix& w = wb.at(m, n);
            cr.w1_hermitian_dev = std::max(cr.w1_hermitian_dev, w.check_hermitian());
            cr.w2_trace_dev = std::max(cr.w2_trace_dev, std::abs(w.trace() - cdouble(1, 0)));
            CMatrix v = hw.V(m, n).to_float();
            cr.w4_covariance_dev =
                std::max(cr.w4_covariance_dev, (v * wb.at(0, 0) * v.dagger()).max_abs_diff(w));
            for (GfEl mm = 0; mm < N; ++mm)
                for (GfEl nn = 0; nn < N; ++nn) {
                    double expect = (m == mm && n == nn) ? N : 0.0;
                    cr.w3_ortho_dev = std::max(
                        cr.w3_ortho_dev, std::abs((w * wb.at(mm, nn)).trace() - cdouble(expect, 0)));
                }
        }
    // W5: line marginals are the MUB projectors, pencil by pencil
    CMatrix bN = mub.bases[N].to_float();
    for (int i = 0; i <= N; ++i) {
        CMatrix bb = mub.bases[i].to_float();
        for (GfEl k = 0; k < N; ++k) {
            CMatrix p = CMatrix::zeros(N, N);
            for (int r = 0; r < N; ++r)
                for (int c = 0; c < N; ++c)
                    p.fl(r, c) = bb.fl(r, static_cast<int>(k)) * std::conj(bb.fl(c, static_cast<int>(k)));
            CMatrix m = (i == N) ? marginal(wb, 1, 0, k) : marginal(wb, i, 1, k);
            cr.w5_marginal_dev = std::max(cr.w5_marginal_dev, m.max_abs_diff(p));
        }
    }
    // W6 (odd p, symmetric phases): seed equals the field parity sum_k |(-)k><k|
    if (f.p() != 2 && wb.symmetric_phases) {
        cr.w6_applicable = true;
        CMatrix parity = CMatrix::zeros(N, N);
        for (GfEl k = 0; k < N; ++k) parity.fl(static_cast<int>(f.neg(k)), static_cast<int>(k)) = 1.0;
        cr.w6_parity_dev = wb.at(0, 0).max_abs_diff(parity);
        CMatrix pfac = CMatrix::zeros(f.p(), f.p());
        for (int k = 0; k < f.p(); ++k) pfac.fl((f.p() - k) % f.p(), k) = 1.0;
        CMatrix tens = CMatrix::identity(1);
        for (int t = 0; t < f.m(); ++t) tens = tens.tensor(pfac);
        cr.w6_factor_dev = wb.at(0, 0).max_abs_diff(tens);
    }
    return cr;
}

CoeffGrid mub_expectations(const MubSet& mub, const WignerBasis& wb, int i, GfEl k) {
    const GfSpec& f = *wb.spec;
    int N = static_cast<int>(f.N());
    CMatrix b = mub.bases[i].to_float();
    std::vector<cdouble> e(static_cast<size_t>(N));
    for (int r = 0; r < N; ++r) e[static_cast<size_t>(r)] = b.fl(r, static_cast<int>(k));
    CoeffGrid g{"wigner", N, N, {}};
    g.v.assign(static_cast<size_t>(N) * N, cdouble(0, 0));
    for (GfEl m = 0; m < N; ++m)
        for (GfEl n = 0; n < N; ++n) {
            std::vector<cdouble> we = matvec(wb.at(m, n), e);
            cdouble acc(0, 0);
            for (int r = 0; r < N; ++r) acc += std::conj(e[static_cast<size_t>(r)]) * we[static_cast<size_t>(r)];
            g.at(static_cast<int>(m), static_cast<int>(n)) = acc;
        }
    return g;
}

std::vector<std::vector<double>> tomography_probs(const MubSet& mub, const CMatrix& rho) {
    int N = mub.N();
    CMatrix r = rho.to_float();
    if (r.rows() != N || r.cols() != N) fail("DimensionMismatch", "rho must be N x N");
    if (r.check_hermitian() > 1e-9 || std::abs(r.trace() - cdouble(1, 0)) > 1e-9 ||
        !psd_within(r, 1e-9))
        fail("NotDensityMatrix", "rho must be hermitian, unit trace, positive within 1e-9");
    std::vector<std::vector<double>> p(static_cast<size_t>(N) + 1, std::vector<double>(N, 0));
    for (int i = 0; i <= N; ++i) {
        CMatrix b = mub.bases[i].to_float();
        for (int k = 0; k < N; ++k) {
            cdouble acc(0, 0);
            for (int a = 0; a < N; ++a)
                for (int c = 0; c < N; ++c)
                    acc += std::conj(b.fl(a, k)) * r.fl(a, c) * b.fl(c, k);
            p[static_cast<size_t>(i)][static_cast<size_t>(k)] = acc.real();
        }
    }
    return p;
}

CMatrix tomography_reconstruct(const MubSet& mub, const std::vector<std::vector<double>>& probs) {
    const GfSpec& f = *mub.spec;
    int N = mub.N();
    GaloisHW hw(mub.spec);
    constexpr double tau = 6.283185307179586476925286766559;
    CMatrix rho = cdouble(1.0 / N, 0) * CMatrix::identity(N);
    for (int i = 0; i <= N; ++i)
        for (GfEl l = 1; l < N; ++l) {
            cdouble rbar(0, 0);
            for (GfEl k = 0; k < N; ++k) {
                int e0 = f.char_exp(f.neg(f.mul(k, l)));
                rbar += std::polar(1.0, tau * e0 / f.p()) * probs[static_cast<size_t>(i)][static_cast<size_t>(k)];
            }
            CMatrix u = build_U(hw, mub.alpha, i, l).to_float();
            rho = rho + (rbar / static_cast<double>(N)) * u;
        }
    return rho;
}

} // namespace mubkit
