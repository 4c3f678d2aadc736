#include "mubkit/mub.hpp"

#include <cmath>

#include "mubkit/linalg.hpp"

namespace mubkit {

AlphaTable::AlphaTable(std::shared_ptr<const GfSpec> spec, bool symmetric,
                       const std::vector<GfEl>* twist)
    : spec_(std::move(spec)), symmetric_(symmetric) {
    const GfSpec& f = *spec_;
    long long N = f.N();
    if (twist) {
        if (static_cast<long long>(twist->size()) != N || (*twist)[0] != 0)
            fail("BadParameter", "twist must have N entries with b_0 = 0");
        if (symmetric_) fail("BadParameter", "twisted tables are not the symmetric convention");
    }
    a_.assign(static_cast<size_t>(N) * N, Cyclo(Rational(1)));
    for (GfEl i = 0; i < N; ++i)
        for (GfEl l = 0; l < N; ++l) {
            Cyclo v;
            if (f.p() == 2) {
                // product over digit pairs of i^{i (.) (l_m 2^m) (.) (l_n 2^n)}, mod 4;
                // for a single q-bit the other square root (-i)^{i.l.l} is the
                // convention that reproduces the standard q-bit Wigner signs
                std::vector<int> dl = f.digits(l);
                long long e = 0;
                for (int m = 0; m < f.m(); ++m) {
                    if (dl[m] == 0) continue;
                    GfEl lm = 1;
                    for (int t = 0; t < m; ++t) lm *= 2;
                    for (int n = 0; n < f.m(); ++n) {
                        if (dl[n] == 0) continue;
                        GfEl ln = 1;
                        for (int t = 0; t < n; ++t) ln *= 2;
                        e += f.mul(i, f.mul(lm, ln));
                    }
                }
                if (f.m() == 1) e = (4 - e % 4) % 4;
                v = Cyclo::root_of_unity(4, e % 4);
            } else {
                // gamma^{(-)(i (.) l (.) l) (/) 2}
                GfEl e = f.divide(f.neg(f.mul(i, f.mul(l, l))), 2);
                v = Cyclo::root_of_unity(f.p(), f.char_exp(e));
            }
            if (twist) {
                GfEl b = (*twist)[static_cast<size_t>(i)];
                int e0 = f.char_exp(f.mul(b, l));
                v *= (f.p() == 2) ? Cyclo::root_of_unity(4, 2 * e0)
                                  : Cyclo::root_of_unity(f.p(), e0);
            }
            a_[static_cast<size_t>(i) * N + l] = v;
        }
}

const Cyclo& AlphaTable::at(GfEl i, GfEl l) const {
    return a_[static_cast<size_t>(i) * spec_->N() + l];
}

bool AlphaTable::check_boundary() const {
    Cyclo one(Rational(1));
    for (GfEl i = 0; i < spec_->N(); ++i)
        if (at(i, 0) != one) return false;
    for (GfEl l = 0; l < spec_->N(); ++l)
        if (at(0, l) != one) return false;
    return true;
}

bool AlphaTable::check_group_law() const {
    const GfSpec& f = *spec_;
    GaloisHW hw(spec_);
    for (GfEl i = 0; i < f.N(); ++i)
        for (GfEl k = 0; k < f.N(); ++k)
            for (GfEl l = 0; l < f.N(); ++l) {
                Cyclo lhs = at(i, k) * at(i, l);
                Cyclo rhs = at(i, f.add(k, l)) * hw.gamma_pow(f.mul(i, f.mul(k, l)));
                if (lhs != rhs) return false;
            }
    return true;
}

bool AlphaTable::check_symmetry() const {
    const GfSpec& f = *spec_;
    for (GfEl i = 0; i < f.N(); ++i)
        for (GfEl l = 0; l < f.N(); ++l)
            if (at(i, l) != at(i, f.neg(l))) return false;
    return true;
}

AlphaTable alpha_table(std::shared_ptr<const GfSpec> spec, bool symmetric,
                       const std::vector<GfEl>* twist) {
    return AlphaTable(std::move(spec), symmetric, twist);
}

CMatrix build_U(const GaloisHW& hw, const AlphaTable& alpha, GfEl i, GfEl l) {
    const GfSpec& f = hw.field();
    if (i == f.N()) return hw.V(0, l);
    return alpha.at(i, l) * hw.V(l, f.mul(i, l));
}

MubSet build_mub(std::shared_ptr<const GfSpec> spec, const AlphaTable& alpha) {
    const GfSpec& f = *spec;
    int N = static_cast<int>(f.N());
    GaloisHW hw(spec);
    Cyclo norm = Cyclo::inv_sqrt(N);
    std::vector<CMatrix> bases;
    bases.reserve(N + 1);
    for (GfEl i = 0; i < N; ++i) {
        // |e^i_k> = N^{-1/2} sum_l |e^N_l> gamma^{(-)k (.) l} conj(alpha^i_{(-)l})
        CMatrix b = CMatrix::zeros_exact(N, N);
        for (GfEl l = 0; l < N; ++l) {
            Cyclo aconj = alpha.at(i, f.neg(l)).conj();
            for (GfEl k = 0; k < N; ++k) {
                Cyclo ph = hw.gamma_pow(f.neg(f.mul(k, l)));
                b.ex(static_cast<int>(l), static_cast<int>(k)) = norm * ph * aconj;
            }
        }
        bases.push_back(std::move(b));
    }
    bases.push_back(CMatrix::identity_exact(N));
    return MubSet{spec, alpha, std::move(bases)};
}

MubSet build_mub(std::shared_ptr<const GfSpec> spec, bool symmetric) {
    AlphaTable a(spec, symmetric);
    return build_mub(spec, a);
}

bool mub_verify_exact(const MubSet& mub, std::string* witness) {
    int N = mub.N();
    Rational invN(1, N);
    for (int i = 0; i <= N; ++i)
        for (int j = i; j <= N; ++j) {
            CMatrix g = mub.bases[i].dagger() * mub.bases[j];
            for (int k = 0; k < N; ++k)
                for (int l = 0; l < N; ++l) {
                    Cyclo a2 = g.ex(k, l).abs2();
                    bool ok;
                    if (i == j)
                        ok = a2.is_rational() && a2.rational_value() == Rational(k == l ? 1 : 0);
                    else
                        ok = a2.is_rational() && a2.rational_value() == invN;
                    if (!ok) {
                        if (witness)
                            *witness = "pair (" + std::to_string(i) + "," + std::to_string(j) +
                                       ") entry (" + std::to_string(k) + "," + std::to_string(l) + ")";
                        return false;
                    }
                }
        }
    return true;
}

CMatrix complementary_observable(const MubSet& mub, int i) {
    int N = mub.N();
    if (i < 0 || i > N) fail("BadParameter", "basis index out of range");
    CMatrix d = CMatrix::zeros_exact(N, N);
    for (int k = 0; k < N; ++k) d.ex(k, k) = Cyclo::root_of_unity(N, k);
    return mub.bases[i] * d * mub.bases[i].dagger();
}

CMatrix clifford(const MubSet& mub, int i) {
    if (i < 0 || i > mub.N()) fail("BadParameter", "basis index out of range");
    return mub.bases[i]; // C_i = sum_k |e^i_k><e^N_k| is the basis matrix itself
}

CMatrix solve_intertwiner(int N, const std::vector<std::pair<CMatrix, CMatrix>>& generator_images,
                          double tol) {
    if (generator_images.empty()) fail("BadParameter", "need at least one generator image");
    size_t rows = generator_images.size() * static_cast<size_t>(N) * N;
    Cpx A(rows, std::vector<cdouble>(static_cast<size_t>(N) * N, cdouble(0, 0)));
    size_t r = 0;
    for (const auto& [g0, h0] : generator_images) {
        CMatrix g = g0.to_float(), h = h0.to_float();
        if (g.rows() != N || g.cols() != N || h.rows() != N || h.cols() != N)
            fail("DimensionMismatch", "generator images must be N x N");
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                // (U g - h U)_{ij} = sum_{ab} (delta_{ia} g_{bj} - h_{ia} delta_{jb}) U_{ab}
                for (int b = 0; b < N; ++b) A[r][static_cast<size_t>(i) * N + b] += g.fl(b, j);
                for (int a = 0; a < N; ++a) A[r][static_cast<size_t>(a) * N + j] -= h.fl(i, a);
                ++r;
            }
    }
    std::vector<std::vector<cdouble>> kernel = complex_kernel(A, tol);
    if (kernel.empty()) fail("NoSolution", "no intertwiner for the given generator images");
    if (kernel.size() > 1)
        fail("NonUniqueSolution", "intertwiner space has dimension " + std::to_string(kernel.size()));
    CMatrix U = CMatrix::zeros(N, N);
    double fro = 0;
    for (const auto& x : kernel[0]) fro += std::norm(x);
    double scale = std::sqrt(static_cast<double>(N) / fro);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) U.fl(i, j) = kernel[0][static_cast<size_t>(i) * N + j] * scale;
    // det-phase fix: rotate the largest entry onto the positive real axis
    int bi = 0, bj = 0;
    double bm = -1;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (std::abs(U.fl(i, j)) > bm) {
                bm = std::abs(U.fl(i, j));
                bi = i;
                bj = j;
            }
    cdouble ph = U.fl(bi, bj) / bm;
    U = (1.0 / ph) * U;
    if (U.check_unitary() > 1e-7)
        fail("NoSolution", "intertwiner exists only as a non-unitary solution");
    for (const auto& [g0, h0] : generator_images) {
        CMatrix lhs = U * g0.to_float();
        CMatrix rhs = h0.to_float() * U;
        if (lhs.max_abs_diff(rhs) > 1e-7) fail("NoSolution", "inconsistent generator images");
    }
    return U;
}

} // namespace mubkit
