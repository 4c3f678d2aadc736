#ifndef MUBKIT_PHASESPACE_HPP
#define MUBKIT_PHASESPACE_HPP

#include <optional>

#include "mubkit/mub.hpp"

namespace mubkit {

// N x N table of phase-space coefficients (Weyl x_m^n or Wigner r_{m,n});
// the ubar relabeling is (N+1) x N with rows indexed by the basis label.
struct CoeffGrid {
    std::string kind; // "weyl" | "wigner" | "ubar"
    int rows = 0, cols = 0;
    std::vector<cdouble> v;
    cdouble& at(int i, int j) { return v[static_cast<size_t>(i) * cols + j]; }
    const cdouble& at(int i, int j) const { return v[static_cast<size_t>(i) * cols + j]; }
};

CoeffGrid weyl_analyze(const GaloisHW& hw, const CMatrix& X);
CMatrix weyl_synthesize(const GaloisHW& hw, const CoeffGrid& grid);
// x-bar^i_l = conj(alpha^i_l) x_l^{i (.) l} (i < N), x-bar^N_l = x_0^l
CoeffGrid weyl_to_ubar(const MubSet& mub, const CoeffGrid& weyl);

struct WignerBasis {
    std::shared_ptr<const GfSpec> spec;
    bool symmetric_phases = false;
    std::vector<CMatrix> W; // row-major (m,n), float
    const CMatrix& at(GfEl m, GfEl n) const { return W[static_cast<size_t>(m) * spec->N() + n]; }
};

// W_{m,n} = |e^N_m><e^N_m| + sum_{i<N} |e^i_{i.m(-)n}><e^i_{i.m(-)n}| - 1
WignerBasis wigner_basis(const MubSet& mub);

CoeffGrid wigner_analyze(const WignerBasis& wb, const CMatrix& rho);
CMatrix wigner_synthesize(const WignerBasis& wb, const CoeffGrid& grid);

// equal-weight average of W_{m,n} over the line a (.) m = b (.) n (+) c;
// equals a rank-1 MUB projector (DegenerateLine when a = b = 0)
CMatrix marginal(const WignerBasis& wb, GfEl a, GfEl b, GfEl c);

struct WignerCriteria {
    double w1_hermitian_dev = 0;
    double w2_trace_dev = 0;
    double w3_ortho_dev = 0;
    double w4_covariance_dev = 0;
    double w5_marginal_dev = 0;
    bool w6_applicable = false; // odd p with symmetric phases
    double w6_parity_dev = 0;   // seed vs the field parity permutation
    double w6_factor_dev = 0;   // seed vs tensor power of the p-dim parity
    bool pass(double tol) const {
        bool base = w1_hermitian_dev < tol && w2_trace_dev < tol && w3_ortho_dev < tol &&
                    w4_covariance_dev < tol && w5_marginal_dev < tol;
        return w6_applicable ? (base && w6_parity_dev < tol && w6_factor_dev < tol) : base;
    }
};

WignerCriteria wigner_criteria(const MubSet& mub, const WignerBasis& wb);

// grid of <e^i_k| W_{m,n} |e^i_k>, 1 on the line k (+) n = i (.) m (or k = m
// for i = N) and 0 elsewhere
CoeffGrid mub_expectations(const MubSet& mub, const WignerBasis& wb, int i, GfEl k);

std::vector<std::vector<double>> tomography_probs(const MubSet& mub, const CMatrix& rho);
CMatrix tomography_reconstruct(const MubSet& mub, const std::vector<std::vector<double>>& probs);

} // namespace mubkit

#endif
