#ifndef MUBKIT_BELLPROTO_HPP
#define MUBKIT_BELLPROTO_HPP

#include "mubkit/mub.hpp"

namespace mubkit {

// Multi-q-nit state vectors use the first-particle-fast index convention:
// |q0, q1, ..> sits at q0 + N*(q1 + N*(q2 + ..)). The conjugation map is
// complex conjugation in the computational basis, so |k*> = |k>.
using StateVec = std::vector<cdouble>;

double norm2(const StateVec& v);
cdouble inner(const StateVec& a, const StateVec& b);

// |B_{m,n}> = N^{-1/2} sum_k |k, k (+) m> gamma^{(k (+) m) (.) n}
StateVec bell_state(const GfSpec& f, GfEl m, GfEl n);

// applies a one-q-nit operator to particle `which` of a w-particle state
StateVec apply_local(const CMatrix& op, const StateVec& psi, int which, int nparticles, int N);

struct DenseCodingResult {
    GfEl m, n;        // decoded message
    double probability; // of the decoded outcome
};
DenseCodingResult dense_coding_sim(const GfSpec& f, GfEl m, GfEl n);

struct TeleportBranch {
    GfEl m, n;
    double probability;
    double fidelity; // after the V_m^n correction on q-nit 3
};
std::vector<TeleportBranch> teleport_sim(const GfSpec& f, const StateVec& psi);

struct CloneResult {
    CMatrix rho1, rho2, rho3;            // clone, anticlone, second clone
    std::vector<std::vector<cdouble>> b; // double Galois-Fourier transform of a
    double closed_form_residual1;        // |rho1 - sum |a|^2 V psi psi^dag V^dag|
    double closed_form_residual3;
};
CloneResult cerf_clone(const GfSpec& f, const std::vector<std::vector<cdouble>>& a,
                       const StateVec& psi);

struct SwapBranch {
    GfEl m, n;          // Bell outcome (m', n') on pair (12)
    double probability;
    double fidelity;    // of pair (03) with |B^{(03)}_{m',n'}>
};
std::vector<SwapBranch> swap_sim(const GfSpec& f, GfEl m, GfEl n);

} // namespace mubkit

#endif
