#ifndef MUBKIT_MEANKING_HPP
#define MUBKIT_MEANKING_HPP

#include <cstdint>

#include "mubkit/bellproto.hpp"

namespace mubkit {

// Alice's entangled measurement basis: N^2 orthonormal two-q-nit vectors
// |(m,n)> = (V_m^{n*} x V_m^n) |(0,0)> with the seed
// |(0,0)> = N^{-1/2} sum_{i=0..N} |e_0^{i*}, e_0^i> - |B_{0,0}>.
struct MkBasis {
    int N = 0;
    std::vector<StateVec> vectors; // indexed m*N + n
    const StateVec& at(GfEl m, GfEl n) const { return vectors[static_cast<size_t>(m) * N + n]; }
};

MkBasis mk_basis(const MubSet& mub);

// k = i (.) m (-) n for i < N, k = m for the computational basis i = N
GfEl mk_infer(const GfSpec& f, int i, GfEl m, GfEl n);

struct MkStats {
    int cases = 0;              // (i,k) preparations checked
    double success_rate = 0;    // exact-amplitude inference success
    double max_prob_dev = 0;    // max | p_detector - 1/N | over firing detectors
    long long mc_trials = 0;    // Monte Carlo trials actually drawn
    double mc_worst_sigma = 0;  // worst |observed - expected| in MC std errors
};

// exact amplitude evaluation over every (i,k); optional seeded Monte Carlo
MkStats mk_protocol_sim(const MubSet& mub, long long trials = 0, std::uint64_t seed = 1);

struct AffineLine {
    GfEl a, b, c; // incidence a (.) m = b (.) n (+) c, canonical leading 1
    std::vector<int> points; // m*N + n
};

struct AffinePlane {
    int N = 0;
    std::vector<AffineLine> lines;
    bool axioms_ok = false;
    std::string violation;
};

AffinePlane affine_plane(const GfSpec& f);

// N-1 mutually orthogonal Latin squares L_i[m][n] = i (.) m (-) n, i = 1..N-1
std::vector<std::vector<std::vector<GfEl>>> affine_mols(const GfSpec& f);

// inference tables grid[i][m][n] = k for i = 0..N
std::vector<std::vector<std::vector<GfEl>>> mk_grids(const GfSpec& f);

} // namespace mubkit

#endif
