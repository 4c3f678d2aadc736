#ifndef MUBKIT_SEARCH_HPP
#define MUBKIT_SEARCH_HPP

#include <cstdint>

#include "mubkit/hadamard.hpp"
#include "mubkit/linalg.hpp"

namespace mubkit {

// squared chordal Grassmannian distance between the (N-1)-planes of two
// orthonormal bases (columns): sum |<e_a|f_b>|^2 (1 - |<e_a|f_b>|^2)
double grassmann_d2(const CMatrix& b1, const CMatrix& b2);

struct UnbiasedCatalog {
    HMat anchor;
    // unit vectors unbiased to both the computational basis and the anchor's
    // columns, phase-fixed so the first component is real positive
    std::vector<std::vector<cdouble>> vectors;
    std::vector<std::vector<int>> bases; // orthogonality cliques of size N
    int Nv = 0, Nt = 0;
    bool saturated = false;   // the no-new-vector stop rule fired
    long long restarts_used = 0;
    double worst_residual = 0; // max | |overlap|^2 - 1/N | over the catalog
};

// Multistart descent on f(phi) = sum_j (|<h_j|z>|^2 - 1/N)^2 over the phase
// torus (first phase fixed). Deterministic for a fixed seed. Stops after
// `saturation_window` consecutive restarts without a new vector, or at
// max_restarts.
UnbiasedCatalog unbiased_vector_search(const HMat& anchor, long long max_restarts = 200000,
                                       double accept_tol = 1e-12, double dedup_tol = 1e-6,
                                       std::uint64_t seed = 7, int saturation_window = 500);

struct ConstellationResult {
    std::vector<int> shape;
    double best_penalty = 0;
    bool success = false; // best_penalty < 1e-12
    long long restarts_used = 0;
    std::vector<std::vector<std::vector<cdouble>>> witness; // sets of vectors
};

// MU-constellation probe: minimizes norm + intra-set orthogonality +
// cross-set unbiasedness penalties over freely parameterized vectors
ConstellationResult constellation_search(const std::vector<int>& shape, int N, int restarts,
                                         std::uint64_t seed = 7, int max_iters = 400);

// penalty of explicitly given candidate sets (the same objective the search uses)
double constellation_penalty(const std::vector<std::vector<std::vector<cdouble>>>& sets, int N);

struct ExtendabilityReport {
    double max_d2_raw = 0;        // max pairwise D_c^2 among catalog bases
    double max_d2_normalized = 0; // divided by N-1
    int pairs = 0;
};
ExtendabilityReport extendability_probe(const UnbiasedCatalog& catalog);

} // namespace mubkit

#endif
