#ifndef MUBKIT_LINALG_HPP
#define MUBKIT_LINALG_HPP

#include <random>
#include <vector>

#include "mubkit/cmatrix.hpp"

namespace mubkit {

using Cpx = std::vector<std::vector<cdouble>>;

// null space basis of a complex matrix via full-pivot elimination;
// tol is relative to the largest pivot
std::vector<std::vector<cdouble>> complex_kernel(Cpx a, double tol);

// rank of a real matrix by row reduction; pivot threshold relative to the
// largest absolute entry of the initial matrix
int real_rank(std::vector<std::vector<double>> a, double rel_tol);

// true iff m + shift*1 admits a Cholesky factorization (positivity witness)
bool psd_within(const CMatrix& m, double shift);

// Haar-random unitary: complex Ginibre matrix -> QR -> phase-fixed Q
CMatrix haar_unitary(int n, std::mt19937_64& rng);

} // namespace mubkit

#endif
