#ifndef MUBKIT_HADAMARD_HPP
#define MUBKIT_HADAMARD_HPP

#include <map>
#include <optional>
#include <string>

#include "mubkit/gf.hpp"
#include "mubkit/cmatrix.hpp"

namespace mubkit {

// Complex Hadamard matrix with provenance. Entries are unimodular and
// H H^dag = N * 1 (no 1/sqrt(N) factor).
struct HMat {
    std::string family;
    std::map<std::string, double> params;
    CMatrix m;

    int N() const { return m.rows(); }
    double hadamard_dev() const; // max of the unitarity (at scale N) and unimodularity deviations
    bool is_hadamard(double tol = 1e-10) const { return hadamard_dev() < tol; }
};

// family constructors
HMat fourier(int N);
HMat galois_fourier(const GfSpec& f);
HMat f4_family(double a);                    // one-parameter N=4 family, a in [0, pi)
HMat f6_family(double a, double b);          // affine Fourier family F(a,b)
HMat f6_transposed(double a, double b);      // F^T(a,b)
HMat dita_family(double a);                  // D(a); inequivalent range |a| <= 1/8
HMat bjorck_c6();                            // circulant C6
HMat tao_s6();                               // isolated Butson(3,6) matrix
HMat standard_prime_h(int p, int r);         // E_p^r F_p
// Karlsson's H2-reducible three-parameter family; signs flips (z2,z3,z4) bits 0..2
HMat karlsson(double x1, double x2, double x3, cdouble z1, int signs = 0);

HMat dephase(const HMat& h);

struct EquivCertificate {
    std::string verdict; // "equivalent" | "inequivalent" | "unknown"
    // witness H2 = E2 P2 H1 P1 E1 (row/col permutations + phase vectors)
    std::vector<int> row_perm, col_perm;
    std::vector<cdouble> row_phase, col_phase;
    std::string invariant_note; // distinguishing invariant when inequivalent
};

// Haagerup invariant multiset comparison, then a budgeted permutation search
EquivCertificate equivalent(const HMat& h1, const HMat& h2, long long budget = 2'000'000);

bool mu_pair(const HMat& h1, const HMat& h2, double tol = 1e-10);

// defect = (N-1)^2 - rank of the linearized unitarity system at H;
// IllConditioned if the two pivot thresholds disagree on the rank
int defect(const HMat& h);

// biunimodular machinery
std::vector<cdouble> gauss_sequence(int N, int m, int n); // exp(2 pi i (m j^2 + n j)/N), N odd, gcd(m,N)=1
bool biunimodular_check(const std::vector<cdouble>& z, double tol = 1e-10);
HMat circulant(const std::vector<cdouble>& z); // C_{ij} = zhat_{i-j mod N}
std::vector<cdouble> autocorrelation(const std::vector<cdouble>& z);

struct MuhmReport {
    std::vector<HMat> set;       // the N matrices E^r F
    bool maximal = false;        // every product X_{r-s} Hadamard
    std::vector<int> failing_rs; // r-s differences whose X is not Hadamard
};
MuhmReport standard_muhm(int N, double tol = 1e-10);

struct BicirculantReport {
    HMat h;
    bool hadamard = false;
    double violation = 0;
};
// assembles [[A, B], [B^dag, -A^dag]] from two circulant 3x3 blocks
BicirculantReport bicirculant_validate(const std::vector<cdouble>& a_row,
                                       const std::vector<cdouble>& b_row, double tol = 1e-10);

} // namespace mubkit

#endif
