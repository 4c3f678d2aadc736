#ifndef MUBKIT_WEYLOPS_HPP
#define MUBKIT_WEYLOPS_HPP

#include <map>
#include <memory>
#include <mutex>

#include "mubkit/cmatrix.hpp"
#include "mubkit/gf.hpp"

namespace mubkit {

// Galois-shift Heisenberg-Weyl operators V^j_i, exact matrices with entries
// gamma^{(k (+) i) (.) j} placed at row k (+) i, column k. Matrices are built
// lazily and cached; the cache is mutex-guarded, returned copies are values.
class GaloisHW {
public:
    explicit GaloisHW(std::shared_ptr<const GfSpec> spec) : spec_(std::move(spec)) {}

    const GfSpec& field() const noexcept { return *spec_; }
    std::shared_ptr<const GfSpec> field_ptr() const noexcept { return spec_; }

    // V^j_i (subscript i: computational shift, superscript j: dual shift)
    CMatrix V(GfEl i, GfEl j) const;

    long long gamma_order() const noexcept { return spec_->p() == 2 ? 4 : spec_->p(); }
    // gamma^e as an exact scalar (e a field element used as an integer)
    Cyclo gamma_pow(GfEl e) const;

private:
    std::shared_ptr<const GfSpec> spec_;
    mutable std::mutex mx_;
    mutable std::map<std::pair<GfEl, GfEl>, CMatrix> cache_;
};

// Mod-N clock-and-shift pair X, Z with the beta phase convention that
// make every X Z^n strictly period N.
class RingHW {
public:
    explicit RingHW(int N);

    int N() const noexcept { return N_; }
    const CMatrix& X() const noexcept { return X_; }
    const CMatrix& Z() const noexcept { return Z_; }

    CMatrix x_pow(int k) const;
    CMatrix z_pow(int k) const;
    CMatrix xzn_pow(int n, int k) const; // (X Z^n)^k, no extra phase
    cdouble beta(int n) const;           // beta_N(n); beta_N(0) = 1

    // unitary whose k-th column is |n,k>, the k-th eigenket of X Z^n
    CMatrix eigenbasis(int n) const;

    // grid f_{j,k} = <j^|F|k> / <j^|k> of the XZ-ordered expansion of F
    CMatrix xz_expand(const CMatrix& F) const;
    CMatrix xz_synthesize(const CMatrix& grid) const;

    struct Factors {
        CMatrix X1, X2, Z1, Z2;
    };
    // splits the degree of freedom into an N1- and an N2-dimensional factor
    Factors composite_factor(int N1, int N2) const;

private:
    int N_;
    CMatrix X_, Z_;
};

CMatrix ring_ops(const RingHW& hw, const std::string& what, int n, int k);

struct SubgroupReport {
    int N = 0;
    // canonical generator (m, n) of each order-N cyclic subgroup of Z_N x Z_N
    std::vector<std::pair<int, int>> generators;
    std::vector<std::vector<int>> elements;  // (m,n) pairs flattened m*N+n, sorted
    std::vector<std::vector<bool>> adjacency; // eigenbases mutually unbiased
    std::vector<std::vector<int>> partners;   // adjacency as index lists
    int clique_number = 0;
};

// exhaustive enumeration for N <= 12 plus the complementarity graph
SubgroupReport ring_subgroups(int N, double tol = 1e-9);

// maximum clique size of a small undirected graph
int max_clique(const std::vector<std::vector<bool>>& adj);
// all cliques of exactly the given size (used for basis clustering)
std::vector<std::vector<int>> cliques_of_size(const std::vector<std::vector<bool>>& adj, int size);

} // namespace mubkit

#endif
