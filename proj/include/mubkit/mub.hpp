#ifndef MUBKIT_MUB_HPP
#define MUBKIT_MUB_HPP

#include <optional>

#include "mubkit/weylops.hpp"

namespace mubkit {

// Phase factors alpha^i_l entering U^i_l = alpha^i_l V_l^{i (.) l}.
//
// Boundary conditions alpha^i_0 = alpha^0_l = 1 and the group law
// alpha^i_k alpha^i_l = alpha^i_{k (+) l} gamma^{i (.) k (.) l} hold for every
// permissible table. The symmetric table additionally satisfies
// alpha^i_l = alpha^i_{(-)l}; for p = 2 that is automatic, for odd p it is the
// choice gamma^{(-)(i.l.l)(/)2}. A twist vector b (b_0 = 0) multiplies
// alpha^i_l by gamma^{b_i (.) l}, which relabels kets inside each basis.
class AlphaTable {
public:
    AlphaTable(std::shared_ptr<const GfSpec> spec, bool symmetric,
               const std::vector<GfEl>* twist = nullptr);

    const GfSpec& field() const noexcept { return *spec_; }
    std::shared_ptr<const GfSpec> field_ptr() const noexcept { return spec_; }
    bool symmetric() const noexcept { return symmetric_; }

    const Cyclo& at(GfEl i, GfEl l) const; // i, l in 0..N-1

    bool check_boundary() const;
    bool check_group_law() const;
    bool check_symmetry() const;

private:
    std::shared_ptr<const GfSpec> spec_;
    bool symmetric_;
    std::vector<Cyclo> a_; // row-major N x N
};

struct MubSet {
    std::shared_ptr<const GfSpec> spec;
    AlphaTable alpha;
    // bases[i] has |e^i_k> as its k-th column; bases[N] is the computational
    // basis (identity), bases[0] the dual basis. All exact.
    std::vector<CMatrix> bases;

    int N() const { return static_cast<int>(spec->N()); }
};

AlphaTable alpha_table(std::shared_ptr<const GfSpec> spec, bool symmetric = true,
                       const std::vector<GfEl>* twist = nullptr);

// U^i_l for i in 0..N (i = N is the clock subgroup V^l_0), exact
CMatrix build_U(const GaloisHW& hw, const AlphaTable& alpha, GfEl i, GfEl l);

MubSet build_mub(std::shared_ptr<const GfSpec> spec, const AlphaTable& alpha);
MubSet build_mub(std::shared_ptr<const GfSpec> spec, bool symmetric = true);

// exact verification that all (N+1)N/2 pairs have |overlap|^2 = 1/N and that
// each basis is orthonormal; returns false with a witness string otherwise
bool mub_verify_exact(const MubSet& mub, std::string* witness = nullptr);

// period-N observable Z_i = sum_k |e^i_k> gamma_N^k <e^i_k|, exact
CMatrix complementary_observable(const MubSet& mub, int i);

// Clifford operator mapping the computational basis onto basis i (C_N = 1)
CMatrix clifford(const MubSet& mub, int i);

// Solves U g U^dag = g' for all pairs, as the null space of the stacked
// linear constraints U g - g' U = 0. The result is normalized to Frobenius
// norm sqrt(N) with its largest entry rotated to the positive real axis.
CMatrix solve_intertwiner(int N, const std::vector<std::pair<CMatrix, CMatrix>>& generator_images,
                          double tol = 1e-9);

} // namespace mubkit

#endif
