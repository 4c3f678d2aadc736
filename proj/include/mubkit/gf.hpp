#ifndef MUBKIT_GF_HPP
#define MUBKIT_GF_HPP

#include <memory>
#include <string>
#include <vector>

#include "mubkit/common.hpp"

namespace mubkit {

using GfEl = long long; // field element doubling as ordinary integer, 0..N-1

// GF(p^m) with the integer labeling where field addition is digit-wise
// addition mod p of the p-ary expansions. The multiplication is specified by
// the products p^j (.) p^k, built from the defining coefficients mu via the
// standard recurrence, and evaluated for arbitrary elements through the
// symmetric bilinear-form matrices M_0..M_{m-1}.
class GfSpec {
public:
    // mu_override, when given, must make x^m - sum mu_l x^l irreducible over GF(p).
    GfSpec(int p, int m, const std::vector<int>* mu_override = nullptr);

    int p() const noexcept { return p_; }
    int m() const noexcept { return m_; }
    GfEl N() const noexcept { return N_; }
    const std::vector<int>& mu() const noexcept { return mu_; }
    const std::vector<std::vector<int>>& mult_matrices() const noexcept { return M_; }
    const std::vector<std::vector<int>>& mult_matrix_inverses() const noexcept { return Minv_; }
    const std::vector<GfEl>& dual_gens() const noexcept { return dualGens_; }

    std::vector<int> digits(GfEl x) const;
    GfEl from_digits(const std::vector<int>& d) const;

    GfEl add(GfEl a, GfEl b) const;
    GfEl neg(GfEl a) const;
    GfEl sub(GfEl a, GfEl b) const { return add(a, neg(b)); }
    GfEl mul(GfEl a, GfEl b) const;
    GfEl inv(GfEl a) const; // DivisionByZero for a == 0
    GfEl divide(GfEl a, GfEl b) const { return mul(a, inv(b)); }
    GfEl pw(GfEl a, long long e) const; // a^e in the field, a^0 = 1

    // exponent of gamma = exp(2 pi i / p) that gamma^g reduces to, i.e. g mod p
    int char_exp(GfEl g) const { return static_cast<int>(g % p_); }

    // conjugate coefficients: k = sum_n uk_n g_n with uk = digits(k) * M0
    std::vector<int> conj_coeffs(GfEl k) const;

    struct AxiomReport {
        bool ok = true;
        std::string detail; // first failing witness when !ok
    };
    // exhaustive check of the field axioms and the character identity
    AxiomReport verify_axioms() const;

private:
    int p_, m_;
    GfEl N_;
    std::vector<int> mu_;
    std::vector<std::vector<int>> M_;    // M_[k] is the m*m matrix, row-major
    std::vector<std::vector<int>> Minv_;
    std::vector<GfEl> dualGens_;
    std::vector<GfEl> invTable_; // filled when N <= 2^16

    void build_matrices();
    void build_dual_gens();
};

// named arithmetic dispatch
GfEl gf_arith(const GfSpec& f, const std::string& op, GfEl a, GfEl b = 0);

// polynomial irreducibility over GF(p): poly holds c_0..c_deg, monic required
bool gf_poly_irreducible(int p, const std::vector<int>& poly);
// lexicographically smallest (mu_0..mu_{m-1}) making x^m - sum mu_l x^l irreducible
std::vector<int> gf_default_mu(int p, int m);

} // namespace mubkit

#endif
