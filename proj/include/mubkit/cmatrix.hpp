#ifndef MUBKIT_CMATRIX_HPP
#define MUBKIT_CMATRIX_HPP

#include <complex>
#include <functional>
#include <vector>

#include "mubkit/cyclo.hpp"

namespace mubkit {

using cdouble = std::complex<double>;

// Dense complex matrix, either exact (Cyclo entries) or float. Mixed-repr
// arithmetic promotes to float, as do exact operands whose cyclotomic orders
// have different prime radicals.
//
// Tensor products use the first-factor-fast index convention: the composite
// row index is r_A + r_B * rows_A, matching the labeling k = k_1 + k_2*N_1
// used for composite degrees of freedom throughout the library.
class CMatrix {
public:
    CMatrix() : rows_(0), cols_(0), exact_(false) {}

    static CMatrix zeros(int rows, int cols);
    static CMatrix zeros_exact(int rows, int cols);
    static CMatrix identity(int n);
    static CMatrix identity_exact(int n);
    static CMatrix from_rows(const std::vector<std::vector<cdouble>>& rows);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool exact() const noexcept { return exact_; }
    bool square() const noexcept { return rows_ == cols_; }

    Cyclo& ex(int i, int j);
    const Cyclo& ex(int i, int j) const;
    cdouble& fl(int i, int j);
    const cdouble& fl(int i, int j) const;
    cdouble value(int i, int j) const; // numeric value regardless of repr

    CMatrix to_float() const;
    CMatrix dagger() const;
    CMatrix transpose() const;
    Cyclo trace_exact() const;
    cdouble trace() const;
    CMatrix tensor(const CMatrix& other) const;

    friend CMatrix operator+(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator*(const Cyclo& s, const CMatrix& a);
    friend CMatrix operator*(const cdouble& s, const CMatrix& a);

    bool equal_exact(const CMatrix& other) const; // exact entrywise equality
    double max_abs_diff(const CMatrix& other) const;

    // deviation measures; 0.0 for exact matrices that satisfy the property exactly
    double check_unitary() const;            // max |M^dag M - s*1|, s = tr(M^dag M)/n
    double check_unimodular_entries() const; // max | |entry| - 1 |
    double check_hermitian() const;          // max |M - M^dag|

    std::vector<cdouble> column(int j) const;

private:
    int rows_, cols_;
    bool exact_;
    std::vector<Cyclo> e_;
    std::vector<cdouble> f_;

    static void promote_pair(CMatrix& a, CMatrix& b);
};

// matrix * vector (float path)
std::vector<cdouble> matvec(const CMatrix& m, const std::vector<cdouble>& v);

} // namespace mubkit

#endif
