#include "mubkit/cmatrix.hpp"

#include <algorithm>
#include <cmath>

namespace mubkit {

CMatrix CMatrix::zeros(int rows, int cols) {
    CMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.exact_ = false;
    m.f_.assign(static_cast<size_t>(rows) * cols, cdouble(0, 0));
    return m;
}

CMatrix CMatrix::zeros_exact(int rows, int cols) {
    CMatrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.exact_ = true;
    m.e_.assign(static_cast<size_t>(rows) * cols, Cyclo());
    return m;
}

CMatrix CMatrix::identity(int n) {
    CMatrix m = zeros(n, n);
    for (int i = 0; i < n; ++i) m.fl(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::identity_exact(int n) {
    CMatrix m = zeros_exact(n, n);
    for (int i = 0; i < n; ++i) m.ex(i, i) = Cyclo(Rational(1));
    return m;
}

CMatrix CMatrix::from_rows(const std::vector<std::vector<cdouble>>& rows) {
    CMatrix m = zeros(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows_; ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols_) fail("DimensionMismatch", "ragged rows");
        for (int j = 0; j < m.cols_; ++j) m.fl(i, j) = rows[i][j];
    }
    return m;
}

Cyclo& CMatrix::ex(int i, int j) {
    if (!exact_) fail("NotExact", "float matrix has no exact entries");
    return e_[static_cast<size_t>(i) * cols_ + j];
}
const Cyclo& CMatrix::ex(int i, int j) const {
    if (!exact_) fail("NotExact", "float matrix has no exact entries");
    return e_[static_cast<size_t>(i) * cols_ + j];
}
cdouble& CMatrix::fl(int i, int j) {
    if (exact_) fail("NotFloat", "exact matrix has no float entries");
    return f_[static_cast<size_t>(i) * cols_ + j];
}
const cdouble& CMatrix::fl(int i, int j) const {
    if (exact_) fail("NotFloat", "exact matrix has no float entries");
    return f_[static_cast<size_t>(i) * cols_ + j];
}

cdouble CMatrix::value(int i, int j) const {
    return exact_ ? e_[static_cast<size_t>(i) * cols_ + j].to_complex()
                  : f_[static_cast<size_t>(i) * cols_ + j];
}

CMatrix CMatrix::to_float() const {
    if (!exact_) return *this;
    CMatrix m = zeros(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.fl(i, j) = value(i, j);
    return m;
}

CMatrix CMatrix::dagger() const {
    if (exact_) {
        CMatrix m = zeros_exact(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.ex(j, i) = ex(i, j).conj();
        return m;
    }
    CMatrix m = zeros(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.fl(j, i) = std::conj(fl(i, j));
    return m;
}

CMatrix CMatrix::transpose() const {
    if (exact_) {
        CMatrix m = zeros_exact(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m.ex(j, i) = ex(i, j);
        return m;
    }
    CMatrix m = zeros(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.fl(j, i) = fl(i, j);
    return m;
}

Cyclo CMatrix::trace_exact() const {
    if (!square()) fail("NotSquare", "trace of non-square matrix");
    Cyclo t;
    for (int i = 0; i < rows_; ++i) t += ex(i, i);
    return t;
}

cdouble CMatrix::trace() const {
    if (!square()) fail("NotSquare", "trace of non-square matrix");
    cdouble t(0, 0);
    for (int i = 0; i < rows_; ++i) t += value(i, i);
    return t;
}

CMatrix CMatrix::tensor(const CMatrix& other) const {
    // first factor is the fast index
    const CMatrix& A = *this;
    const CMatrix& B = other;
    if (A.exact_ && B.exact_) {
        try {
            CMatrix m = zeros_exact(A.rows_ * B.rows_, A.cols_ * B.cols_);
            for (int ia = 0; ia < A.rows_; ++ia)
                for (int ib = 0; ib < B.rows_; ++ib)
                    for (int ja = 0; ja < A.cols_; ++ja)
                        for (int jb = 0; jb < B.cols_; ++jb)
                            m.ex(ia + ib * A.rows_, ja + jb * A.cols_) = A.ex(ia, ja) * B.ex(ib, jb);
            return m;
        } catch (const Error& e) {
            if (std::string(e.code()) != "OrderMismatch") throw;
            // cross-prime orders: fall through to float
        }
    }
    CMatrix a = A.to_float(), b = B.to_float();
    CMatrix m = zeros(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int ia = 0; ia < a.rows_; ++ia)
        for (int ib = 0; ib < b.rows_; ++ib)
            for (int ja = 0; ja < a.cols_; ++ja)
                for (int jb = 0; jb < b.cols_; ++jb)
                    m.fl(ia + ib * a.rows_, ja + jb * a.cols_) = a.fl(ia, ja) * b.fl(ib, jb);
    return m;
}

void CMatrix::promote_pair(CMatrix& a, CMatrix& b) {
    if (a.exact_ != b.exact_) {
        a = a.to_float();
        b = b.to_float();
    }
}

CMatrix operator+(const CMatrix& a0, const CMatrix& b0) {
    if (a0.rows_ != b0.rows_ || a0.cols_ != b0.cols_) fail("DimensionMismatch", "matrix add");
    CMatrix a = a0, b = b0;
    CMatrix::promote_pair(a, b);
    if (a.exact_) {
        try {
            for (size_t k = 0; k < a.e_.size(); ++k) a.e_[k] += b.e_[k];
            return a;
        } catch (const Error& e) {
            if (std::string(e.code()) != "OrderMismatch") throw;
            a = a0.to_float();
            b = b0.to_float();
        }
    }
    for (size_t k = 0; k < a.f_.size(); ++k) a.f_[k] += b.f_[k];
    return a;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    return a + (cdouble(-1, 0) * b);
}

CMatrix operator*(const CMatrix& a0, const CMatrix& b0) {
    if (a0.cols_ != b0.rows_) fail("DimensionMismatch", "matrix multiply");
    CMatrix a = a0, b = b0;
    CMatrix::promote_pair(a, b);
    if (a.exact_) {
        try {
            CMatrix m = CMatrix::zeros_exact(a.rows_, b.cols_);
            for (int i = 0; i < a.rows_; ++i)
                for (int k = 0; k < a.cols_; ++k) {
                    const Cyclo& aik = a.ex(i, k);
                    if (aik.is_zero()) continue;
                    for (int j = 0; j < b.cols_; ++j) {
                        const Cyclo& bkj = b.ex(k, j);
                        if (bkj.is_zero()) continue;
                        m.ex(i, j) += aik * bkj;
                    }
                }
            return m;
        } catch (const Error& e) {
            if (std::string(e.code()) != "OrderMismatch") throw;
            a = a0.to_float();
            b = b0.to_float();
        }
    }
    CMatrix m = CMatrix::zeros(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            cdouble aik = a.fl(i, k);
            if (aik == cdouble(0, 0)) continue;
            for (int j = 0; j < b.cols_; ++j) m.fl(i, j) += aik * b.fl(k, j);
        }
    return m;
}

CMatrix operator*(const Cyclo& s, const CMatrix& a) {
    if (a.exact_) {
        CMatrix m = a;
        for (auto& x : m.e_) x *= s;
        return m;
    }
    return s.to_complex() * a;
}

CMatrix operator*(const cdouble& s, const CMatrix& a0) {
    CMatrix a = a0.to_float();
    for (auto& x : a.f_) x *= s;
    return a;
}

bool CMatrix::equal_exact(const CMatrix& other) const {
    if (!exact_ || !other.exact_) fail("NotExact", "exact comparison of float matrices");
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (size_t k = 0; k < e_.size(); ++k)
        if (e_[k] != other.e_[k]) return false;
    return true;
}

double CMatrix::max_abs_diff(const CMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) fail("DimensionMismatch", "matrix diff");
    double dev = 0.0;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) dev = std::max(dev, std::abs(value(i, j) - other.value(i, j)));
    return dev;
}

double CMatrix::check_unitary() const {
    if (!square()) fail("NotSquare", "unitarity check");
    CMatrix g = dagger() * (*this);
    if (g.exact_) {
        Cyclo s = Rational(1, rows_) * g.trace_exact();
        CMatrix target = s * identity_exact(rows_);
        if (g.equal_exact(target)) return 0.0;
        return g.max_abs_diff(target);
    }
    cdouble s = g.trace() / static_cast<double>(rows_);
    double dev = 0.0;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            dev = std::max(dev, std::abs(g.fl(i, j) - (i == j ? s : cdouble(0, 0))));
    return dev;
}

double CMatrix::check_unimodular_entries() const {
    double dev = 0.0;
    if (exact_) {
        bool all = true;
        for (const auto& x : e_) {
            Cyclo a2 = x.abs2();
            if (!(a2.is_rational() && a2.rational_value() == Rational(1))) all = false;
        }
        if (all) return 0.0;
    }
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) dev = std::max(dev, std::abs(std::abs(value(i, j)) - 1.0));
    return dev;
}

double CMatrix::check_hermitian() const {
    if (!square()) fail("NotSquare", "hermitian check");
    if (exact_) {
        if (equal_exact(dagger())) return 0.0;
    }
    double dev = 0.0;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) dev = std::max(dev, std::abs(value(i, j) - std::conj(value(j, i))));
    return dev;
}

std::vector<cdouble> CMatrix::column(int j) const {
    std::vector<cdouble> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = value(i, j);
    return v;
}

std::vector<cdouble> matvec(const CMatrix& m, const std::vector<cdouble>& v) {
    if (static_cast<size_t>(m.cols()) != v.size()) fail("DimensionMismatch", "matvec");
    std::vector<cdouble> out(m.rows(), cdouble(0, 0));
    for (int i = 0; i < m.rows(); ++i) {
        cdouble acc(0, 0);
        for (int j = 0; j < m.cols(); ++j) acc += m.value(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

} // namespace mubkit
