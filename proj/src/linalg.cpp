#include "mubkit/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace mubkit {

std::vector<std::vector<cdouble>> complex_kernel(Cpx a, double tol) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    size_t r = 0;
    double scale = 0;
    for (const auto& row : a)
        for (const auto& x : row) scale = std::max(scale, std::abs(x));
    if (scale == 0) scale = 1;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t best = r;
        double bm = 0;
        for (size_t i = r; i < rows; ++i)
            if (std::abs(a[i][c]) > bm) {
                bm = std::abs(a[i][c]);
                best = i;
            }
        if (bm <= tol * scale) continue;
        std::swap(a[r], a[best]);
        cdouble lead = a[r][c];
        for (size_t j = c; j < cols; ++j) a[r][j] /= lead;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            cdouble f = a[i][c];
            if (std::abs(f) == 0) continue;
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(static_cast<int>(c));
        is_pivot[c] = true;
        ++r;
    }
    std::vector<std::vector<cdouble>> kernel;
    for (size_t freec = 0; freec < cols; ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<cdouble> v(cols, cdouble(0, 0));
        v[freec] = 1.0;
        for (size_t pr = 0; pr < pivot_col.size(); ++pr)
            v[pivot_col[pr]] = -a[pr][freec];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

int real_rank(std::vector<std::vector<double>> a, double rel_tol) {
    size_t rows = a.size();
    size_t cols = rows ? a[0].size() : 0;
    double scale = 0;
    for (const auto& row : a)
        for (double x : row) scale = std::max(scale, std::abs(x));
    if (scale == 0) return 0;
    int rank = 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t best = r;
        double bm = 0;
        for (size_t i = r; i < rows; ++i)
            if (std::abs(a[i][c]) > bm) {
                bm = std::abs(a[i][c]);
                best = i;
            }
        if (bm <= rel_tol * scale) continue;
        std::swap(a[r], a[best]);
        for (size_t i = r + 1; i < rows; ++i) {
            double f = a[i][c] / a[r][c];
            if (f == 0) continue;
            for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++rank;
        ++r;
    }
    return rank;
}

bool psd_within(const CMatrix& m, double shift) {
    int n = m.rows();
    Cpx a(n, std::vector<cdouble>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.value(i, j) + (i == j ? cdouble(shift, 0) : cdouble(0, 0));
    for (int k = 0; k < n; ++k) {
        cdouble d = a[k][k];
        for (int t = 0; t < k; ++t) d -= a[k][t] * std::conj(a[k][t]);
        if (d.real() <= 0 || std::abs(d.imag()) > 1e-9 * (1 + std::abs(d.real()))) return false;
        double dk = std::sqrt(d.real());
        a[k][k] = dk;
        for (int i = k + 1; i < n; ++i) {
            cdouble s = a[i][k];
            for (int t = 0; t < k; ++t) s -= a[i][t] * std::conj(a[k][t]);
            a[i][k] = s / dk;
        }
    }
    return true;
}

CMatrix haar_unitary(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Cpx g(n, std::vector<cdouble>(n));
    for (auto& row : g)
        for (auto& x : row) x = cdouble(gauss(rng), gauss(rng));
    // modified Gram-Schmidt QR; columns are normalized in place so later
    // projections run against the orthonormal prefix
    CMatrix q = CMatrix::zeros(n, n);
    std::vector<std::vector<cdouble>> cols(n, std::vector<cdouble>(n));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) cols[j][i] = g[i][j];
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < j; ++k) {
            cdouble proj(0, 0);
            for (int i = 0; i < n; ++i) proj += std::conj(cols[k][i]) * cols[j][i];
            for (int i = 0; i < n; ++i) cols[j][i] -= proj * cols[k][i];
        }
        double nrm = 0;
        for (int i = 0; i < n; ++i) nrm += std::norm(cols[j][i]);
        nrm = std::sqrt(nrm);
        // Gram-Schmidt leaves R with a real positive diagonal, which is the
        // phase convention that makes Q Haar-distributed
        for (int i = 0; i < n; ++i) cols[j][i] /= nrm;
        for (int i = 0; i < n; ++i) q.fl(i, j) = cols[j][i];
    }
    return q;
}

} // namespace mubkit
