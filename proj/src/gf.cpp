#include "mubkit/gf.hpp"

#include <algorithm>

#include "mubkit/cyclo.hpp" // is_prime

namespace mubkit {

namespace {

int mod(int a, int p) {
    int r = a % p;
    return r < 0 ? r + p : r;
}

// remainder of polynomial division over GF(p); both args as coefficient vectors c0..cdeg
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db) {
        int da = static_cast<int>(a.size()) - 1;
        if (a[da] == 0) {
            a.pop_back();
            continue;
        }
        // b monic is not assumed; scale by inverse of leading coefficient
        int lb = b[db];
        int linv = 1;
        for (int x = 1; x < p; ++x)
            if (x * lb % p == 1) linv = x;
        int factor = a[da] * linv % p;
        for (int i = 0; i <= db; ++i) a[da - db + i] = mod(a[da - db + i] - factor * b[i], p);
        a.pop_back();
    }
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    return a;
}

bool poly_is_zero(const std::vector<int>& a) {
    for (int c : a)
        if (c != 0) return false;
    return true;
}

} // namespace

bool gf_poly_irreducible(int p, const std::vector<int>& poly) {
    int deg = static_cast<int>(poly.size()) - 1;
    if (deg < 1) return false;
    if (deg == 1) return true;
    // trial division by every monic polynomial of degree 1..deg/2
    for (int d = 1; 2 * d <= deg; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long t = 0; t < count; ++t) {
            std::vector<int> divisor(d + 1, 0);
            long long tt = t;
            for (int i = 0; i < d; ++i) {
                divisor[i] = static_cast<int>(tt % p);
                tt /= p;
            }
            divisor[d] = 1;
            if (poly_is_zero(poly_mod(poly, divisor, p))) return false;
        }
    }
    return true;
}

std::vector<int> gf_default_mu(int p, int m) {
    // paper-worked constants first, for reproducibility of the worked examples
    if (p == 2 && m == 2) return {1, 1};          // 2 (.) 2 = 3
    if (p == 2 && m == 3) return {1, 0, 1};       // 2 (.) 4 = 5
    if (p == 2 && m == 4) return {1, 1, 0, 0};    // 2 (.) 8 = 3
    if (p == 2 && m == 5) return {1, 0, 1, 0, 0}; // 2 (.) 16 = 5
    if (p == 3 && m == 3) return {1, 2, 2};       // 3 (.) 9 = 25
    long long count = 1;
    for (int i = 0; i < m; ++i) count *= p;
    for (long long t = 0; t < count; ++t) {
        std::vector<int> mu(m);
        long long tt = t;
        for (int i = m - 1; i >= 0; --i) { // lexicographic in (mu_0, ..., mu_{m-1})
            mu[i] = static_cast<int>(tt % p);
            tt /= p;
        }
        std::vector<int> poly(m + 1);
        for (int l = 0; l < m; ++l) poly[l] = mod(-mu[l], p);
        poly[m] = 1;
        if (gf_poly_irreducible(p, poly)) return mu;
    }
    fail("ReduciblePolynomial", "no irreducible polynomial found (cannot happen)");
}

GfSpec::GfSpec(int p, int m, const std::vector<int>* mu_override) : p_(p), m_(m) {
    if (!is_prime(p)) fail("NotPrime", "p = " + std::to_string(p) + " is not prime");
    if (m < 1) fail("BadParameter", "m must be >= 1");
    N_ = 1;
    for (int i = 0; i < m; ++i) {
        N_ *= p;
        if (N_ > (1LL << 40)) fail("BadParameter", "field too large");
    }
    if (m_ > 1) {
        if (mu_override) {
            if (static_cast<int>(mu_override->size()) != m) fail("BadParameter", "mu must have m entries");
            mu_ = *mu_override;
            for (int& c : mu_) c = mod(c, p);
            std::vector<int> poly(m + 1);
            for (int l = 0; l < m; ++l) poly[l] = mod(-mu_[l], p);
            poly[m] = 1;
            if (!gf_poly_irreducible(p, poly))
                fail("ReduciblePolynomial", "x^m - sum mu_l x^l is reducible over GF(p)");
        } else {
            mu_ = gf_default_mu(p, m);
        }
        build_matrices();
        build_dual_gens();
    } else {
        dualGens_ = {1};
    }
    if (N_ <= (1 << 16)) {
        invTable_.assign(static_cast<size_t>(N_), 0);
        for (GfEl a = 1; a < N_; ++a) invTable_[static_cast<size_t>(a)] = pw(a, N_ - 2);
    }
}

std::vector<int> GfSpec::digits(GfEl x) const {
    std::vector<int> d(m_);
    for (int i = 0; i < m_; ++i) {
        d[i] = static_cast<int>(x % p_);
        x /= p_;
    }
    return d;
}

GfEl GfSpec::from_digits(const std::vector<int>& d) const {
    GfEl x = 0;
    for (int i = m_ - 1; i >= 0; --i) x = x * p_ + mod(d[i], p_);
    return x;
}

GfEl GfSpec::add(GfEl a, GfEl b) const {
    GfEl out = 0, mult = 1;
    for (int i = 0; i < m_; ++i) {
        out += ((a + b) % p_) * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

GfEl GfSpec::neg(GfEl a) const {
    GfEl out = 0, mult = 1;
    for (int i = 0; i < m_; ++i) {
        out += ((p_ - a % p_) % p_) * mult;
        a /= p_;
        mult *= p_;
    }
    return out;
}

void GfSpec::build_matrices() {
    // coefficients M^{(s)}_k of p^j (.) p^k for s = j+k, via the recurrence
    std::vector<std::vector<int>> table(2 * m_ - 1, std::vector<int>(m_, 0));
    for (int s = 0; s < m_; ++s) table[s][s] = 1;
    if (2 * m_ - 2 >= m_) {
        table[m_] = mu_;
        for (int s = m_ + 1; s <= 2 * m_ - 2; ++s)
            for (int k = 0; k < m_; ++k)
                table[s][k] = mod((k > 0 ? table[s - 1][k - 1] : 0) + mu_[k] * table[s - 1][m_ - 1], p_);
    }
    M_.assign(m_, std::vector<int>(m_ * m_, 0));
    for (int k = 0; k < m_; ++k)
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j) M_[k][i * m_ + j] = table[i + j][k];

    // invert each M_k mod p by Gauss-Jordan
    Minv_.assign(m_, std::vector<int>(m_ * m_, 0));
    for (int k = 0; k < m_; ++k) {
        std::vector<int> a = M_[k];
        std::vector<int> inv(m_ * m_, 0);
        for (int i = 0; i < m_; ++i) inv[i * m_ + i] = 1;
        for (int col = 0; col < m_; ++col) {
            int piv = -1;
            for (int r = col; r < m_; ++r)
                if (a[r * m_ + col] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) fail("AxiomViolation", "multiplication matrix is singular mod p");
            if (piv != col)
                for (int c = 0; c < m_; ++c) {
                    std::swap(a[piv * m_ + c], a[col * m_ + c]);
                    std::swap(inv[piv * m_ + c], inv[col * m_ + c]);
                }
            int lead = a[col * m_ + col], linv = 1;
            for (int x = 1; x < p_; ++x)
                if (x * lead % p_ == 1) linv = x;
            for (int c = 0; c < m_; ++c) {
                a[col * m_ + c] = a[col * m_ + c] * linv % p_;
                inv[col * m_ + c] = inv[col * m_ + c] * linv % p_;
            }
            for (int r = 0; r < m_; ++r) {
                if (r == col || a[r * m_ + col] == 0) continue;
                int f = a[r * m_ + col];
                for (int c = 0; c < m_; ++c) {
                    a[r * m_ + c] = mod(a[r * m_ + c] - f * a[col * m_ + c], p_);
                    inv[r * m_ + c] = mod(inv[r * m_ + c] - f * inv[col * m_ + c], p_);
                }
            }
        }
        Minv_[k] = inv;
    }
}

void GfSpec::build_dual_gens() {
    // rows of M_0^{-1} are the p-ary coefficients of the dual generators g_n
    dualGens_.assign(m_, 0);
    for (int n = 0; n < m_; ++n) {
        std::vector<int> row(m_);
        for (int c = 0; c < m_; ++c) row[c] = Minv_[0][n * m_ + c];
        dualGens_[n] = from_digits(row);
    }
}

GfEl GfSpec::mul(GfEl a, GfEl b) const {
    if (m_ == 1) return a % p_ * (b % p_) % p_;
    std::vector<int> da = digits(a), db = digits(b), dc(m_);
    for (int k = 0; k < m_; ++k) {
        long long acc = 0;
        for (int i = 0; i < m_; ++i) {
            if (da[i] == 0) continue;
            long long rowacc = 0;
            for (int j = 0; j < m_; ++j) rowacc += static_cast<long long>(M_[k][i * m_ + j]) * db[j];
            acc += da[i] * (rowacc % p_);
        }
        dc[k] = static_cast<int>(acc % p_);
    }
    return from_digits(dc);
}

GfEl GfSpec::pw(GfEl a, long long e) const {
    GfEl r = 1, base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

GfEl GfSpec::inv(GfEl a) const {
    if (a == 0) fail("DivisionByZero", "inverse of 0");
    if (!invTable_.empty()) return invTable_[static_cast<size_t>(a)];
    return pw(a, N_ - 2);
}

std::vector<int> GfSpec::conj_coeffs(GfEl k) const {
    if (m_ == 1) return {static_cast<int>(k % p_)};
    std::vector<int> d = digits(k), u(m_, 0);
    for (int c = 0; c < m_; ++c) {
        long long acc = 0;
        for (int i = 0; i < m_; ++i) acc += static_cast<long long>(d[i]) * M_[0][i * m_ + c];
        u[c] = static_cast<int>(acc % p_);
    }
    return u;
}

GfSpec::AxiomReport GfSpec::verify_axioms() const {
    AxiomReport rep;
    auto flag = [&rep](const std::string& s) {
        if (rep.ok) {
            rep.ok = false;
            rep.detail = s;
        }
    };
    if (N_ > (1 << 16)) fail("BadParameter", "exhaustive verification capped at N <= 2^16");
    for (GfEl a = 0; a < N_ && rep.ok; ++a)
        for (GfEl b = 0; b < N_ && rep.ok; ++b) {
            if (add(a, b) != add(b, a)) flag("add not commutative at (" + std::to_string(a) + "," + std::to_string(b) + ")");
            if (mul(a, b) != mul(b, a)) flag("mul not commutative at (" + std::to_string(a) + "," + std::to_string(b) + ")");
            for (GfEl c = 0; c < N_ && rep.ok; ++c) {
                if (add(add(a, b), c) != add(a, add(b, c)))
                    flag("add not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    flag("mul not associative at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
                if (mul(add(a, b), c) != add(mul(a, c), mul(b, c)))
                    flag("not distributive at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
            }
        }
    for (GfEl a = 0; a < N_ && rep.ok; ++a) {
        if (add(a, neg(a)) != 0) flag("no additive inverse for " + std::to_string(a));
        if (a != 0 && mul(a, inv(a)) != 1) flag("no multiplicative inverse for " + std::to_string(a));
        if (mul(a, 0) != 0) flag("0 not absorbing for " + std::to_string(a));
        if (mul(a, 1) != a) flag("1 not neutral for " + std::to_string(a));
    }
    // character identity: sum_j gamma^{j (.) i} = N delta_{i,0}, exact over exponent counts
    for (GfEl i = 0; i < N_ && rep.ok; ++i) {
        std::vector<long long> cnt(static_cast<size_t>(p_), 0);
        for (GfEl j = 0; j < N_; ++j) ++cnt[static_cast<size_t>(char_exp(mul(j, i)))];
        bool good = (i == 0) ? (cnt[0] == N_)
                             : std::all_of(cnt.begin(), cnt.end(),
                                           [&](long long c) { return c == N_ / p_; });
        if (!good) flag("character identity fails at i = " + std::to_string(i));
    }
    return rep;
}

GfEl gf_arith(const GfSpec& f, const std::string& op, GfEl a, GfEl b) {
    if (a < 0 || a >= f.N() || b < 0 || b >= f.N()) fail("BadParameter", "element out of range");
    if (op == "add") return f.add(a, b);
    if (op == "sub") return f.sub(a, b);
    if (op == "neg") return f.neg(a);
    if (op == "mul") return f.mul(a, b);
    if (op == "div") return f.divide(a, b);
    if (op == "inv") return f.inv(a);
    fail("BadParameter", "unknown op " + op);
}

} // namespace mubkit
