#pragma once

/**
 * @file laurent.hpp
 * @brief Laurent polynomials over Q(i), C^2-valued Laurent vectors, and n x n
 *        Laurent-polynomial matrices.
 *
 * Canonical form: terms are an exponent-sorted map and zero is never stored,
 * so structural equality is semantic equality. Support bounds come straight
 * from the map ends.
 */

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loopgrass/errors.hpp"
#include "loopgrass/rational.hpp"

namespace loopgrass {

/// Finite Q(i)-linear combination of powers z^e, e in Z.
class LaurentPoly {
public:
    using TermMap = std::map<long, GaussianRational>;

    LaurentPoly() = default;
    explicit LaurentPoly(const GaussianRational& c) {
        if (!c.is_zero()) terms_[0] = c;
    }

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return constant(GaussianRational::one()); }
    static LaurentPoly constant(const GaussianRational& c) { return LaurentPoly(c); }
    static LaurentPoly monomial(long e, const GaussianRational& c) {
        LaurentPoly p;
        if (!c.is_zero()) p.terms_[e] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Lowest / highest exponent with nonzero coefficient; nullopt for the zero polynomial.
    std::optional<long> lo() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first;
    }
    std::optional<long> hi() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.rbegin()->first;
    }

    GaussianRational coeff(long e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? GaussianRational::zero() : it->second;
    }

    void add_term(long e, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool is_polynomial() const { return terms_.empty() || terms_.begin()->first >= 0; }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    LaurentPoly operator-(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }
    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r;
        for (auto& [e1, c1] : terms_)
            for (auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    LaurentPoly operator*(const GaussianRational& s) const {
        LaurentPoly r;
        if (s.is_zero()) return r;
        for (auto& [e, c] : terms_) r.terms_[e] = c * s;
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    /// Multiplication by z^k.
    LaurentPoly shifted(long k) const {
        LaurentPoly r;
        for (auto& [e, c] : terms_) r.terms_[e + k] = c;
        return r;
    }

    /// Coefficientwise complex conjugation (exponents unchanged).
    LaurentPoly conj_coeffs() const {
        LaurentPoly r;
        for (auto& [e, c] : terms_) r.terms_[e] = c.conj();
        return r;
    }

    /// Adjoint on the circle: conjugate coefficients and negate exponents, p*(z) = conj(p)(1/z).
    LaurentPoly star() const {
        LaurentPoly r;
        for (auto& [e, c] : terms_) r.terms_[-e] = c.conj();
        return r;
    }

    /// Exact evaluation at a nonzero point of Q(i).
    GaussianRational evaluate(const GaussianRational& z) const {
        if (terms_.empty()) return GaussianRational::zero();
        if (z.is_zero()) {
            if (terms_.begin()->first < 0) throw DomainError("evaluating pole at z = 0");
            return coeff(0);
        }
        GaussianRational zi = z.inverse();
        GaussianRational acc = GaussianRational::zero();
        for (auto& [e, c] : terms_) {
            GaussianRational p = GaussianRational::one();
            const GaussianRational& base = e >= 0 ? z : zi;
            for (long k = 0; k < (e >= 0 ? e : -e); ++k) p *= base;
            acc += c * p;
        }
        return acc;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto& [e, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")";
            if (e != 0) s += "z^" + std::to_string(e);
        }
        return s;
    }

private:
    TermMap terms_;
};

inline LaurentPoly z_monomial(long e) { return LaurentPoly::monomial(e, GaussianRational::one()); }

/// Element of K = H (x) C^n as an n-tuple of Laurent polynomials (n = 2 throughout).
struct VectorLaurent {
    std::vector<LaurentPoly> comps;

    VectorLaurent() : comps(2) {}
    explicit VectorLaurent(std::size_t n) : comps(n) {}
    VectorLaurent(LaurentPoly a, LaurentPoly b) : comps{std::move(a), std::move(b)} {}

    std::size_t n() const { return comps.size(); }
    bool is_zero() const {
        for (auto& p : comps)
            if (!p.is_zero()) return false;
        return true;
    }

    bool operator==(const VectorLaurent& o) const { return comps == o.comps; }
    bool operator!=(const VectorLaurent& o) const { return !(*this == o); }

    VectorLaurent operator+(const VectorLaurent& o) const {
        VectorLaurent r(n());
        for (std::size_t i = 0; i < n(); ++i) r.comps[i] = comps[i] + o.comps[i];
        return r;
    }
    VectorLaurent operator-(const VectorLaurent& o) const {
        VectorLaurent r(n());
        for (std::size_t i = 0; i < n(); ++i) r.comps[i] = comps[i] - o.comps[i];
        return r;
    }
    VectorLaurent operator*(const GaussianRational& s) const {
        VectorLaurent r(n());
        for (std::size_t i = 0; i < n(); ++i) r.comps[i] = comps[i] * s;
        return r;
    }
    VectorLaurent shifted(long k) const {
        VectorLaurent r(n());
        for (std::size_t i = 0; i < n(); ++i) r.comps[i] = comps[i].shifted(k);
        return r;
    }
};

/// Maximum exponent carrying a nonzero coefficient; nullopt plays minus-infinity (zero vector).
inline std::optional<long> vec_degree(const VectorLaurent& v) {
    std::optional<long> d;
    for (auto& p : v.comps) {
        auto h = p.hi();
        if (h && (!d || *h > *d)) d = h;
    }
    return d;
}

/// L^2 pairing in the z^k e_i orthonormal basis: sum over slots of x_s * conj(y_s).
inline GaussianRational hermitian_inner(const VectorLaurent& x, const VectorLaurent& y) {
    if (x.n() != y.n()) throw std::invalid_argument("hermitian_inner: size mismatch");
    GaussianRational acc;
    for (std::size_t i = 0; i < x.n(); ++i)
        for (auto& [e, c] : x.comps[i].terms()) acc += c * y.comps[i].coeff(e).conj();
    return acc;
}

/// Constant 2 x 2 matrix over Q(i), row-major.
struct Mat2 {
    std::array<GaussianRational, 4> e;

    Mat2() = default;
    Mat2(GaussianRational a, GaussianRational b, GaussianRational c, GaussianRational d)
        : e{std::move(a), std::move(b), std::move(c), std::move(d)} {}

    static Mat2 identity() {
        return {GaussianRational::one(), GaussianRational::zero(), GaussianRational::zero(),
                GaussianRational::one()};
    }

    const GaussianRational& at(int r, int c) const { return e[2 * r + c]; }
    GaussianRational& at(int r, int c) { return e[2 * r + c]; }

    Mat2 operator*(const Mat2& o) const {
        Mat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.at(i, j) = at(i, 0) * o.at(0, j) + at(i, 1) * o.at(1, j);
        return r;
    }
    bool operator==(const Mat2& o) const { return e == o.e; }

    Mat2 adjoint() const { return {e[0].conj(), e[2].conj(), e[1].conj(), e[3].conj()}; }
    GaussianRational det() const { return e[0] * e[3] - e[1] * e[2]; }

    Mat2 inverse() const {
        GaussianRational d = det();
        if (d.is_zero()) throw InvariantViolation("inverse of singular 2x2 matrix");
        GaussianRational di = d.inverse();
        return {e[3] * di, -e[1] * di, -e[2] * di, e[0] * di};
    }

    /// Apply to a C^2 pair.
    std::pair<GaussianRational, GaussianRational> apply(const GaussianRational& x,
                                                        const GaussianRational& y) const {
        return {e[0] * x + e[1] * y, e[2] * x + e[3] * y};
    }

    VectorLaurent apply(const VectorLaurent& v) const {
        if (v.n() != 2) throw std::invalid_argument("Mat2::apply: need a 2-vector");
        return {v.comps[0] * e[0] + v.comps[1] * e[1], v.comps[0] * e[2] + v.comps[1] * e[3]};
    }
};

/// n x n matrix of Laurent polynomials, row-major. Default n = 2.
class LaurentMatrix {
public:
    explicit LaurentMatrix(std::size_t n = 2) : n_(n), entries_(n * n) {
        if (n < 1) throw std::invalid_argument("LaurentMatrix: n >= 1 required");
    }

    static LaurentMatrix identity(std::size_t n = 2) {
        LaurentMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::one();
        return m;
    }
    static LaurentMatrix diag(LaurentPoly a, LaurentPoly b) {
        LaurentMatrix m(2);
        m.at(0, 0) = std::move(a);
        m.at(1, 1) = std::move(b);
        return m;
    }
    static LaurentMatrix from_mat2(const Mat2& g) {
        LaurentMatrix m(2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m.at(i, j) = LaurentPoly::constant(g.at(i, j));
        return m;
    }

    std::size_t n() const { return n_; }
    const LaurentPoly& at(std::size_t r, std::size_t c) const { return entries_[r * n_ + c]; }
    LaurentPoly& at(std::size_t r, std::size_t c) { return entries_[r * n_ + c]; }

    bool operator==(const LaurentMatrix& o) const { return n_ == o.n_ && entries_ == o.entries_; }
    bool operator!=(const LaurentMatrix& o) const { return !(*this == o); }

    LaurentMatrix operator+(const LaurentMatrix& o) const {
        require_same_dim(o);
        LaurentMatrix r(n_);
        for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] + o.entries_[k];
        return r;
    }
    LaurentMatrix operator-(const LaurentMatrix& o) const {
        require_same_dim(o);
        LaurentMatrix r(n_);
        for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] - o.entries_[k];
        return r;
    }
    LaurentMatrix operator*(const LaurentPoly& s) const {
        LaurentMatrix r(n_);
        for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k] * s;
        return r;
    }

    VectorLaurent column(std::size_t j) const {
        VectorLaurent v(n_);
        for (std::size_t i = 0; i < n_; ++i) v.comps[i] = at(i, j);
        return v;
    }
    void set_column(std::size_t j, const VectorLaurent& v) {
        if (v.n() != n_) throw std::invalid_argument("set_column: size mismatch");
        for (std::size_t i = 0; i < n_; ++i) at(i, j) = v.comps[i];
    }

    VectorLaurent apply(const VectorLaurent& v) const {
        if (v.n() != n_) throw std::invalid_argument("apply: size mismatch");
        VectorLaurent r(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            LaurentPoly acc;
            for (std::size_t j = 0; j < n_; ++j) acc += at(i, j) * v.comps[j];
            r.comps[i] = acc;
        }
        return r;
    }

    /// Support of all entries lies within [lo, hi].
    bool support_within(long lo, long hi) const {
        for (auto& p : entries_) {
            if (p.is_zero()) continue;
            if (*p.lo() < lo || *p.hi() > hi) return false;
        }
        return true;
    }

    Mat2 evaluate2(const GaussianRational& z) const {
        if (n_ != 2) throw std::invalid_argument("evaluate2: 2x2 only");
        return {at(0, 0).evaluate(z), at(0, 1).evaluate(z), at(1, 0).evaluate(z),
                at(1, 1).evaluate(z)};
    }

private:
    void require_same_dim(const LaurentMatrix& o) const {
        if (n_ != o.n_) throw std::invalid_argument("LaurentMatrix: dimension mismatch");
    }

    std::size_t n_;
    std::vector<LaurentPoly> entries_;
};

/// Exact matrix product; support bounds add.
inline LaurentMatrix laurent_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.n() != b.n()) throw std::invalid_argument("laurent_mul: dimension mismatch");
    LaurentMatrix r(a.n());
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j) {
            LaurentPoly acc;
            for (std::size_t k = 0; k < a.n(); ++k) acc += a.at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

inline LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    return laurent_mul(a, b);
}

/// Conjugate-transpose with z -> 1/z: the pointwise adjoint on the circle.
inline LaurentMatrix star(const LaurentMatrix& a) {
    LaurentMatrix r(a.n());
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j) r.at(i, j) = a.at(j, i).star();
    return r;
}

/// Determinant by first-row expansion (square matrices only; n stays small here).
inline LaurentPoly det(const LaurentMatrix& a) {
    std::size_t n = a.n();
    if (n == 1) return a.at(0, 0);
    if (n == 2) return a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0);
    LaurentPoly acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (a.at(0, j).is_zero()) continue;
        LaurentMatrix minor(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(i - 1, cc++) = a.at(i, c);
            }
        }
        LaurentPoly term = a.at(0, j) * det(minor);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

}  // namespace loopgrass
