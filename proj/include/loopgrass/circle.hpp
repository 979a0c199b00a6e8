#pragma once

/**
 * @file circle.hpp
 * @brief Certified root location relative to the unit circle, entirely over
 *        Q(i) / Q: exact Schur-Cohn style counting of roots in the open unit
 *        disk, Sturm-chain detection of roots on the circle, and winding
 *        numbers of nonvanishing Laurent polynomials.
 *
 * Circle detection substitutes t = tan(theta/2): with z = (1+it)/(1-it) the
 * squared modulus |p(z)|^2 clears to a real polynomial N(t) whose real roots
 * are exactly the circle roots of p away from z = -1; z = -1 is evaluated
 * directly. Disk counting runs the Schur transform
 *     T p = conj(a_0) p - a_n p*
 * (p* the conjugate-reciprocal), splitting off gcd(p, p*) whenever the
 * leading/constant moduli tie, and falling back to an exact disk automorphism
 * z -> (z + c)/(1 + conj(c) z) when the tie persists with trivial gcd. Each
 * branch is justified by Rouche's theorem with the no-circle-root guarantee,
 * so the returned counts are exact integers, never estimates.
 */

#include <string>
#include <vector>

#include "loopgrass/errors.hpp"
#include "loopgrass/laurent.hpp"
#include "loopgrass/rational.hpp"

namespace loopgrass {

struct WindingResult {
    long winding = 0;
    long roots_inside = 0;        // roots of the polynomial part in |z| < 1
    long pole_order_at_zero = 0;  // m with h = z^{-m} p, p(0) != 0

    bool operator==(const WindingResult& o) const {
        return winding == o.winding && roots_inside == o.roots_inside &&
               pole_order_at_zero == o.pole_order_at_zero;
    }
};

/// Why a circle-root refusal fired: either p(-1) = 0 or a Sturm-certified real
/// root of the tan(theta/2) resolvent inside [t_lo, t_hi].
struct CircleRootCertificate {
    bool at_minus_one = false;
    Rational t_lo, t_hi;
    std::string describe() const {
        if (at_minus_one) return "root at z = -1";
        return "circle root with tan(theta/2) in [" + to_string(t_lo) + ", " + to_string(t_hi) + "]";
    }
};

class CircleRootError : public DomainError {
public:
    explicit CircleRootError(CircleRootCertificate cert)
        : DomainError("polynomial vanishes on the unit circle: " + cert.describe()),
          certificate(std::move(cert)) {}
    CircleRootCertificate certificate;
};

namespace circle_detail {

// ---- dense polynomials over Q (for Sturm chains) ----

using RatPoly = std::vector<Rational>;  // ascending coefficients

inline void rp_strip(RatPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}
inline long rp_deg(const RatPoly& p) { return static_cast<long>(p.size()) - 1; }

inline RatPoly rp_derivative(const RatPoly& p) {
    RatPoly d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
    rp_strip(d);
    return d;
}

inline RatPoly rp_rem(RatPoly a, const RatPoly& b) {
    rp_strip(a);
    while (rp_deg(a) >= rp_deg(b) && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
        rp_strip(a);
    }
    return a;
}

inline RatPoly rp_quot(RatPoly a, const RatPoly& b) {
    rp_strip(a);
    RatPoly q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
    while (rp_deg(a) >= rp_deg(b) && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
        rp_strip(a);
    }
    rp_strip(q);
    return q;
}

inline RatPoly rp_gcd(RatPoly a, RatPoly b) {
    rp_strip(a);
    rp_strip(b);
    while (!b.empty()) {
        RatPoly r = rp_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational inv = 1 / a.back();
        for (auto& c : a) c *= inv;
    }
    return a;
}

inline int rp_sign_at(const RatPoly& p, const Rational& x) {
    Rational acc(0);
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return sgn(acc);
}

struct SturmChain {
    std::vector<RatPoly> seq;

    explicit SturmChain(RatPoly p) {
        rp_strip(p);
        if (p.empty()) throw DomainError("Sturm chain of zero polynomial");
        seq.push_back(p);
        RatPoly d = rp_derivative(p);
        if (!d.empty()) {
            seq.push_back(d);
            while (true) {
                RatPoly r = rp_rem(seq[seq.size() - 2], seq.back());
                if (r.empty()) break;
                for (auto& c : r) c = -c;
                seq.push_back(std::move(r));
            }
        }
    }

    static int variations(const std::vector<int>& signs) {
        int v = 0, prev = 0;
        for (int s : signs) {
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++v;
            prev = s;
        }
        return v;
    }

    int variations_at(const Rational& x) const {
        std::vector<int> signs;
        for (auto& p : seq) signs.push_back(rp_sign_at(p, x));
        return variations(signs);
    }
    int variations_at_plus_inf() const {
        std::vector<int> signs;
        for (auto& p : seq) signs.push_back(sgn(p.back()));
        return variations(signs);
    }
    int variations_at_minus_inf() const {
        std::vector<int> signs;
        for (auto& p : seq) signs.push_back(rp_deg(p) % 2 == 0 ? sgn(p.back()) : -sgn(p.back()));
        return variations(signs);
    }

    /// Distinct real roots in (a, b].
    int count_in(const Rational& a, const Rational& b) const {
        return variations_at(a) - variations_at(b);
    }
    int count_all() const { return variations_at_minus_inf() - variations_at_plus_inf(); }
};

/// Cauchy bound: all real roots lie in [-B, B].
inline Rational rp_root_bound(const RatPoly& p) {
    Rational b(0);
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
        Rational q = abs(p[k] / p.back());
        if (q > b) b = q;
    }
    return b + 1;
}

// ---- dense polynomials over Q(i) (for Schur-Cohn) ----

using QiPoly = std::vector<GaussianRational>;  // ascending

inline void qp_strip(QiPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}
inline long qp_deg(const QiPoly& p) { return static_cast<long>(p.size()) - 1; }

inline QiPoly qp_from_laurent(const LaurentPoly& p) {
    if (!p.is_polynomial()) throw DomainError("expected a true polynomial (no negative exponents)");
    QiPoly q;
    if (p.is_zero()) return q;
    q.assign(static_cast<std::size_t>(*p.hi()) + 1, GaussianRational::zero());
    for (auto& [e, c] : p.terms()) q[static_cast<std::size_t>(e)] = c;
    return q;
}

inline QiPoly qp_mul(const QiPoly& a, const QiPoly& b) {
    if (a.empty() || b.empty()) return {};
    QiPoly r(a.size() + b.size() - 1, GaussianRational::zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qp_strip(r);
    return r;
}

inline QiPoly qp_rem(QiPoly a, const QiPoly& b) {
    qp_strip(a);
    while (qp_deg(a) >= qp_deg(b) && !a.empty()) {
        GaussianRational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
        qp_strip(a);
    }
    return a;
}

inline QiPoly qp_divexact(QiPoly a, const QiPoly& b) {
    qp_strip(a);
    QiPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, GaussianRational::zero());
    while (qp_deg(a) >= qp_deg(b) && !a.empty()) {
        GaussianRational f = a.back() / b.back();
        q[a.size() - b.size()] = f;
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
        qp_strip(a);
    }
    if (!a.empty()) throw InvariantViolation("qp_divexact: division not exact");
    qp_strip(q);
    return q;
}

inline QiPoly qp_gcd_monic(QiPoly a, QiPoly b) {
    qp_strip(a);
    qp_strip(b);
    while (!b.empty()) {
        QiPoly r = qp_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        GaussianRational inv = a.back().inverse();
        for (auto& c : a) c *= inv;
    }
    return a;
}

/// p*(z) = z^deg(p) * conj(p)(1/z): conjugate and reverse.
inline QiPoly qp_conj_reciprocal(const QiPoly& p) {
    QiPoly r(p.rbegin(), p.rend());
    for (auto& c : r) c = c.conj();
    qp_strip(r);
    return r;
}

/// Schur transform conj(a_0) p - a_n p*; degree drops by at least one.
inline QiPoly qp_schur(const QiPoly& p) {
    std::size_t n = p.size() - 1;
    QiPoly t(n, GaussianRational::zero());
    for (std::size_t k = 0; k < n; ++k) t[k] = p[0].conj() * p[k] - p[n] * p[n - k].conj();
    qp_strip(t);
    return t;
}

/// p((z + c)/(1 + conj(c) z)) * (1 + conj(c) z)^deg(p): a disk automorphism,
/// preserves inside/on/outside root counts.
inline QiPoly qp_mobius(const QiPoly& p, const GaussianRational& c) {
    std::size_t n = p.size() - 1;
    QiPoly zc{c, GaussianRational::one()};                 // z + c
    QiPoly czp{GaussianRational::one(), c.conj()};         // 1 + conj(c) z
    // powers
    std::vector<QiPoly> zc_pow{{GaussianRational::one()}};
    std::vector<QiPoly> czp_pow{{GaussianRational::one()}};
    for (std::size_t k = 1; k <= n; ++k) {
        zc_pow.push_back(qp_mul(zc_pow.back(), zc));
        czp_pow.push_back(qp_mul(czp_pow.back(), czp));
    }
    QiPoly acc;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k].is_zero()) continue;
        QiPoly term = qp_mul(zc_pow[k], czp_pow[n - k]);
        if (acc.size() < term.size()) acc.resize(term.size(), GaussianRational::zero());
        for (std::size_t j = 0; j < term.size(); ++j) acc[j] += term[j] * p[k];
    }
    qp_strip(acc);
    return acc;
}

/// Core recursion. Precondition: p nonzero with no roots on the unit circle.
inline long qp_count_inside(QiPoly p) {
    qp_strip(p);
    long count = 0;
    // roots at the origin are inside the disk
    std::size_t m = 0;
    while (m < p.size() && p[m].is_zero()) ++m;
    if (m > 0) {
        count += static_cast<long>(m);
        p.erase(p.begin(), p.begin() + m);
    }
    if (qp_deg(p) <= 0) return count;

    // split off the self-conjugate-reciprocal part: its roots pair up across
    // the circle, so exactly half of them (with multiplicity) lie inside
    QiPoly g = qp_gcd_monic(p, qp_conj_reciprocal(p));
    if (qp_deg(g) > 0) {
        if (qp_deg(g) % 2 != 0)
            throw InvariantViolation("self-reciprocal factor of odd degree: circle root missed");
        return count + qp_deg(g) / 2 + qp_count_inside(qp_divexact(p, g));
    }

    const long n = qp_deg(p);
    Rational gamma = p.front().norm_sq() - p.back().norm_sq();
    if (sgn(gamma) > 0) return count + qp_count_inside(qp_schur(p));
    if (sgn(gamma) < 0) return count + n - qp_count_inside(qp_schur(p));

    // |a_0| = |a_n| with gcd(p, p*) trivial: move to an equivalent position by
    // an exact disk automorphism. gamma of the transform is |p(c)|^2 - |p*(c)|^2,
    // not identically zero here, so the grid search below terminates.
    for (long q = 2; q <= 64; ++q) {
        for (long x = 0; x < q; ++x) {
            for (long y = 0; y < q; ++y) {
                if (x == 0 && y == 0) continue;
                GaussianRational c(rat(x, q), rat(y, q));
                if (!(c.norm_sq() < 1)) continue;
                QiPoly t = qp_mobius(p, c);
                if (qp_deg(t) != n) continue;      // p(1/conj(c)) = 0, pick another c
                if (t.front().is_zero()) continue; // p(c) = 0
                if (sgn(t.front().norm_sq() - t.back().norm_sq()) == 0) continue;
                return count + qp_count_inside(t);
            }
        }
    }
    throw InvariantViolation("disk-automorphism search exhausted");
}

}  // namespace circle_detail

/// True iff p has a root with |z| = 1, decided exactly. p must be a nonzero
/// true polynomial. The optional out parameter receives a certificate.
inline bool has_root_on_unit_circle(const LaurentPoly& p, CircleRootCertificate* cert = nullptr) {
    using namespace circle_detail;
    if (p.is_zero()) throw DomainError("has_root_on_unit_circle: zero polynomial");
    QiPoly q = qp_from_laurent(p);
    std::size_t m = 0;
    while (m < q.size() && q[m].is_zero()) ++m;
    q.erase(q.begin(), q.begin() + m);  // roots at 0 are not on the circle
    const std::size_t n = q.size() - 1;
    if (n == 0) return false;

    // z = -1 (t = infinity) first
    GaussianRational at_m1;
    for (std::size_t k = 0; k <= n; ++k) at_m1 += (k % 2 == 0 ? q[k] : -q[k]);
    if (at_m1.is_zero()) {
        if (cert) cert->at_minus_one = true;
        return true;
    }

    // A(t) = sum a_k (1+it)^k (1-it)^(n-k); N = A * conj(A) has real coefficients
    // and N(t) = |p(z(t))|^2 * (1+t^2)^n on the real line.
    QiPoly up{GaussianRational::one(), GaussianRational::unit_i()};    // 1 + i t
    QiPoly dn{GaussianRational::one(), -GaussianRational::unit_i()};   // 1 - i t
    std::vector<QiPoly> up_pow{{GaussianRational::one()}}, dn_pow{{GaussianRational::one()}};
    for (std::size_t k = 1; k <= n; ++k) {
        up_pow.push_back(qp_mul(up_pow.back(), up));
        dn_pow.push_back(qp_mul(dn_pow.back(), dn));
    }
    QiPoly a;
    for (std::size_t k = 0; k <= n; ++k) {
        if (q[k].is_zero()) continue;
        QiPoly term = qp_mul(up_pow[k], dn_pow[n - k]);
        if (a.size() < term.size()) a.resize(term.size(), GaussianRational::zero());
        for (std::size_t j = 0; j < term.size(); ++j) a[j] += term[j] * q[k];
    }
    qp_strip(a);
    if (a.empty()) throw InvariantViolation("vanishing tan-half-angle resolvent");
    QiPoly abar = a;
    for (auto& c : abar) c = c.conj();
    QiPoly nn = qp_mul(a, abar);
    RatPoly N;
    for (auto& c : nn) {
        if (sgn(c.im) != 0) throw InvariantViolation("resolvent has nonreal coefficient");
        N.push_back(c.re);
    }
    rp_strip(N);
    if (N.empty()) throw InvariantViolation("zero resolvent");
    RatPoly sqfree = rp_quot(N, rp_gcd(N, rp_derivative(N)));
    SturmChain chain(sqfree);
    int roots = chain.count_all();
    if (roots <= 0) return false;
    if (cert) {
        // bisect to an isolating interval for one real root of the resolvent
        Rational lo = -rp_root_bound(sqfree), hi = rp_root_bound(sqfree);
        while (chain.count_in(lo, hi) > 1 || hi - lo > rat(1, 1024)) {
            Rational mid = (lo + hi) / 2;
            if (rp_sign_at(sqfree, mid) == 0) {
                lo = hi = mid;
                break;
            }
            if (chain.count_in(lo, mid) > 0)
                hi = mid;
            else
                lo = mid;
        }
        cert->at_minus_one = false;
        cert->t_lo = lo;
        cert->t_hi = hi;
    }
    return true;
}

/// Exact number of roots (with multiplicity) of p in |z| < 1. Refuses, with a
/// certificate, when p has a root on the circle.
inline long count_roots_in_open_unit_disk(const LaurentPoly& p) {
    if (p.is_zero()) throw DomainError("count_roots_in_open_unit_disk: zero polynomial");
    CircleRootCertificate cert;
    if (has_root_on_unit_circle(p, &cert)) throw CircleRootError(cert);
    return circle_detail::qp_count_inside(circle_detail::qp_from_laurent(p));
}

/// Winding number of a Laurent polynomial nonvanishing on the circle:
/// write h = z^{-m} p with p(0) != 0; winding = (roots of p inside) - m.
inline WindingResult winding_number(const LaurentPoly& h) {
    if (h.is_zero()) throw DomainError("winding_number: zero input");
    long lo = *h.lo();
    LaurentPoly p = h.shifted(-lo);  // p(0) != 0
    CircleRootCertificate cert;
    if (has_root_on_unit_circle(p, &cert)) throw CircleRootError(cert);
    WindingResult r;
    r.pole_order_at_zero = -lo;
    r.roots_inside = count_roots_in_open_unit_disk(p);
    r.winding = r.roots_inside - r.pole_order_at_zero;
    return r;
}

/// Certifies |p|^2 constant on the circle: p(z) * conj(p)(1/z) == c as a Laurent
/// identity. Returns the constant, or nullopt if |p| is not constant.
inline std::optional<Rational> unimodular_square_constant(const LaurentPoly& p) {
    if (p.is_zero()) return std::nullopt;
    LaurentPoly f = p * p.star();
    if (f.is_zero()) return std::nullopt;
    if (*f.lo() != 0 || *f.hi() != 0) return std::nullopt;
    GaussianRational c = f.coeff(0);
    if (sgn(c.im) != 0) throw InvariantViolation("p * p^* has nonreal constant term");
    return c.re;
}

}  // namespace loopgrass
