#pragma once

/**
 * @file rational.hpp
 * @brief Exact scalar arithmetic: arbitrary-precision rationals and Gaussian rationals Q(i).
 *
 * Rationals are GMP mpq_class values kept canonical (lowest terms, positive
 * denominator). A GaussianRational is a pair of rationals re + im*i with
 * structural equality; every field operation stays exact. No floating point.
 */

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>

#include "loopgrass/errors.hpp"

namespace loopgrass {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p/q" or "p" (arbitrary precision, base 10).
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw DomainError("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0) throw DomainError("bad rational literal: " + s);
    if (q.get_den() == 0) throw DomainError("rational with zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Exact square root of a nonnegative rational, or nullopt if it is not a perfect square.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    const Integer& num = q.get_num();
    const Integer& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

/// Element of Q(i). Denominators positive and in lowest terms; equality is structural.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussianRational(long r) : re(r), im(0) {}
    GaussianRational(long r, long i) : re(r), im(i) {}

    static GaussianRational zero() { return GaussianRational(); }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational unit_i() { return GaussianRational(0, 1); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    GaussianRational conj() const { return {re, -im}; }

    /// |x|^2 = x * conj(x), an exact nonnegative rational.
    Rational norm_sq() const { return re * re + im * im; }

    GaussianRational inverse() const {
        if (is_zero()) throw DomainError("inverse of zero");
        Rational n = norm_sq();
        return {re / n, -im / n};
    }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational operator/(const GaussianRational& o) const { return *this * o.inverse(); }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    bool operator==(const GaussianRational& o) const {
        return cmp(re, o.re) == 0 && cmp(im, o.im) == 0;
    }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    std::string str() const {
        if (is_real()) return to_string(re);
        if (sgn(re) == 0) return to_string(im) + "i";
        std::string s = to_string(re);
        if (sgn(im) > 0) s += "+";
        return s + to_string(im) + "i";
    }
};

inline GaussianRational conj(const GaussianRational& x) { return x.conj(); }

/// Hermitian pairing of two C^2 coefficient pairs: <a,b> = a1*conj(b1) + a2*conj(b2).
inline GaussianRational hermitian_pair(const GaussianRational& a1, const GaussianRational& a2,
                                       const GaussianRational& b1, const GaussianRational& b2) {
    return a1 * b1.conj() + a2 * b2.conj();
}

}  // namespace loopgrass
