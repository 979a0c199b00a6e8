#pragma once

/**
 * @file beta.hpp
 * @brief The inverse correspondence: from a lattice back to the unitary loop,
 *        via exact unnormalized Gram-Schmidt on W (-) zW.
 *
 * The complement W (-) zW is computed in the widened exponent window [-r, r]
 * (it is orthogonal to z^{r+1} K+, so nothing truncates), giving two exact
 * orthogonal Laurent vectors with positive rational squared norms. Assembled
 * as the columns of Ntilde, the represented loop is
 *
 *     f(z) = Ntilde(z) * Ntilde(1)^{-1},
 *
 * which is independent of the complement basis choice: any other choice is
 * Ntilde * C for a constant invertible C, and C cancels in the right quotient.
 * (Consequently the column normalizations cancel as well, so the loop stays in
 * Q(i) exactly; the squared norms are carried as certified bookkeeping.) The
 * quotient must multiply on this side: for a basis change, N(1)^{-1} N(z)
 * transforms by conjugation and is not well defined on lattices.
 */

#include <algorithm>
#include <utility>
#include <vector>

#include "loopgrass/lattice.hpp"

namespace loopgrass {

/// Unnormalized complement vector with its exact squared norm.
struct ScaledVector {
    VectorLaurent vector;
    Rational norm_sq;

    static ScaledVector of(VectorLaurent v) {
        if (v.is_zero()) throw InvariantViolation("ScaledVector: zero vector");
        GaussianRational n = hermitian_inner(v, v);
        if (sgn(n.im) != 0 || sgn(n.re) <= 0)
            throw InvariantViolation("ScaledVector: norm not positive real");
        return {std::move(v), n.re};
    }
};

/// Integer-cleared orthogonal column matrix Ntilde plus squared column norms.
struct ScaledLoop {
    LaurentMatrix nb{2};
    std::pair<Rational, Rational> norms_sq;
};

namespace beta_detail {

inline std::size_t wide_slots(long r) { return static_cast<std::size_t>(2 * (2 * r + 1)); }
inline std::size_t wide_index(long e, int comp, long r) {
    return static_cast<std::size_t>(2 * (e + r) + comp);
}

inline VectorLaurent from_wide(const QiVec& w, long r) {
    VectorLaurent v;
    for (std::size_t s = 0; s < w.size(); ++s)
        if (!w[s].is_zero())
            v.comps[s % 2].add_term(static_cast<long>(s / 2) - r, w[s]);
    return v;
}

inline GaussianRational wide_inner(const QiVec& x, const QiVec& y) {
    GaussianRational acc;
    for (std::size_t s = 0; s < x.size(); ++s) acc += x[s] * y[s].conj();
    return acc;
}

}  // namespace beta_detail

/// Orthogonal (unnormalized) basis of W (-) zW, exactly two vectors, ordered by
/// minimal nonzero slot (exponent-major, component-minor).
inline std::pair<ScaledVector, ScaledVector> complement_basis(const Lattice& w) {
    using namespace beta_detail;
    const long r = w.r();
    const std::size_t ws = wide_slots(r);
    const auto& rows = w.basis();

    // W /\ (exp <= r): window representatives plus z^r e1, z^r e2
    std::vector<QiVec> wwide;
    for (auto& row : rows) {
        QiVec v(ws, GaussianRational::zero());
        for (std::size_t s = 0; s < row.size(); ++s) v[s] = row[s];
        wwide.push_back(std::move(v));
    }
    for (int i = 0; i < 2; ++i) {
        QiVec v(ws, GaussianRational::zero());
        v[wide_index(r, i, r)] = GaussianRational::one();
        wwide.push_back(std::move(v));
    }

    // zW /\ (exp <= r): exact (untruncated) shifts of the window representatives
    std::vector<QiVec> zw;
    for (auto& row : rows) {
        QiVec v(ws, GaussianRational::zero());
        for (std::size_t s = 0; s < row.size(); ++s) v[s + 2] = row[s];
        zw.push_back(std::move(v));
    }

    // x = sum c_i wwide_i with <x, zw_j> = 0 for all j
    QiMatrix gram(zw.size(), wwide.size());
    for (std::size_t j = 0; j < zw.size(); ++j)
        for (std::size_t i = 0; i < wwide.size(); ++i)
            gram.at(j, i) = wide_inner(wwide[i], zw[j]);
    std::vector<QiVec> coeffs = nullspace(gram);
    if (coeffs.size() != 2)
        throw InvariantViolation("dim(W (-) zW) = " + std::to_string(coeffs.size()) +
                                 ", expected 2");

    std::vector<QiVec> vecs;
    for (auto& c : coeffs) {
        QiVec x(ws, GaussianRational::zero());
        for (std::size_t i = 0; i < wwide.size(); ++i) {
            if (c[i].is_zero()) continue;
            for (std::size_t s = 0; s < ws; ++s) x[s] += c[i] * wwide[i][s];
        }
        vecs.push_back(std::move(x));
    }

    // unnormalized Gram-Schmidt
    GaussianRational n1 = wide_inner(vecs[0], vecs[0]);
    GaussianRational proj = wide_inner(vecs[1], vecs[0]) / n1;
    for (std::size_t s = 0; s < ws; ++s) vecs[1][s] -= proj * vecs[0][s];

    auto min_slot = [](const QiVec& v) {
        for (std::size_t s = 0; s < v.size(); ++s)
            if (!v[s].is_zero()) return s;
        return v.size();
    };
    if (min_slot(vecs[1]) < min_slot(vecs[0])) std::swap(vecs[0], vecs[1]);

    return {ScaledVector::of(from_wide(vecs[0], r)), ScaledVector::of(from_wide(vecs[1], r))};
}

/// Assembles Ntilde from the complement basis. Columns are validated mutually
/// orthogonal as a Laurent identity (star(N) N diagonal constant) and N(1)
/// invertible.
inline ScaledLoop beta(const Lattice& w) {
    auto [c1, c2] = complement_basis(w);
    ScaledLoop s;
    s.nb.set_column(0, c1.vector);
    s.nb.set_column(1, c2.vector);
    s.norms_sq = {c1.norm_sq, c2.norm_sq};

    LaurentMatrix gramian = star(s.nb) * s.nb;
    LaurentMatrix expect =
        LaurentMatrix::diag(LaurentPoly::constant(GaussianRational(c1.norm_sq, Rational(0))),
                            LaurentPoly::constant(GaussianRational(c2.norm_sq, Rational(0))));
    if (gramian != expect)
        throw InvariantViolation("beta: columns are not pointwise orthogonal");
    if (s.nb.evaluate2(GaussianRational::one()).det().is_zero())
        throw InvariantViolation("beta: Ntilde(1) is singular");
    return s;
}

/// The loop Ntilde(z) Ntilde(1)^{-1} represented by a ScaledLoop, validated.
inline UnitaryLoop represented_loop(const ScaledLoop& s) {
    Mat2 at1 = s.nb.evaluate2(GaussianRational::one());
    if (at1.det().is_zero()) throw InvariantViolation("ScaledLoop: Ntilde(1) is singular");
    LaurentMatrix m = s.nb * LaurentMatrix::from_mat2(at1.inverse());
    long bound = 0;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            const LaurentPoly& p = m.at(i, j);
            if (p.is_zero()) continue;
            bound = std::max({bound, std::labs(*p.lo()), std::labs(*p.hi())});
        }
    GroupTag tag = det(m) == LaurentPoly::one() ? GroupTag::SU2 : GroupTag::U2;
    return make_unitary_loop(m, bound, tag);
}

/// Exact equality of the represented loop with f.
inline bool scaled_loop_equals(const ScaledLoop& s, const UnitaryLoop& f) {
    return represented_loop(s).matrix == f.matrix;
}

/// Exact evaluation of the represented loop at a unit-circle point of Q(i).
/// The result is a certified enclosure of radius zero; unitarity is exact.
inline Mat2 evaluate_scaled_loop(const ScaledLoop& s, const GaussianRational& point) {
    if (!(point.norm_sq() == Rational(1)))
        throw DomainError("evaluate_scaled_loop: point is not on the unit circle");
    Mat2 m = represented_loop(s).matrix.evaluate2(point);
    if (!(m * m.adjoint() == Mat2::identity()))
        throw InvariantViolation("evaluated matrix is not unitary");
    return m;
}

}  // namespace loopgrass
