#pragma once

/**
 * @file loops.hpp
 * @brief Polynomial unitary loops: membership checking for the degree-r
 *        families in U(2)/SU(2), the pointwise conjugation action, and the
 *        loop-side index.
 *
 * A loop is valid at bound r when f(1) = I, f(z) f(z)^* = I holds as an exact
 * Laurent identity (this is the precise content of unitarity on the circle for
 * Laurent-polynomial entries), the exponent support lies in [-r, r], and, for
 * the SU(2) tag, det f == 1 identically.
 */

#include <string>
#include <vector>

#include "loopgrass/circle.hpp"
#include "loopgrass/errors.hpp"
#include "loopgrass/laurent.hpp"
#include "loopgrass/projective.hpp"

namespace loopgrass {

enum class GroupTag { U2, SU2 };

inline std::string to_string(GroupTag t) { return t == GroupTag::U2 ? "U2" : "SU2"; }

/// Constant element of U(2) (det 1 when used as an SU(2) action element),
/// validated exactly at construction.
struct ConstantUnitary {
    Mat2 m;

    explicit ConstantUnitary(Mat2 g, bool require_su2 = true) : m(std::move(g)) {
        if (!(m * m.adjoint() == Mat2::identity()))
            throw DomainError("ConstantUnitary: g g* != I");
        if (require_su2 && !(m.det() == GaussianRational::one()))
            throw DomainError("ConstantUnitary: det g != 1");
    }

    static ConstantUnitary identity() { return ConstantUnitary(Mat2::identity()); }
    static ConstantUnitary from_frame(const UnitFrame& f) { return ConstantUnitary(f.as_matrix()); }

    ConstantUnitary operator*(const ConstantUnitary& o) const { return ConstantUnitary(m * o.m); }
    ConstantUnitary inverse() const { return ConstantUnitary(m.adjoint()); }
    bool operator==(const ConstantUnitary& o) const { return m == o.m; }
};

struct UnitaryLoop {
    LaurentMatrix matrix{2};
    long degree_bound = 0;  // r >= 0
    GroupTag group_tag = GroupTag::SU2;

    bool operator==(const UnitaryLoop& o) const {
        return matrix == o.matrix && degree_bound == o.degree_bound && group_tag == o.group_tag;
    }
};

struct LoopCheckReport {
    bool valid = false;
    std::vector<std::string> violations;
};

/// Validates every invariant separately and reports all failures.
inline LoopCheckReport check_poly_loop(const LaurentMatrix& m, long r, GroupTag tag) {
    LoopCheckReport rep;
    if (m.n() != 2) {
        rep.violations.push_back("matrix dimension is not 2");
        return rep;
    }
    if (r < 0) rep.violations.push_back("degree bound r is negative");
    if (!(m.evaluate2(GaussianRational::one()) == Mat2::identity()))
        rep.violations.push_back("basepoint: f(1) != identity");
    if (!(laurent_mul(m, star(m)) == LaurentMatrix::identity(2)))
        rep.violations.push_back("unitarity: f(z) star(f)(z) != identity");
    if (!m.support_within(-r, r))
        rep.violations.push_back("support: exponents outside [-" + std::to_string(r) + ", " +
                                 std::to_string(r) + "]");
    if (tag == GroupTag::SU2 && !(det(m) == LaurentPoly::one()))
        rep.violations.push_back("determinant: det f != 1 (required for SU2)");
    rep.valid = rep.violations.empty();
    return rep;
}

inline UnitaryLoop make_unitary_loop(const LaurentMatrix& m, long r, GroupTag tag) {
    LoopCheckReport rep = check_poly_loop(m, r, tag);
    if (!rep.valid) {
        std::string msg = "invalid loop:";
        for (auto& v : rep.violations) msg += " [" + v + "]";
        throw DomainError(msg);
    }
    return UnitaryLoop{m, r, tag};
}

/// z -> g f(z) g^{-1}, revalidated; the degree bound is unchanged.
inline UnitaryLoop conjugate_action(const ConstantUnitary& g, const UnitaryLoop& f) {
    LaurentMatrix gm = LaurentMatrix::from_mat2(g.m);
    LaurentMatrix gi = LaurentMatrix::from_mat2(g.m.adjoint());
    return make_unitary_loop(laurent_mul(laurent_mul(gm, f.matrix), gi), f.degree_bound,
                             f.group_tag);
}

/// Pointwise product; lands in the degree-(r1+r2) family.
inline UnitaryLoop loop_product(const UnitaryLoop& f, const UnitaryLoop& g) {
    GroupTag tag =
        (f.group_tag == GroupTag::SU2 && g.group_tag == GroupTag::SU2) ? GroupTag::SU2 : GroupTag::U2;
    return make_unitary_loop(laurent_mul(f.matrix, g.matrix), f.degree_bound + g.degree_bound, tag);
}

/// diag(z^r, z^{-r}) in the standard basis.
inline UnitaryLoop lambda_loop(long r) {
    if (r < 0) throw DomainError("lambda_loop: r >= 0 required");
    return make_unitary_loop(LaurentMatrix::diag(z_monomial(r), z_monomial(-r)), r, GroupTag::SU2);
}

/// Loop-side Fredholm index, -2 * winding(det f).
inline long index_of_loop(const UnitaryLoop& f) {
    return -2 * winding_number(det(f.matrix)).winding;
}

/// g lambda_r g^{-1} where g rotates e2 onto the given line. The caller may
/// supply g; otherwise it is derived, requiring an exact unit representative.
inline UnitaryLoop generator_loop(long r, const ProjectivePoint& line,
                                  const std::optional<ConstantUnitary>& g_opt = std::nullopt) {
    if (r < 0) throw DomainError("generator_loop: r >= 0 required");
    if (r == 0) return make_unitary_loop(LaurentMatrix::identity(2), 0, GroupTag::SU2);
    ConstantUnitary g = g_opt ? *g_opt : ConstantUnitary::from_frame(require_unit_completion(line));
    return conjugate_action(g, lambda_loop(r));
}

}  // namespace loopgrass
