#pragma once

/// Points of P^1 over Q(i) and exact unit-basis completions.

#include <optional>
#include <utility>

#include "loopgrass/errors.hpp"
#include "loopgrass/laurent.hpp"
#include "loopgrass/rational.hpp"

namespace loopgrass {

/// Homogeneous pair [a : b], canonicalized so the leading nonzero coordinate is 1.
struct ProjectivePoint {
    GaussianRational a, b;

    ProjectivePoint() : a(GaussianRational::one()), b(GaussianRational::zero()) {}
    ProjectivePoint(GaussianRational x, GaussianRational y) : a(std::move(x)), b(std::move(y)) {
        if (a.is_zero() && b.is_zero()) throw DomainError("projective point [0 : 0]");
        GaussianRational lead = a.is_zero() ? b : a;
        GaussianRational inv = lead.inverse();
        a *= inv;
        b *= inv;
    }

    bool operator==(const ProjectivePoint& o) const { return a == o.a && b == o.b; }
    bool operator!=(const ProjectivePoint& o) const { return !(*this == o); }

    ProjectivePoint acted_by(const Mat2& g) const {
        auto [x, y] = g.apply(a, b);
        return ProjectivePoint(x, y);
    }

    std::string str() const { return "[" + a.str() + " : " + b.str() + "]"; }
};

/// An exact orthonormal su(2)-adapted frame: v spans the requested line, u is
/// orthogonal to it, and the matrix [u v] (columns) lies in SU(2).
struct UnitFrame {
    GaussianRational u1, u2;  // u = (u1, u2)
    GaussianRational v1, v2;  // v = (v1, v2)

    Mat2 as_matrix() const { return {u1, v1, u2, v2}; }  // columns u, v
};

/// Exact unit representative and completion for a line, when |a|^2 + |b|^2 is a
/// rational perfect square; nullopt otherwise.
inline std::optional<UnitFrame> unit_completion(const ProjectivePoint& x) {
    Rational s = x.a.norm_sq() + x.b.norm_sq();
    auto sq = rational_sqrt(s);
    if (!sq) return std::nullopt;
    GaussianRational inv(1 / *sq, Rational(0));
    UnitFrame f;
    f.v1 = x.a * inv;
    f.v2 = x.b * inv;
    f.u1 = f.v2.conj();
    f.u2 = -f.v1.conj();
    return f;
}

inline UnitFrame require_unit_completion(const ProjectivePoint& x) {
    auto f = unit_completion(x);
    if (!f)
        throw RepresentabilityError("line " + x.str() +
                                    " has no exact Q(i) unit representative");
    return *f;
}

}  // namespace loopgrass
