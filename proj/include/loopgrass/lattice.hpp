#pragma once

/**
 * @file lattice.hpp
 * @brief Bounded z-stable lattices in the truncated model of K = L^2(S^1) (x) C^2.
 *
 * A lattice W with z^r K+ <= W <= z^{-r} K+ is held through its image in the
 * 4r-dimensional window z^{-r}K+ / z^r K+. Window slots are indexed
 * exponent-major, component-minor: slot(e, i) = 2(e + r) + i for e in [-r, r-1]
 * and i in {0, 1}. The basis is the unique reduced row echelon basis of the
 * window image, so Lattice equality is structural.
 *
 * Everything downstream (index, rank, kernel structure, pi, filtration level,
 * Thom coordinates, the truncated multiplication-operator oracle) is exact
 * window linear algebra. Correctness of the windowing is part of each
 * operation's contract; the key facts used are
 *   - W /\ K-  lives in exponents [-r, -1], hence inside the window;
 *   - z^r K+ <= W always, so the window quotient determines W.
 */

#include <cstdlib>
#include <string>
#include <vector>

#include "loopgrass/errors.hpp"
#include "loopgrass/linalg.hpp"
#include "loopgrass/loops.hpp"
#include "loopgrass/projective.hpp"

namespace loopgrass {

/// Window size cap in slots; override with LOOPGRASS_MAX_WINDOW.
inline long window_slot_cap() {
    static long cap = [] {
        if (const char* env = std::getenv("LOOPGRASS_MAX_WINDOW")) {
            long v = std::atol(env);
            if (v > 0) return v;
        }
        return 64L;
    }();
    return cap;
}

namespace window {

inline std::size_t slots(long r) { return static_cast<std::size_t>(4 * r); }
inline std::size_t index(long e, int comp, long r) {
    return static_cast<std::size_t>(2 * (e + r) + comp);
}
inline long exponent_of(std::size_t slot, long r) { return static_cast<long>(slot / 2) - r; }
inline int component_of(std::size_t slot) { return static_cast<int>(slot % 2); }

inline void check_cap(long r) {
    if (4 * r > window_slot_cap())
        throw DomainError("window of " + std::to_string(4 * r) + " slots exceeds cap " +
                          std::to_string(window_slot_cap()) +
                          " (set LOOPGRASS_MAX_WINDOW to raise)");
}

/// Truncate a Laurent vector into the window; exponents >= r vanish, nonzero
/// coefficients below -r are rejected.
inline QiVec to_window(const VectorLaurent& v, long r) {
    if (v.n() != 2) throw std::invalid_argument("window vectors are C^2 valued");
    QiVec w(slots(r), GaussianRational::zero());
    for (int i = 0; i < 2; ++i) {
        for (auto& [e, c] : v.comps[i].terms()) {
            if (e >= r) continue;
            if (e < -r) throw DomainError("generator has exponent below -r");
            w[index(e, i, r)] = c;
        }
    }
    return w;
}

inline VectorLaurent from_window(const QiVec& w, long r) {
    VectorLaurent v;
    for (std::size_t s = 0; s < w.size(); ++s)
        if (!w[s].is_zero()) v.comps[component_of(s)].add_term(exponent_of(s, r), w[s]);
    return v;
}

/// Multiplication by z inside the window (top slots truncate away).
inline QiVec shift(const QiVec& w, long /*r*/) {
    QiVec out(w.size(), GaussianRational::zero());
    for (std::size_t s = 0; s < w.size(); ++s) {
        if (w[s].is_zero()) continue;
        std::size_t t = s + 2;  // exponent + 1
        if (t < w.size()) out[t] = w[s];
    }
    return out;
}

/// Componentwise action of a constant matrix on every exponent level.
inline QiVec act(const Mat2& g, const QiVec& w) {
    QiVec out(w.size(), GaussianRational::zero());
    for (std::size_t s = 0; s + 1 < w.size(); s += 2) {
        auto [x, y] = g.apply(w[s], w[s + 1]);
        out[s] = x;
        out[s + 1] = y;
    }
    return out;
}

}  // namespace window

/// Validated index-0 bounded lattice: window span of dimension exactly 2r,
/// closed under the (truncating) shift.
class Lattice {
public:
    long r() const { return r_; }
    const RowSpace& space() const { return space_; }
    const std::vector<QiVec>& basis() const { return space_.rows(); }

    bool operator==(const Lattice& o) const { return r_ == o.r_ && space_ == o.space_; }
    bool operator!=(const Lattice& o) const { return !(*this == o); }

    bool contains(const QiVec& v) const { return space_.contains(v); }
    bool contains(const VectorLaurent& v) const {
        return space_.contains(window::to_window(v, r_));
    }

    /// Builds the window image of the C[z]-span of the generators plus z^r K+.
    static Lattice from_cz_generators(long r, const std::vector<VectorLaurent>& gens) {
        RowSpace rs = span_of_shifts(r, gens);
        return Lattice(r, std::move(rs), /*validate_stability=*/false);
    }

    /// Validates untrusted rows (e.g. parsed from JSON) as a lattice basis.
    static Lattice from_window_rows(long r, const std::vector<QiVec>& rows) {
        window::check_cap(r);
        RowSpace rs(window::slots(r));
        for (auto& row : rows) rs.insert(row);
        return Lattice(r, std::move(rs), /*validate_stability=*/true);
    }

private:
    friend struct RawSpan;

    Lattice(long r, RowSpace rs, bool validate_stability) : r_(r), space_(std::move(rs)) {
        if (r_ < 0) throw DomainError("lattice window bound must be >= 0");
        if (space_.dim() != static_cast<std::size_t>(2 * r_))
            throw DomainError("index-0 failure: window span has dimension " +
                              std::to_string(space_.dim()) + ", expected " +
                              std::to_string(2 * r_));
        if (validate_stability) {
            for (auto& row : space_.rows())
                if (!space_.contains(window::shift(row, r_)))
                    throw DomainError("window span is not z-stable");
        }
    }

    static RowSpace span_of_shifts(long r, const std::vector<VectorLaurent>& gens) {
        window::check_cap(r);
        RowSpace rs(window::slots(r));
        for (auto& g : gens) {
            QiVec v = window::to_window(g, r);
            for (long k = 0; k <= 2 * r; ++k) {
                if (is_zero_vec(v)) break;
                rs.insert(v);
                v = window::shift(v, r);
            }
        }
        return rs;
    }

    long r_;
    RowSpace space_;
};

/// Diagnostic companion to Lattice: the same windowed span without the
/// index-0 dimension requirement, for analyzing arbitrary U(2) loops.
struct RawSpan {
    long r = 0;
    RowSpace space{0};

    static RawSpan from_cz_generators(long r, const std::vector<VectorLaurent>& gens) {
        RawSpan s;
        s.r = r;
        s.space = Lattice::span_of_shifts(r, gens);
        return s;
    }
};

inline Lattice k_plus_lattice(long r) {
    VectorLaurent e1(LaurentPoly::one(), LaurentPoly::zero());
    VectorLaurent e2(LaurentPoly::zero(), LaurentPoly::one());
    return Lattice::from_cz_generators(r, {e1, e2});
}

/// alpha: f |-> W_f, the window span of {z^k f e_i : k >= 0}.
/// Fails (index-0 check) when the span dimension is not 2r.
inline Lattice alpha(const UnitaryLoop& f, long r) {
    if (f.degree_bound > r)
        throw DomainError("alpha: loop degree bound exceeds window bound r");
    return Lattice::from_cz_generators(r, {f.matrix.column(0), f.matrix.column(1)});
}

inline RawSpan raw_alpha(const UnitaryLoop& f, long r) {
    if (f.degree_bound > r)
        throw DomainError("raw_alpha: loop degree bound exceeds window bound r");
    return RawSpan::from_cz_generators(r, {f.matrix.column(0), f.matrix.column(1)});
}

namespace lattice_detail {

/// Canonical basis of the intersection with the negative-exponent slots
/// (W /\ K- inside the window).
inline RowSpace negative_part(const RowSpace& space, long r) {
    const std::size_t neg = static_cast<std::size_t>(2 * r);  // slots 0 .. 2r-1
    const auto& rows = space.rows();
    QiMatrix pos(rows.size(), space.cols() - neg);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = neg; j < space.cols(); ++j) pos.at(i, j - neg) = rows[i][j];
    // combinations c with c . rows supported on negative slots: solve pos^T c = 0
    QiMatrix post(pos.cols, pos.rows);
    for (std::size_t i = 0; i < pos.rows; ++i)
        for (std::size_t j = 0; j < pos.cols; ++j) post.at(j, i) = pos.at(i, j);
    RowSpace out(space.cols());
    for (auto& c : nullspace(post)) {
        QiVec v(space.cols(), GaussianRational::zero());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (c[i].is_zero()) continue;
            for (std::size_t j = 0; j < space.cols(); ++j) v[j] += c[i] * rows[i][j];
        }
        out.insert(std::move(v));
    }
    return out;
}

/// Element of the given span whose top nonzero slot is minimal, i.e. of minimal
/// degree under the exponent-major slot order. Requires dim > 0.
inline QiVec min_degree_element(const RowSpace& space) {
    const std::size_t n = space.cols();
    RowSpace rev(n);
    for (auto& row : space.rows()) {
        QiVec v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = row[n - 1 - j];
        rev.insert(std::move(v));
    }
    const QiVec& last = rev.rows().back();  // largest reversed pivot = smallest top slot
    QiVec out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = last[n - 1 - j];
    return out;
}

inline std::optional<long> top_exponent(const QiVec& v, long r) {
    for (std::size_t s = v.size(); s-- > 0;)
        if (!v[s].is_zero()) return window::exponent_of(s, r);
    return std::nullopt;
}

inline std::optional<long> bottom_exponent(const QiVec& v, long r) {
    for (std::size_t s = 0; s < v.size(); ++s)
        if (!v[s].is_zero()) return window::exponent_of(s, r);
    return std::nullopt;
}

}  // namespace lattice_detail

/// Ind(W) = dim(W /\ K-) - dim(K+ window / P+ W), computed in the window.
/// Zero for every validated Lattice; the interesting values come from RawSpan.
inline long windowed_index(const RowSpace& space, long r) {
    long d_neg = static_cast<long>(lattice_detail::negative_part(space, r).dim());
    long proj_rank = static_cast<long>(space.dim()) - d_neg;
    long coker = 2 * r - proj_rank;
    return d_neg - coker;
}

inline long index_of_lattice(const Lattice& w) { return windowed_index(w.space(), w.r()); }
inline long index_of_raw_span(const RawSpan& w) { return windowed_index(w.space, w.r); }

/// r(W) = dim(W /\ K-), the kernel dimension of the projection to K+.
inline long rank(const Lattice& w) {
    return static_cast<long>(lattice_detail::negative_part(w.space(), w.r()).dim());
}

/// Basis {x, zx, ..., z^{rank-1} x} of W /\ K- with deg(x) = -rank.
inline std::vector<VectorLaurent> kernel_basis(const Lattice& w) {
    RowSpace neg = lattice_detail::negative_part(w.space(), w.r());
    if (neg.dim() == 0) throw DomainError("kernel_basis: rank 0");
    QiVec x = lattice_detail::min_degree_element(neg);
    auto deg = lattice_detail::top_exponent(x, w.r());
    if (!deg || *deg != -static_cast<long>(neg.dim()))
        throw InvariantViolation("minimal degree does not equal -rank");
    std::vector<VectorLaurent> out;
    RowSpace span_check(neg.cols());
    QiVec v = x;
    for (std::size_t j = 0; j < neg.dim(); ++j) {
        if (!neg.contains(v)) throw InvariantViolation("kernel shift left W /\\ K-");
        span_check.insert(v);
        out.push_back(window::from_window(v, w.r()));
        v = window::shift(v, w.r());
    }
    if (span_check.dim() != neg.dim())
        throw InvariantViolation("kernel shifts do not span W /\\ K-");
    return out;
}

/// pi(W): the line spanned by the z^{-1} coefficients of degree -1 elements,
/// realized as the z^{-1} coefficient pair of z^{rank-1} x.
inline ProjectivePoint pi(const Lattice& w) {
    RowSpace neg = lattice_detail::negative_part(w.space(), w.r());
    if (neg.dim() == 0) throw DomainError("pi: rank 0 lattice");
    QiVec x = lattice_detail::min_degree_element(neg);
    for (std::size_t j = 1; j < neg.dim(); ++j) x = window::shift(x, w.r());
    return ProjectivePoint(x[window::index(-1, 0, w.r())], x[window::index(-1, 1, w.r())]);
}

/// Homomorphism lambda_W: rank r(W) plus an exact orthonormal (u, v)-frame
/// adapted to pi(W); trivial at rank 0.
struct HomomorphismData {
    long r = 0;
    std::optional<UnitFrame> frame;  // absent iff r == 0

    static HomomorphismData trivial() { return {}; }
    static HomomorphismData from_line(long r, const ProjectivePoint& line) {
        if (r <= 0) throw DomainError("HomomorphismData::from_line: r > 0 required");
        return {r, require_unit_completion(line)};
    }
    static HomomorphismData with_frame(long r, UnitFrame f) {
        if (r <= 0) throw DomainError("HomomorphismData::with_frame: r > 0 required");
        return {r, std::move(f)};
    }

    /// lambda(z) = diag(z^r, z^{-r}) in the (u, v) basis, as a loop matrix.
    LaurentMatrix loop_matrix() const {
        if (r == 0) return LaurentMatrix::identity(2);
        Mat2 g = frame->as_matrix();
        return laurent_mul(laurent_mul(LaurentMatrix::from_mat2(g),
                                       LaurentMatrix::diag(z_monomial(r), z_monomial(-r))),
                           LaurentMatrix::from_mat2(g.adjoint()));
    }
};

inline HomomorphismData lambda_of(const Lattice& w) {
    long rk = rank(w);
    if (rk == 0) return HomomorphismData::trivial();
    return HomomorphismData::from_line(rk, pi(w));
}

/// Minimal s <= r with z^s K+ <= W <= z^{-s} K+, both inclusions tested exactly.
inline long filtration_level(const Lattice& w) {
    long r = w.r();
    long s1 = 0;
    for (auto& row : w.basis()) {
        auto bot = lattice_detail::bottom_exponent(row, r);
        if (bot && -*bot > s1) s1 = -*bot;
    }
    long s2 = r;
    for (long k = r - 1; k >= 0; --k) {
        bool both = true;
        for (int i = 0; i < 2 && both; ++i) {
            QiVec e(window::slots(r), GaussianRational::zero());
            e[window::index(k, i, r)] = GaussianRational::one();
            both = w.contains(e);
        }
        if (!both) break;
        s2 = k;
    }
    long lvl = s1 > s2 ? s1 : s2;
    return lvl;
}

/// Constant action on the window, re-echelonized.
inline Lattice act(const ConstantUnitary& g, const Lattice& w) {
    std::vector<QiVec> rows;
    rows.reserve(w.basis().size());
    for (auto& row : w.basis()) rows.push_back(window::act(g.m, row));
    return Lattice::from_window_rows(w.r(), rows);
}

/// Re-embeds the same lattice in a larger window.
inline Lattice widen(const Lattice& w, long big_r) {
    if (big_r < w.r()) throw DomainError("widen: target window smaller than current");
    if (big_r == w.r()) return w;
    std::vector<VectorLaurent> gens;
    for (auto& row : w.basis()) gens.push_back(window::from_window(row, w.r()));
    gens.emplace_back(z_monomial(w.r()), LaurentPoly::zero());
    gens.emplace_back(LaurentPoly::zero(), z_monomial(w.r()));
    return Lattice::from_cz_generators(big_r, gens);
}

// ---------------------------------------------------------------------------
// Thom coordinates of F_{2r} / F_{2r-2}
// ---------------------------------------------------------------------------

/// Basepoint, or the projectivized data (u0; u1, ..., u_{2r-1}) with u_j _|_ u0,
/// canonicalized so the leading nonzero coordinate of u0 is 1.
struct ThomPoint {
    bool basepoint = true;
    std::pair<GaussianRational, GaussianRational> u0;
    std::vector<std::pair<GaussianRational, GaussianRational>> fiber;  // size 2r-1

    static ThomPoint base() { return {}; }

    static ThomPoint of(std::pair<GaussianRational, GaussianRational> u0_in,
                        std::vector<std::pair<GaussianRational, GaussianRational>> fiber_in) {
        ThomPoint p;
        p.basepoint = false;
        p.u0 = std::move(u0_in);
        p.fiber = std::move(fiber_in);
        if (p.u0.first.is_zero() && p.u0.second.is_zero())
            throw DomainError("ThomPoint: u0 must be nonzero");
        GaussianRational lead = p.u0.first.is_zero() ? p.u0.second : p.u0.first;
        GaussianRational inv = lead.inverse();
        p.u0.first *= inv;
        p.u0.second *= inv;
        for (auto& [a, b] : p.fiber) {
            a *= inv;
            b *= inv;
        }
        for (auto& [a, b] : p.fiber)
            if (!hermitian_pair(a, b, p.u0.first, p.u0.second).is_zero())
                throw DomainError("ThomPoint: fiber entry not orthogonal to u0");
        return p;
    }

    bool zero_fiber() const {
        for (auto& [a, b] : fiber)
            if (!a.is_zero() || !b.is_zero()) return false;
        return true;
    }

    ThomPoint acted_by(const Mat2& g) const {
        if (basepoint) return base();
        auto u = g.apply(u0.first, u0.second);
        std::vector<std::pair<GaussianRational, GaussianRational>> f;
        f.reserve(fiber.size());
        for (auto& [a, b] : fiber) f.push_back(g.apply(a, b));
        return of(u, f);
    }

    bool operator==(const ThomPoint& o) const {
        if (basepoint != o.basepoint) return false;
        if (basepoint) return true;
        return u0 == o.u0 && fiber == o.fiber;
    }
    bool operator!=(const ThomPoint& o) const { return !(*this == o); }
};

/// Thom coordinates of w in F_{2r}/F_{2r-2}: Basepoint below level r; otherwise
/// the unique-up-to-scalar element w = z^{-r}u0 + ... + z^{r-1}u_{2r-1} with
/// u0 != 0 and u_j _|_ u0, found by an exact linear solve. Existence and
/// uniqueness are verified, not assumed.
inline ThomPoint thom_coords(const Lattice& w, long r) {
    if (w.r() != r)
        throw DomainError("thom_coords: lattice window bound differs from r (widen first)");
    if (filtration_level(w) <= r - 1) return ThomPoint::base();
    const auto& rows = w.basis();
    const std::size_t dim = rows.size();

    // slot-(-r) evaluation map; its image must be exactly one-dimensional
    RowSpace image(2);
    for (auto& row : rows)
        image.insert({row[window::index(-r, 0, r)], row[window::index(-r, 1, r)]});
    if (image.dim() != 1)
        throw InvariantViolation("slot-(-r) image has dimension " + std::to_string(image.dim()) +
                                 ", expected 1");
    GaussianRational u0a = image.rows()[0][0], u0b = image.rows()[0][1];

    // x = sum c_i row_i with slot(-r) coefficients = u0 and <slot_e(x), u0> = 0 for e > -r
    const std::size_t eqs = 2 + static_cast<std::size_t>(2 * r - 1);
    QiMatrix a(eqs, dim);
    QiVec b(eqs, GaussianRational::zero());
    for (std::size_t i = 0; i < dim; ++i) {
        a.at(0, i) = rows[i][window::index(-r, 0, r)];
        a.at(1, i) = rows[i][window::index(-r, 1, r)];
    }
    b[0] = u0a;
    b[1] = u0b;
    for (long e = -r + 1; e <= r - 1; ++e) {
        std::size_t row_idx = static_cast<std::size_t>(e + r + 1);
        for (std::size_t i = 0; i < dim; ++i)
            a.at(row_idx, i) = hermitian_pair(rows[i][window::index(e, 0, r)],
                                              rows[i][window::index(e, 1, r)], u0a, u0b);
    }
    LinearSolution sol = solve_linear(a, b);
    if (!sol.consistent) throw InvariantViolation("thom_coords: no orthogonalized element exists");
    if (!sol.kernel.empty())
        throw InvariantViolation("thom_coords: orthogonalized element is not unique");

    QiVec x(window::slots(r), GaussianRational::zero());
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < x.size(); ++j) x[j] += sol.particular[i] * rows[i][j];
    std::vector<std::pair<GaussianRational, GaussianRational>> fiber;
    for (long e = -r + 1; e <= r - 1; ++e)
        fiber.emplace_back(x[window::index(e, 0, r)], x[window::index(e, 1, r)]);
    return ThomPoint::of({u0a, u0b}, fiber);
}

/// Reconstruction: the lattice C[z] w + z^r K+ from non-basepoint coordinates.
inline Lattice lattice_from_thom(const ThomPoint& p, long r) {
    if (p.basepoint) throw DomainError("lattice_from_thom: basepoint is not a single lattice");
    if (static_cast<long>(p.fiber.size()) != 2 * r - 1)
        throw DomainError("lattice_from_thom: fiber length must be 2r-1");
    VectorLaurent x;
    x.comps[0].add_term(-r, p.u0.first);
    x.comps[1].add_term(-r, p.u0.second);
    for (std::size_t j = 0; j < p.fiber.size(); ++j) {
        x.comps[0].add_term(-r + 1 + static_cast<long>(j), p.fiber[j].first);
        x.comps[1].add_term(-r + 1 + static_cast<long>(j), p.fiber[j].second);
    }
    std::vector<VectorLaurent> gens{x};
    gens.emplace_back(z_monomial(r), LaurentPoly::zero());
    gens.emplace_back(LaurentPoly::zero(), z_monomial(r));
    return Lattice::from_cz_generators(r, gens);
}

// ---------------------------------------------------------------------------
// Truncated multiplication-operator oracle
// ---------------------------------------------------------------------------

/// Finite compression of M_f to span{z^k e_i : 0 <= k <= N}, plus stabilized
/// kernel/cokernel dimensions.
///
/// Convention (documented): the square compression has ker - coker = 0 by
/// rank-nullity, so the honest Fredholm data comes from the rectangular map
/// h |-> coefficients of f h on exponents [0, N + deg f], whose kernel is
/// exactly Ker (M_f)++ once N >= deg f; the cokernel is the kernel of the same
/// construction for star(f) (the adjoint). Both are constant in N from there,
/// which the stability check at N and N+1 exercises.
struct TruncatedOperator {
    long N = 0;
    UnitaryLoop f;
    QiMatrix compression;  // square, domain -> same codomain

    static TruncatedOperator of(const UnitaryLoop& loop, long n) {
        if (n < loop.degree_bound)
            throw DomainError("truncated_operator: N below the loop degree bound");
        TruncatedOperator t;
        t.N = n;
        t.f = loop;
        const std::size_t dim = static_cast<std::size_t>(2 * (n + 1));
        t.compression = QiMatrix(dim, dim);
        for (long k = 0; k <= n; ++k)
            for (int i = 0; i < 2; ++i)
                for (long kp = 0; kp <= n; ++kp)
                    for (int ip = 0; ip < 2; ++ip)
                        t.compression.at(static_cast<std::size_t>(2 * kp + ip),
                                         static_cast<std::size_t>(2 * k + i)) =
                            loop.matrix.at(ip, i).coeff(kp - k);
        return t;
    }

    long kernel_dim() const { return plus_kernel(f.matrix, N); }
    long cokernel_dim() const { return plus_kernel(star(f.matrix), N); }
    long index() const { return kernel_dim() - cokernel_dim(); }

private:
    /// dim { h polynomial of degree <= N : g h has no coefficients at exponents >= 0 }.
    static long plus_kernel(const LaurentMatrix& g, long n) {
        long d = 0;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                auto hi = g.at(i, j).hi();
                if (hi && *hi > d) d = *hi;
            }
        const std::size_t cols = static_cast<std::size_t>(2 * (n + 1));
        const std::size_t rows = static_cast<std::size_t>(2 * (n + d + 1));
        QiMatrix m(rows, cols);
        for (long k = 0; k <= n; ++k)
            for (int i = 0; i < 2; ++i)
                for (long kp = 0; kp <= n + d; ++kp)
                    for (int ip = 0; ip < 2; ++ip)
                        m.at(static_cast<std::size_t>(2 * kp + ip),
                             static_cast<std::size_t>(2 * k + i)) = g.at(ip, i).coeff(kp - k);
        return static_cast<long>(cols - ::loopgrass::rank(std::move(m)));
    }
};

inline TruncatedOperator truncated_operator(const UnitaryLoop& f, long n) {
    return TruncatedOperator::of(f, n);
}

}  // namespace loopgrass
