#include <catch2/catch_amalgamated.hpp>

#include "loopgrass/beta.hpp"
#include "loopgrass/corpus.hpp"

using namespace loopgrass;

namespace {
GaussianRational gr(long n, long d = 1) { return GaussianRational(rat(n, d), rat(0)); }

Lattice fiber_lattice(const GaussianRational& a0) {
    VectorLaurent u(z_monomial(1), LaurentPoly::zero());
    VectorLaurent v(LaurentPoly::constant(a0), z_monomial(-1));
    return Lattice::from_cz_generators(1, {u, v});
}

ScaledLoop with_columns(const VectorLaurent& c1, const VectorLaurent& c2) {
    ScaledLoop s;
    s.nb.set_column(0, c1);
    s.nb.set_column(1, c2);
    s.norms_sq = {hermitian_inner(c1, c1).re, hermitian_inner(c2, c2).re};
    return s;
}
}  // namespace

TEST_CASE("complement_basis: lambda_1, K+, conjugate") {
    auto [c1, c2] = complement_basis(alpha(lambda_loop(1), 1));
    CHECK(c1.vector == VectorLaurent(LaurentPoly::zero(), z_monomial(-1)));
    CHECK(c2.vector == VectorLaurent(z_monomial(1), LaurentPoly::zero()));
    CHECK(c1.norm_sq == rat(1));
    CHECK(c2.norm_sq == rat(1));

    auto [k1, k2] = complement_basis(k_plus_lattice(0));
    CHECK(k1.vector == VectorLaurent(LaurentPoly::one(), LaurentPoly::zero()));
    CHECK(k2.vector == VectorLaurent(LaurentPoly::zero(), LaurentPoly::one()));

    // conjugate case: columns lie on the lines z^{-1} g e2 and z g e1
    ConstantUnitary g = pythagorean_unitaries()[0];
    Lattice w = alpha(conjugate_action(g, lambda_loop(1)), 1);
    auto [d1, d2] = complement_basis(w);
    VectorLaurent ge2;
    ge2.comps[0].add_term(-1, gr(4, 5));
    ge2.comps[1].add_term(-1, gr(3, 5));
    VectorLaurent ge1;
    ge1.comps[0].add_term(1, gr(3, 5));
    ge1.comps[1].add_term(1, gr(-4, 5));
    // same line: x scaled by <y,y> equals y scaled by <x,y>
    GaussianRational t1 = hermitian_inner(d1.vector, ge2);
    CHECK(d1.vector * hermitian_inner(ge2, ge2) == ge2 * t1);
    GaussianRational t2 = hermitian_inner(d2.vector, ge1);
    CHECK(d2.vector * hermitian_inner(ge1, ge1) == ge1 * t2);
}

TEST_CASE("beta represents the original loop") {
    CHECK(scaled_loop_equals(beta(alpha(lambda_loop(1), 1)), lambda_loop(1)));
    CHECK(scaled_loop_equals(beta(k_plus_lattice(0)), lambda_loop(0)));

    ConstantUnitary g = pythagorean_unitaries()[0];
    UnitaryLoop f = conjugate_action(g, lambda_loop(2));
    CHECK(scaled_loop_equals(beta(alpha(f, 2)), f));

    // distinct loops compare false
    UnitaryLoop inv = make_unitary_loop(LaurentMatrix::diag(z_monomial(-1), z_monomial(1)), 1,
                                        GroupTag::SU2);
    CHECK(!scaled_loop_equals(beta(alpha(lambda_loop(1), 1)), inv));
}

TEST_CASE("beta . alpha = id over a corpus sample") {
    Corpus c = gen_corpus(3, 2025, 8);
    for (auto& f : c.loops) CHECK(scaled_loop_equals(beta(alpha(f, f.degree_bound)), f));
}

TEST_CASE("alpha . beta = id: the columns generate the lattice over C[z]") {
    Corpus c = gen_corpus(2, 31, 5);
    std::vector<Lattice> lattices;
    for (auto& f : c.loops) lattices.push_back(alpha(f, f.degree_bound));
    lattices.push_back(fiber_lattice(gr(2)));
    lattices.push_back(fiber_lattice(GaussianRational(rat(1, 2), rat(-3))));
    for (auto& w : lattices) {
        ScaledLoop s = beta(w);
        CHECK(Lattice::from_cz_generators(w.r(), {s.nb.column(0), s.nb.column(1)}) == w);
    }
}

TEST_CASE("beta is equivariant") {
    Corpus c = gen_corpus(2, 8, 4);
    for (auto& f : c.loops) {
        Lattice w = alpha(f, f.degree_bound);
        for (auto& g : c.group_elements) {
            UnitaryLoop lhs = represented_loop(beta(act(g, w)));
            UnitaryLoop rhs = conjugate_action(g, represented_loop(beta(w)));
            CHECK(lhs.matrix == rhs.matrix);
        }
    }
}

TEST_CASE("represented loop is independent of the complement basis presentation") {
    Lattice w = alpha(conjugate_action(pythagorean_unitaries()[2], lambda_loop(2)), 2);
    ScaledLoop s = beta(w);
    UnitaryLoop f = represented_loop(s);

    // swap columns
    CHECK(scaled_loop_equals(with_columns(s.nb.column(1), s.nb.column(0)), f));
    // rescale columns by nonzero constants
    CHECK(scaled_loop_equals(with_columns(s.nb.column(0) * gr(2),
                                          s.nb.column(1) * GaussianRational(0, 3)),
                             f));
    // unitary mix when the norms agree (orthogonality is preserved then)
    if (s.norms_sq.first == s.norms_sq.second) {
        VectorLaurent m1 = s.nb.column(0) * gr(3, 5) + s.nb.column(1) * gr(-4, 5);
        VectorLaurent m2 = s.nb.column(0) * gr(4, 5) + s.nb.column(1) * gr(3, 5);
        CHECK(scaled_loop_equals(with_columns(m1, m2), f));
    }
}

TEST_CASE("determinant of beta outputs is constant; SU(2) inputs give det 1") {
    Corpus c = gen_corpus(2, 6, 4);
    for (auto& f : c.loops) {
        ScaledLoop s = beta(alpha(f, f.degree_bound));
        // norms cancel: det Ntilde(z) equals the constant det Ntilde(1)
        Mat2 at1 = s.nb.evaluate2(GaussianRational::one());
        CHECK(det(s.nb) == LaurentPoly::constant(at1.det()));
        UnitaryLoop rep = represented_loop(s);
        CHECK(rep.group_tag == GroupTag::SU2);
        CHECK(det(rep.matrix) == LaurentPoly::one());
    }
}

TEST_CASE("evaluate_scaled_loop at exact circle points") {
    ScaledLoop s = beta(alpha(lambda_loop(1), 1));
    CHECK(evaluate_scaled_loop(s, GaussianRational(1)) == Mat2::identity());
    CHECK(evaluate_scaled_loop(s, GaussianRational(-1, 0)) == Mat2{gr(-1), gr(0), gr(0), gr(-1)});
    CHECK(evaluate_scaled_loop(s, GaussianRational::unit_i()) ==
          Mat2{GaussianRational(0, 1), gr(0), gr(0), GaussianRational(0, -1)});
    CHECK_THROWS_AS(evaluate_scaled_loop(s, gr(2)), DomainError);
    // Pythagorean circle point (3+4i)/5
    Mat2 m = evaluate_scaled_loop(s, GaussianRational(rat(3, 5), rat(4, 5)));
    CHECK(m.at(0, 0) == GaussianRational(rat(3, 5), rat(4, 5)));
    CHECK(m.at(1, 1) == GaussianRational(rat(3, 5), rat(-4, 5)));
}

TEST_CASE("scaled vector invariants") {
    CHECK_THROWS_AS(ScaledVector::of(VectorLaurent()), InvariantViolation);
}
