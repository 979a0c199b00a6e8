#include <catch2/catch_amalgamated.hpp>

#include "loopgrass/corpus.hpp"
#include "loopgrass/loops.hpp"
#include "support/gen.hpp"

using namespace loopgrass;

namespace {
GaussianRational gr(long n, long d = 1) { return GaussianRational(rat(n, d), rat(0)); }

Mat2 pyth_g() {
    return Mat2{gr(3, 5), gr(4, 5), gr(-4, 5), gr(3, 5)};
}
}  // namespace

TEST_CASE("check_poly_loop: lambda_1, diag(z,1), conjugates") {
    CHECK(check_poly_loop(LaurentMatrix::diag(z_monomial(1), z_monomial(-1)), 1, GroupTag::SU2)
              .valid);

    LaurentMatrix dz1 = LaurentMatrix::diag(z_monomial(1), LaurentPoly::one());
    CHECK(check_poly_loop(dz1, 1, GroupTag::U2).valid);
    LoopCheckReport rep = check_poly_loop(dz1, 1, GroupTag::SU2);
    CHECK(!rep.valid);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0].find("determinant") != std::string::npos);

    ConstantUnitary g(pyth_g());
    UnitaryLoop f = conjugate_action(g, lambda_loop(1));
    CHECK(check_poly_loop(f.matrix, 1, GroupTag::SU2).valid);
    CHECK(f.matrix.support_within(-1, 1));
    CHECK(!f.matrix.support_within(0, 1));
}

TEST_CASE("check_poly_loop reports every violated invariant") {
    // diag(z^2, 1) at r = 1 with the SU2 tag: support and determinant both fail
    LaurentMatrix m = LaurentMatrix::diag(z_monomial(2), LaurentPoly::one());
    LoopCheckReport rep = check_poly_loop(m, 1, GroupTag::SU2);
    CHECK(!rep.valid);
    CHECK(rep.violations.size() == 2);

    CHECK_THROWS_AS(make_unitary_loop(m, 1, GroupTag::SU2), DomainError);
}

TEST_CASE("conjugate_action: identity, action law, exact projections") {
    UnitaryLoop l1 = lambda_loop(1);
    CHECK(conjugate_action(ConstantUnitary::identity(), l1) == l1);

    auto pool = pythagorean_unitaries();
    ConstantUnitary g = pool[0], h = pool[2];
    CHECK(conjugate_action(g * h, l1) == conjugate_action(g, conjugate_action(h, l1)));

    // independent oracle: coefficient of z^{+1} is g diag(1,0) g*, of z^{-1} is g diag(0,1) g*
    ConstantUnitary gp(pyth_g());
    Mat2 p1 = gp.m * Mat2{gr(1), gr(0), gr(0), gr(0)} * gp.m.adjoint();
    Mat2 p2 = gp.m * Mat2{gr(0), gr(0), gr(0), gr(1)} * gp.m.adjoint();
    CHECK(p1 == Mat2{gr(9, 25), gr(-12, 25), gr(-12, 25), gr(16, 25)});
    CHECK(p2 == Mat2{gr(16, 25), gr(12, 25), gr(12, 25), gr(9, 25)});

    UnitaryLoop f = conjugate_action(gp, l1);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            CHECK(f.matrix.at(i, j).coeff(1) == p1.at(i, j));
            CHECK(f.matrix.at(i, j).coeff(-1) == p2.at(i, j));
            CHECK(f.matrix.at(i, j).coeff(0).is_zero());
        }
}

TEST_CASE("index_of_loop anchors") {
    UnitaryLoop dz1 = make_unitary_loop(LaurentMatrix::diag(z_monomial(1), LaurentPoly::one()), 1,
                                        GroupTag::U2);
    CHECK(index_of_loop(dz1) == -2);

    CHECK(index_of_loop(lambda_loop(1)) == 0);

    UnitaryLoop dzm2 = make_unitary_loop(LaurentMatrix::diag(z_monomial(-2), LaurentPoly::one()),
                                         2, GroupTag::U2);
    CHECK(index_of_loop(dzm2) == 4);
}

TEST_CASE("SU(2) loops have index 0 and conjugation-invariant index") {
    Corpus c = gen_corpus(2, 5);
    for (auto& f : c.loops) {
        CHECK(index_of_loop(f) == 0);
        CHECK(index_of_loop(conjugate_action(c.group_elements[1], f)) == index_of_loop(f));
    }
}

TEST_CASE("generator_loop") {
    CHECK(generator_loop(1, ProjectivePoint(GaussianRational(0), GaussianRational(1))) ==
          lambda_loop(1));

    UnitaryLoop id = generator_loop(0, ProjectivePoint(GaussianRational(1), GaussianRational(0)));
    CHECK(id.matrix == LaurentMatrix::identity(2));

    ConstantUnitary g(pyth_g());
    UnitaryLoop f = generator_loop(2, ProjectivePoint(gr(4, 5), gr(3, 5)));
    CHECK(f == conjugate_action(g, lambda_loop(2)));
    CHECK(check_poly_loop(f.matrix, 2, GroupTag::SU2).valid);

    // [1 : 1] has squared norm 2: no exact unit representative
    CHECK_THROWS_AS(generator_loop(1, ProjectivePoint(gr(1), gr(1))), RepresentabilityError);
}

TEST_CASE("products of degree-r loops are valid degree-2r loops") {
    Corpus c = gen_corpus(2, 17, 0);
    testgen::Rng rng(3);
    for (int k = 0; k < 10; ++k) {
        auto& f = c.loops[static_cast<std::size_t>(rng.integer(0, long(c.loops.size()) - 1))];
        auto& g = c.loops[static_cast<std::size_t>(rng.integer(0, long(c.loops.size()) - 1))];
        UnitaryLoop p = loop_product(f, g);
        CHECK(check_poly_loop(p.matrix, f.degree_bound + g.degree_bound, p.group_tag).valid);
    }
}

TEST_CASE("ConstantUnitary validates exactly") {
    CHECK_THROWS_AS(ConstantUnitary(Mat2{gr(1), gr(1), gr(0), gr(1)}), DomainError);
    // unitary but det = -1
    CHECK_THROWS_AS(ConstantUnitary(Mat2{gr(0), gr(1), gr(1), gr(0)}), DomainError);
    CHECK_NOTHROW(ConstantUnitary(Mat2{gr(0), gr(1), gr(1), gr(0)}, /*require_su2=*/false));
}
