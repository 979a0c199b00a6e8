#include <catch2/catch_amalgamated.hpp>

#include "loopgrass/laurent.hpp"
#include "support/gen.hpp"

using namespace loopgrass;

namespace {
LaurentMatrix diag(long e1, long e2) {
    return LaurentMatrix::diag(z_monomial(e1), z_monomial(e2));
}
}  // namespace

TEST_CASE("gaussian rational arithmetic is exact and canonical") {
    GaussianRational a(rat(1, 2), rat(-3, 4));
    GaussianRational b(rat(2, 6), rat(0));  // canonicalizes to 1/3
    CHECK(b.re == rat(1, 3));
    CHECK((a * a.inverse()) == GaussianRational::one());
    CHECK(a * b + a == a * (b + GaussianRational::one()));
    CHECK(a.conj().conj() == a);
    CHECK(a.norm_sq() == rat(1, 4) + rat(9, 16));
    CHECK(parse_rational("-6/8") == rat(-3, 4));
    CHECK(rational_sqrt(rat(25, 16)) == rat(5, 4));
    CHECK(!rational_sqrt(rat(2)).has_value());
}

TEST_CASE("laurent_mul: inverse pair, identity, monomial product") {
    CHECK(diag(1, -1) * diag(-1, 1) == LaurentMatrix::identity(2));

    testgen::Rng rng(2024);
    for (int k = 0; k < 10; ++k) {
        LaurentMatrix m = rng.matrix2(-3, 3);
        CHECK(LaurentMatrix::identity(2) * m == m);
    }

    CHECK(diag(1, 0) * diag(1, 0) == diag(2, 0));
}

TEST_CASE("laurent_mul rejects dimension mismatch") {
    CHECK_THROWS_AS(laurent_mul(LaurentMatrix(2), LaurentMatrix(3)), std::invalid_argument);
}

TEST_CASE("star: definition, involution, unitary diagonal") {
    LaurentPoly p = LaurentPoly::monomial(2, GaussianRational(1, 1));  // (1+i) z^2
    LaurentPoly expect = LaurentPoly::monomial(-2, GaussianRational(1, -1));
    CHECK(p.star() == expect);

    testgen::Rng rng(7);
    for (int k = 0; k < 10; ++k) {
        LaurentMatrix m = rng.matrix2(-2, 2);
        CHECK(star(star(m)) == m);
    }

    CHECK(star(diag(1, -1)) == diag(-1, 1));
}

TEST_CASE("star is an anti-homomorphism") {
    testgen::Rng rng(99);
    for (int k = 0; k < 15; ++k) {
        LaurentMatrix a = rng.matrix2(-2, 2);
        LaurentMatrix b = rng.matrix2(-2, 2);
        CHECK(star(a * b) == star(b) * star(a));
    }
}

TEST_CASE("det: diagonal and triangular cases") {
    CHECK(det(diag(1, -1)) == LaurentPoly::one());
    CHECK(det(diag(1, 0)) == z_monomial(1));

    LaurentMatrix tri(2);
    tri.at(0, 0) = z_monomial(1);
    tri.at(0, 1) = LaurentPoly::constant(GaussianRational(rat(2, 3), rat(1, 5)));
    tri.at(1, 1) = z_monomial(-1);
    CHECK(det(tri) == LaurentPoly::one());
}

TEST_CASE("det is multiplicative") {
    testgen::Rng rng(1234);
    for (int k = 0; k < 15; ++k) {
        LaurentMatrix a = rng.matrix2(-2, 2);
        LaurentMatrix b = rng.matrix2(-2, 2);
        CHECK(det(a * b) == det(a) * det(b));
    }
}

TEST_CASE("evaluation at exact circle points is a homomorphism") {
    const GaussianRational pts[] = {GaussianRational(1), GaussianRational(-1, 0),
                                    GaussianRational::unit_i(), -GaussianRational::unit_i()};
    testgen::Rng rng(55);
    for (int k = 0; k < 10; ++k) {
        LaurentMatrix a = rng.matrix2(-2, 2);
        LaurentMatrix b = rng.matrix2(-2, 2);
        LaurentMatrix ab = a * b;
        for (auto& z : pts) CHECK(ab.evaluate2(z) == a.evaluate2(z) * b.evaluate2(z));
    }
}

TEST_CASE("vec_degree: top exponent or minus infinity") {
    VectorLaurent v1(LaurentPoly::zero(), z_monomial(-1));
    CHECK(vec_degree(v1) == -1);

    VectorLaurent v2(LaurentPoly::constant(GaussianRational(3)), z_monomial(-1));
    CHECK(vec_degree(v2) == 0);

    CHECK(!vec_degree(VectorLaurent()).has_value());
}

TEST_CASE("laurent poly canonical form stores no zeros") {
    LaurentPoly p;
    p.add_term(3, GaussianRational(2));
    p.add_term(3, GaussianRational(-2, 0));
    CHECK(p.is_zero());
    CHECK(p == LaurentPoly::zero());

    LaurentPoly q = z_monomial(5) - z_monomial(5);
    CHECK(q.terms().empty());
}

TEST_CASE("product support bounds add") {
    testgen::Rng rng(31);
    for (int k = 0; k < 10; ++k) {
        LaurentPoly a = rng.laurent(-3, 2);
        LaurentPoly b = rng.laurent(-1, 4);
        LaurentPoly ab = a * b;
        if (a.is_zero() || b.is_zero()) {
            CHECK(ab.is_zero());
        } else if (!ab.is_zero()) {
            CHECK(*ab.lo() >= *a.lo() + *b.lo());
            CHECK(*ab.hi() <= *a.hi() + *b.hi());
        }
    }
}
