#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "leibform/random.hpp"

using namespace leibform;

TEST_CASE("rationals stay reduced") {
    Rational r = make_rational(6, -4);
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    CHECK(to_string(r) == "-3/2");
    CHECK(parse_rational("10/4") == make_rational(5, 2));
    CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("gaussian rationals") {
    const GaussianRational z(make_rational(1, 2), Rational(-3));
    CHECK(z.conj().conj() == z);
    CHECK((z * z.conj()).im() == 0);
    CHECK(z / z == GaussianRational(1));
    CHECK(parse_gaussian(to_string(z)) == z);
    CHECK(parse_gaussian("i") == GaussianRational::i());
    CHECK(parse_gaussian("-3/2i") == GaussianRational(Rational(0), make_rational(-3, 2)));
    CHECK_THROWS_AS(z / GaussianRational(), std::domain_error);
}

TEST_CASE("derive examples") {
    CHECK(pc("x1^2 x2", 2).derive(0) == pc("2 x1 x2", 2));
    CHECK(tc("e[0,0,1]", 3).derive(2) == tc("e[0,0,1]", 3));
    CHECK(pc("1", 1).derive(0).is_zero());
    CHECK_THROWS_AS(pc("x1", 2).derive(2), std::out_of_range);
    CHECK_THROWS_AS(pc("x1", 2).derive(-1), std::out_of_range);
}

TEST_CASE("integrate_torus examples") {
    CHECK(integrate_torus(tc("e[0,0,1]", 3)) == GaussianRational(0));
    CHECK(integrate_torus(tc("3/2", 3)) == GaussianRational(make_rational(3, 2)));
    // the zero mode of the product, read off from the convolution by hand
    CHECK(integrate_torus(tc("e[0,0,1]", 3) * tc("e[0,0,-1]", 3)) == GaussianRational(1));
}

TEST_CASE("primitive_in_axis examples") {
    CHECK(primitive_in_axis(pc("x1", 2), 0) == pc("1/2 x1^2", 2));
    CHECK(primitive_in_axis(pc("1", 2), 1) == pc("x2", 2));
    const PolyCoeff f = pc("x1 x2^2", 2);
    const PolyCoeff h = primitive_in_axis(f, 1);
    CHECK(h == pc("1/3 x1 x2^3", 2));
    CHECK(h.derive(1) == f);
}

TEST_CASE("degree and homogeneity") {
    CHECK(pc("x1^2 x2 + 3", 2).degree() == 3);
    CHECK(PolyCoeff::zero(2).degree() == -1);
    CHECK(pc("x1 x2 + x2^2", 2).is_homogeneous(2));
}

TEST_CASE_TEMPLATE("derivations commute and satisfy the product rule", C, PolyCoeff, TrigCoeff) {
    Rng rng(11);
    RandomCaps caps;
    for (int t = 0; t < 100; ++t) {
        const int n = 3;
        const C f = random_coeff(rng, n, caps, static_cast<const C*>(nullptr));
        const C g = random_coeff(rng, n, caps, static_cast<const C*>(nullptr));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) CHECK(f.derive(i).derive(j) == f.derive(j).derive(i));
        for (int j = 0; j < n; ++j) CHECK((f * g).derive(j) == f.derive(j) * g + f * g.derive(j));
    }
}

TEST_CASE("torus integral kills derivatives and is positive on |f|^2") {
    Rng rng(12);
    RandomCaps caps;
    for (int t = 0; t < 100; ++t) {
        const TrigCoeff f = random_trig(rng, 3, caps);
        for (int j = 0; j < 3; ++j) CHECK(integrate_torus(f.derive(j)).is_zero());
        const GaussianRational m = integrate_torus(f * f.conj());
        CHECK(m.im() == 0);
        CHECK(m.re() >= 0);
        CHECK((sgn(m.re()) == 0) == f.is_zero());
    }
}

TEST_CASE("primitive is a right inverse of derive") {
    Rng rng(13);
    RandomCaps caps;
    for (int t = 0; t < 100; ++t) {
        const PolyCoeff f = random_poly(rng, 4, caps);
        for (int j = 0; j < 4; ++j) {
            const PolyCoeff h = primitive_in_axis(f, j);
            CHECK(h.derive(j) == f);
            for (const auto& [e, c] : h.terms()) CHECK(e[static_cast<std::size_t>(j)] > 0);
        }
    }
}

TEST_CASE("trig reality test") {
    CHECK(tc("e[1,0] + e[-1,0]", 2).is_real());
    CHECK_FALSE(tc("e[1,0]", 2).is_real());
    CHECK(tc("i e[1,0] - i e[-1,0]", 2).is_real());
}

TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS(pc("x1", 2) + pc("x1", 3));
    CHECK_THROWS(tc("1", 2) * tc("1", 3));
}
