#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "leibform/diffop.hpp"
#include "leibform/random.hpp"

using namespace leibform;

namespace {

PolyVector one(const PolyCoeff& p) { return {p}; }

/// D(f dx1 + g dx2) = d1 g - d2 f on R^2.
DiffOp curl2() {
    DiffOp D(2, 1, 1);
    D.add_term(bit(1), mi({1, 0}), one(pc("1", 2)));
    D.add_term(bit(0), mi({0, 1}), one(pc("-1", 2)));
    return D;
}

}  // namespace

TEST_CASE("apply") {
    const PolyVector zero = one(PolyCoeff::zero(2));
    CHECK(apply(curl2(), d(pf("x1 x2", 2))) == zero);
    CHECK(apply(curl2(), pf("x1^2 dx2", 2)) == one(pc("2 x1", 2)));
    CHECK(apply(coefficient_extraction(2, 1, bit(1)), pf("x1 dx2", 2)) == one(pc("x1", 2)));
    CHECK(apply(DiffOp(2, 1, 1), pf("x1 dx2", 2)) == zero);
    CHECK_THROWS_AS(apply(curl2(), pf("x1", 2)), std::invalid_argument);
}

TEST_CASE("operator normal form") {
    DiffOp D(2, 1, 1);
    D.add_term(bit(0), mi({1, 0}), one(pc("x1", 2)));
    D.add_term(bit(0), mi({1, 0}), one(pc("-1 x1", 2)));
    CHECK(D.is_zero());
    CHECK(D.order() == -1);
    CHECK(curl2().order() == 1);
    CHECK_THROWS(D.add_term(bit(0) | bit(1), mi({}), one(pc("1", 2))));
    CHECK_THROWS(D.add_term(bit(0), mi({0, 0, 1}), one(pc("1", 2))));
    CHECK_THROWS(D.add_term(bit(0), mi({}), {pc("1", 2), pc("1", 2)}));
}

TEST_CASE("compose_d") {
    CHECK(compose_d(coefficient_extraction(2, 2, bit(0) | bit(1))) == curl2());
    CHECK(compose_d(DiffOp(2, 2, 1)).is_zero());
    CHECK(compose_d(DiffOp(2, 3, 1)).is_zero());
    CHECK_THROWS(compose_d(DiffOp(2, 0, 1)));
    // against direct evaluation
    const DiffOp Q = coefficient_extraction(3, 2, bit(0) | bit(2));
    const PForm a = pf("x1 x2 dx1 + x3^2 x1 dx3 + x2 dx2", 3);
    CHECK(apply(compose_d(Q), a) == apply(Q, d(a)));
}

TEST_CASE("compose_iota_euler") {
    DiffOp id(2, 0, 1);
    id.add_term(0, mi({}), one(pc("1", 2)));
    DiffOp expect(2, 1, 1);
    expect.add_term(bit(0), mi({}), one(pc("x1", 2)));
    expect.add_term(bit(1), mi({}), one(pc("x2", 2)));
    CHECK(compose_iota_euler(id) == expect);

    DiffOp d1(2, 0, 1);
    d1.add_term(0, mi({1, 0}), one(pc("1", 2)));
    DiffOp e1(2, 1, 1);
    e1.add_term(bit(0), mi({}), one(pc("1", 2)));
    e1.add_term(bit(0), mi({1, 0}), one(pc("x1", 2)));
    e1.add_term(bit(1), mi({1, 0}), one(pc("x2", 2)));
    CHECK(compose_iota_euler(d1) == e1);
    CHECK(compose_iota_euler(DiffOp(2, 0, 1)).is_zero());

    const DiffOp Dk = coefficient_extraction(3, 1, bit(1));
    const PForm w = pf("x1 x3 dx1^dx2 + x2^2 dx2^dx3", 3);
    CHECK(apply(compose_iota_euler(Dk), w) == apply(Dk, contract(euler_field(3), w)));
}

TEST_CASE("truncate") {
    DiffOp D(2, 0, 1);
    D.add_term(0, mi({1, 0}), one(pc("1", 2)));
    D.add_term(0, mi({1, 1}), one(pc("x1", 2)));
    DiffOp expect(2, 0, 1);
    expect.add_term(0, mi({1, 0}), one(pc("1", 2)));
    CHECK(truncate(D, 1) == expect);
    CHECK(truncate(D, 2) == D);
    CHECK(truncate(D, 5) == D);
    CHECK(truncate_by_evaluation(D, 1) == expect);
    CHECK(truncate_by_evaluation(D, 2) == D);
    Rng rng(21);
    RandomCaps caps;
    for (int t = 0; t < 20; ++t) {
        const int n = 2 + t % 2;
        const DiffOp R = random_diffop(rng, n, static_cast<int>(rng.range(0, n)), 2, 3, caps);
        CHECK(truncate(R, 2) == truncate_by_evaluation(R, 2));
    }
}

TEST_CASE("factor_through_d examples") {
    const Factorization f = factor_through_d(curl2());
    CHECK(f.Q == coefficient_extraction(2, 2, bit(0) | bit(1)));
    CHECK(f.verified);
    const Factorization z = factor_through_d(DiffOp(2, 1, 1));
    CHECK(z.Q.is_zero());
    CHECK(z.iterations == 0);
    // coefficient of d alpha on dx1^dx2^dx3
    const DiffOp top = compose_d(coefficient_extraction(3, 3, full_set(3)));
    const Factorization t = factor_through_d(top);
    CHECK(t.Q == coefficient_extraction(3, 3, full_set(3)));
    CHECK(t.verified);
    for (const auto& a : monomial_forms(3, 2, 5)) CHECK(apply(t.Q, d(a)) == apply(top, a));
    for (const auto& s : t.stages) {
        CHECK(s.property1);
        CHECK(s.property2);
    }
}

TEST_CASE("factor_through_d rejects bad input") {
    CHECK_THROWS_AS(factor_through_d(coefficient_extraction(2, 1, bit(0))), PreconditionError);
    CHECK_THROWS_AS(factor_through_d(coefficient_extraction(2, 0, 0)), std::invalid_argument);
}

TEST_CASE("factor_through_d on random D = Q0 o d") {
    Rng rng(22);
    RandomCaps caps;
    caps.deg_cap = 2;
    for (int t = 0; t < 15; ++t) {
        const int n = 2 + t % 2;
        const int k = static_cast<int>(rng.range(1, n - 1));
        const DiffOp D = compose_d(random_diffop(rng, n, k + 1, 2, 3, caps));
        const Factorization f = factor_through_d(D);
        CHECK(f.verified);
        CHECK(compose_d(f.Q) == D);
        for (const auto& s : f.stages) {
            CHECK(s.property1);
            CHECK(s.property2);
        }
    }
}

TEST_CASE("euler eigenvalues") {
    const PForm a = pf("x1 dx2", 2);
    const PField E = euler_field(2);
    CHECK(contract(E, d(a)) + d(contract(E, a)) == a * Rational(2));
    CHECK(lie_derivative(E, a) == a * Rational(2));
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= std::min(2, n); ++k)
            for (int l = 0; l <= 3; ++l) CHECK(euler_eigencheck(k, l, n));
}
