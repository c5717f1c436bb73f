#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "leibform/decompose.hpp"
#include "leibform/random.hpp"

using namespace leibform;

TEST_CASE("bounds") {
    CHECK(bracket_bound(3) == 12);
    CHECK(bracket_bound(4) == 30);
    CHECK(square_bound(3) == 4);
    CHECK(square_bound(4) == 16);
}

TEST_CASE("commutator_decompose single term") {
    const auto w = commutator_decompose(pv("x1 e2^e3", 3));
    REQUIRE(w.count() == 1);
    CHECK(w.pairs[0].left_bivector == pv("x2 e1^e2", 3));
    CHECK(w.pairs[0].right_bivector == pv("1/2 x1^2 e2^e3", 3));
    // the first element has Hamiltonian field e1, which differentiates the second back
    CHECK(hamiltonian_field(w.pairs[0].left) == pv("e1", 3));
    CHECK(lie_derivative(pv("e1", 3), w.pairs[0].right_bivector) == pv("x1 e2^e3", 3));
    CHECK(w.target == flat(pv("x1 e2^e3", 3)));
    CHECK(w.verify());
}

TEST_CASE("commutator_decompose zero and sums") {
    CHECK(commutator_decompose(PVec(3, 2)).count() == 0);
    CHECK(commutator_decompose(PVec(3, 2)).verify());
    const auto w = commutator_decompose(pv("e1^e2 + x3 e1^e3", 3));
    CHECK(w.count() == 2);
    CHECK(w.verify());
    CHECK(w.count() <= bracket_bound(3));
}

TEST_CASE("commutator_decompose rejects bad input") {
    CHECK_THROWS_AS(commutator_decompose(pv("e1^e2", 2)), std::invalid_argument);
    CHECK_THROWS_AS(commutator_decompose(pv("e1", 3)), std::invalid_argument);
}

TEST_CASE("square_decompose, n = 3") {
    const auto w = square_decompose(pf("x3", 3));
    REQUIRE(w.count() == 1);
    CHECK(w.terms[0].alpha == pf("dx3 + x1 x3 dx2", 3));
    CHECK(w.terms[0].X == pv("e1", 3));
    CHECK(w.terms[0].Y == pv("e2 - x1 x3 e3", 3));
    // X_alpha by the bivector formula
    CHECK(hamiltonian_field_bivector(w.terms[0].X, w.terms[0].Y) == pv("-1 x1 e1 + x3 e3", 3));
    CHECK(hamiltonian_field(w.terms[0].alpha) == pv("-1 x1 e1 + x3 e3", 3));
    CHECK(contract(hamiltonian_field(w.terms[0].alpha), w.terms[0].alpha) == pf("x3", 3));
    CHECK(w.verify());
    CHECK(contraction_identity_holds(w.terms[0]));
}

TEST_CASE("square_decompose zero and n = 4") {
    CHECK(square_decompose(PForm(3, 0)).count() == 0);
    const auto w = square_decompose(pf("x4 dx4", 4));
    CHECK(w.verify());
    CHECK(w.count() <= square_bound(4));
    for (const auto& t : w.terms) CHECK(contraction_identity_holds(t));
    CHECK_THROWS_AS(square_decompose(pf("x1", 2)), std::invalid_argument);
    CHECK_THROWS_AS(square_decompose(pf("dx1", 3)), std::invalid_argument);
}

TEST_CASE("squares_of_exact") {
    const auto a = squares_of_exact(pf("dx3", 3), pf("x3", 3));
    REQUIRE(a.size() == 1);
    CHECK(a[0] == pf("dx3 + x1 x3 dx2", 3));
    CHECK(leibniz_bracket(a[0], a[0]) == pf("dx3", 3));
    CHECK(squares_of_exact(PForm(3, 1), PForm(3, 0)).empty());
    const PForm c = pf("x2 dx1 + x1 dx2", 3);
    PForm sum(3, 1);
    for (const auto& alpha : squares_of_exact(c, pf("x1 x2", 3))) sum += leibniz_bracket(alpha, alpha);
    CHECK(sum == c);
    CHECK_THROWS_AS(squares_of_exact(pf("dx1", 3), pf("x2", 3)), std::invalid_argument);
}

TEST_CASE("random round trips") {
    Rng rng(3);
    RandomCaps caps;
    for (int t = 0; t < 20; ++t) {
        const int n = 3 + t % 2;
        const auto B = random_multivec<PolyCoeff>(rng, n, 2, caps);
        const auto w = commutator_decompose(B);
        CHECK(w.verify());
        CHECK(w.count() <= bracket_bound(n));
        const auto b = random_form<PolyCoeff>(rng, n, n - 3, caps);
        const auto s = square_decompose(b);
        CHECK(s.verify());
        CHECK(s.count() <= square_bound(n));
        PForm sum(n, n - 2);
        for (const auto& term : s.terms) {
            CHECK(contraction_identity_holds(term));
            CHECK(d(contract(hamiltonian_field(term.alpha), term.alpha)) == leibniz_bracket(term.alpha, term.alpha));
            sum += leibniz_bracket(term.alpha, term.alpha);
        }
        CHECK(sum == d(b));
    }
}
