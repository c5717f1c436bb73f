#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "leibform/random.hpp"
#include "leibform/torus.hpp"

using namespace leibform;

TEST_CASE("exact divergence-free fields") {
    CHECK_FALSE(is_exact_divfree(tv("e1", 3)));
    CHECK(is_exact_divfree(tv("e[0,0,1] e1", 3)));
    CHECK(divergence(tv("e[0,0,1] e1", 3)).is_zero());
    CHECK(is_exact_divfree(TField(3, 1)));
    CHECK_THROWS_AS(is_exact_divfree(tv("e[1,0,0] e1", 3)), std::invalid_argument);
}

TEST_CASE("potentials") {
    const TForm a = potential(tv("e[0,0,1] e1", 3));
    CHECK(a == tf("-1 e[0,0,1] dx2", 3));
    CHECK(d(a) == tf("e[0,0,1] dx2^dx3", 3));
    CHECK(potential(TField(3, 1)).is_zero());
    const TField X = tv("e[1,0,0] e2", 3);
    const TForm b = potential(X);
    CHECK(d(b) == flat(X));
    CHECK(hamiltonian_field(b) == X);
    CHECK(b == tf("-1 e[1,0,0] dx3", 3));
    CHECK_THROWS_AS(potential(tv("e2", 3)), std::invalid_argument);
}

TEST_CASE("normal forms") {
    CHECK(normal_form(tf("dx1", 3)).rep == tf("dx1", 3));
    CHECK(normal_form(d(tf("e[1,0,0]", 3))).rep.is_zero());
    CHECK(normal_form(tf("-1 e[0,0,1] dx2", 3)).rep == tf("-1 e[0,0,1] dx2", 3));
    const TForm a = tf("e[1,1,0] dx1 + 2 dx3", 3);
    CHECK(normal_form(a + d(tf("e[0,2,1] + 3 e[1,0,0]", 3))).rep == normal_form(a).rep);
}

TEST_CASE("homotopy identity off the constant mode") {
    Rng rng(7);
    RandomCaps caps;
    for (int t = 0; t < 50; ++t) {
        const int n = 3 + t % 2;
        const int k = static_cast<int>(rng.range(0, n));
        TForm w = random_form<TrigCoeff>(rng, n, k, caps);
        w -= constant_mode(w);
        CHECK(d(homotopy(w)) + homotopy(d(w)) == w);
        CHECK(homotopy(homotopy(w)).is_zero());
    }
}

TEST_CASE("central bracket") {
    const QuotientClass A = normal_form(tf("-1 e[0,0,1] dx2", 3));
    const QuotientClass B = normal_form(potential(tv("e[0,0,-1] e2", 3)));
    CHECK(contract(hamiltonian_field(A.rep), contract(hamiltonian_field(B.rep), volume_form<TrigCoeff>(3))) ==
          tf("-1 dx3", 3));
    CHECK(central_bracket(A, B).rep == tf("-1 dx3", 3));
    CHECK(central_bracket(normal_form(tf("dx1", 3)), B).rep.is_zero());
    CHECK(central_bracket(A, B).rep == normal_form(leibniz_bracket(A.rep, B.rep)).rep);
}

TEST_CASE("central bracket: Jacobi and antisymmetry") {
    Rng rng(8);
    RandomCaps caps;
    caps.max_terms = 2;
    for (int t = 0; t < 20; ++t) {
        const auto a = normal_form(random_form<TrigCoeff>(rng, 3, 1, caps));
        const auto b = normal_form(random_form<TrigCoeff>(rng, 3, 1, caps));
        const auto c = normal_form(random_form<TrigCoeff>(rng, 3, 1, caps));
        CHECK((central_bracket(a, b).rep + central_bracket(b, a).rep).is_zero());
        const TForm jac = central_bracket(a, central_bracket(b, c)).rep + central_bracket(b, central_bracket(c, a)).rep +
                          central_bracket(c, central_bracket(a, b)).rep;
        CHECK(jac.is_zero());
    }
}

TEST_CASE("constant classes are central and are the kernel") {
    for (IndexSet I : subsets_of_size(3, 1)) {
        const QuotientClass z = normal_form(TForm::basis(3, I, TrigCoeff::constant(3, 2)));
        CHECK(hamiltonian_field(z.rep).is_zero());
    }
    CHECK_FALSE(hamiltonian_field(normal_form(tf("e[1,0,0] dx2", 3)).rep).is_zero());
}

TEST_CASE("lichnerowicz cocycle") {
    const TForm s = tf("dx1^dx2", 3);
    CHECK(lichnerowicz(s, tv("e[0,0,1] e1", 3), tv("e[0,0,-1] e2", 3)) == GaussianRational(1));
    CHECK(lichnerowicz(s, tv("e1", 3), tv("e3", 3)) == GaussianRational(0));
    const TField X = tv("e[0,1,0] e1 + e[1,0,0] e3", 3);
    CHECK(lichnerowicz(s, X, X) == GaussianRational(0));
    CHECK_THROWS_AS(lichnerowicz(tf("e[0,0,1] dx1^dx2", 3), X, X), std::invalid_argument);
    CHECK_THROWS_AS(lichnerowicz(s, tv("e[1,0,0] e1", 3), X), std::invalid_argument);
}

TEST_CASE("cycle cocycle") {
    const TField X = tv("e[0,0,1] e1", 3), Y = tv("e[0,0,-1] e2", 3);
    CHECK(cycle_cocycle(CycleSpec::from_fixed(3, 0, 1), X, Y) == GaussianRational(-1));
    CHECK(cycle_cocycle(CycleSpec::from_fixed(3, 1, 2), X, Y) == GaussianRational(0));
    CHECK(cycle_cocycle(CycleSpec::from_fixed(3, 0, 1), X, X) == GaussianRational(0));
    CHECK_THROWS(CycleSpec::from_fixed(3, 1, 1));
    CHECK_THROWS(CycleSpec::from_fixed(3, 0, 3));
    // modes varying along the cycle integrate to zero; modes along fixed axes evaluate to 1
    const CycleSpec C = CycleSpec::from_fixed(3, 0, 1);
    CHECK(integrate_over_cycle(C, tf("e[0,0,1] dx3", 3)) == GaussianRational(0));
    CHECK(integrate_over_cycle(C, tf("3 e[2,-1,0] dx3", 3)) == GaussianRational(3));
}

TEST_CASE("cocycle against bracket") {
    const TForm s = tf("dx1^dx2", 3);
    const TForm a = tf("-1 e[0,0,1] dx2", 3);
    const TForm b = potential(tv("e[0,0,-1] e2", 3));
    const auto [l, r] = cocycle_vs_bracket(s, a, b);
    CHECK(l == GaussianRational(1));
    CHECK(r == GaussianRational(1));
    const auto [l0, r0] = cocycle_vs_bracket(tf("dx1^dx3", 3), tf("dx1", 3), b);
    CHECK(l0.is_zero());
    CHECK(r0.is_zero());
    Rng rng(9);
    RandomCaps caps;
    for (int t = 0; t < 20; ++t) {
        const auto x = random_form<TrigCoeff>(rng, 3, 1, caps), y = random_form<TrigCoeff>(rng, 3, 1, caps);
        const auto [p, q] = cocycle_vs_bracket(tf("dx1^dx3", 3), x, y);
        CHECK(p == q);
    }
}

TEST_CASE("pairing matrix") {
    const PairingMatrix p = pairing_matrix(3);
    CHECK(p.values.size() == 3);
    CHECK(p.rank() == 3);
    CHECK(pairing_matrix(4).rank() == 6);
    CHECK_THROWS(pairing_matrix(2));
}
