#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"

using namespace leibform;

using PF = Form<PolyCoeff>;
using PV = MultiVec<PolyCoeff>;

TEST_CASE("wedge") {
    CHECK(wedge(pf("dx1", 3), pf("dx2", 3)) == pf("dx1^dx2", 3));
    CHECK(wedge(pf("dx2", 3), pf("dx1", 3)) == pf("-1 dx1^dx2", 3));
    CHECK(wedge(pf("x1 dx1", 3), pf("x2 dx2^dx3", 3)) == pf("x1 x2 dx1^dx2^dx3", 3));
    // too many slots: canonical zero of degree 4
    const PF top = wedge(pf("dx1^dx2", 3), pf("dx1^dx3", 3));
    CHECK(top.is_zero());
    CHECK(top.degree() == 4);
    CHECK_THROWS(wedge(pf("dx1", 3), pf("dx1", 4)));
}

TEST_CASE("exterior derivative") {
    CHECK(d(pf("x1 dx2", 3)) == pf("dx1^dx2", 3));
    CHECK(d(pf("dx1", 3)).is_zero());
    CHECK(d(tf("e[0,0,1] dx2", 3)) == tf("-1 e[0,0,1] dx2^dx3", 3));
    CHECK(d(pf("x1 dx1^dx2^dx3", 3)).is_zero());
    // Leibniz rule on a fixed pair
    const PF a = pf("x1 x2 dx3", 3), b = pf("x3^2 dx1", 3);
    CHECK(d(wedge(a, b)) == wedge(d(a), b) - wedge(a, d(b)));
}

TEST_CASE("contraction") {
    CHECK(contract(pv("e1^e2", 3), pf("dx1^dx2^dx3", 3)) == pf("dx3", 3));
    CHECK(contract(pv("e1", 3), pf("dx1", 3)) == pf("1", 3));
    CHECK(contract(pv("e2", 3), pf("dx1", 3)).is_zero());
    CHECK_THROWS_AS(contract(pv("e1^e2", 3), pf("dx1", 3)), std::invalid_argument);
    // convention: iota_{A^B} = iota_B iota_A
    const PF mu = volume_form<PolyCoeff>(3);
    CHECK(contract(pv("e1^e2", 3), mu) == contract(pv("e2", 3), contract(pv("e1", 3), mu)));
}

TEST_CASE("flat and sharp") {
    CHECK(flat(pv("e1^e2", 3)) == pf("dx3", 3));
    CHECK(sharp(pf("dx3", 3)) == pv("e1^e2", 3));
    CHECK(flat(pv("e1^e2^e3", 3)) == pf("1", 3));
    for (int k = 0; k <= 4; ++k)
        for (IndexSet I : subsets_of_size(4, k)) {
            const PV A = PV::basis(4, I, pc("x1 - 2 x3", 4));
            CHECK(sharp(flat(A)) == A);
            const PF w = PF::basis(4, I, pc("x2^2", 4));
            CHECK(flat(sharp(w)) == w);
        }
}

TEST_CASE("divergence and brackets") {
    CHECK(divergence(pv("x1 e1", 3)) == pc("1", 3));
    CHECK(lie_bracket(pv("e1", 3), pv("x1 e2", 3)) == pv("e2", 3));
    const PV X = pv("x1 x2 e1", 3), Y = pv("x2 e2", 3);
    const PolyCoeff lhs = divergence(lie_bracket(X, Y));
    const PolyCoeff rhs = apply(X, divergence(Y)) - apply(Y, divergence(X));
    CHECK(lhs == rhs);
    CHECK(lhs == pc("-1 x2", 3));
    // L_X mu = div(X) mu
    const PF mu = volume_form<PolyCoeff>(3);
    CHECK(lie_derivative(X, mu) == mu * divergence(X));
}

TEST_CASE("delta") {
    // oracle: flat gives x2 dx3, d gives dx2^dx3, sharp gives e1
    const PV A = pv("x2 e1^e2", 3);
    CHECK(flat(A) == pf("x2 dx3", 3));
    CHECK(d(flat(A)) == pf("dx2^dx3", 3));
    CHECK(delta(A) == pv("e1", 3));
    CHECK(delta(pv("e1^e2", 3)).is_zero());
    CHECK(delta(delta(pv("x1 x3 e1^e2^e3", 3))).is_zero());
    CHECK(delta_decomposable(A) == delta(A));
    CHECK_THROWS_AS(delta_decomposable(pv("e1^e2 + e2^e3", 3)), NotDecomposableError);
}

TEST_CASE("hamiltonian fields") {
    const PF a = pf("x1 dx3", 3);
    const PV X = hamiltonian_field(a);
    CHECK(X == pv("-1 e2", 3));
    CHECK(contract(X, volume_form<PolyCoeff>(3)) == d(a));
    CHECK(contract(pv("-1 e2", 3), volume_form<PolyCoeff>(3)) == pf("dx1^dx3", 3));
    CHECK(hamiltonian_field(pf("dx1", 3)).is_zero());
    CHECK(flat(wedge(pv("e1", 3), pv("x1 e2", 3))) == a);
    CHECK(hamiltonian_field_bivector(pv("e1", 3), pv("x1 e2", 3)) == pv("-1 e2", 3));
    CHECK_THROWS(hamiltonian_field(pf("dx1^dx2", 3)));
}

TEST_CASE("leibniz bracket") {
    const PF a = pf("x1 dx3", 3), b = pf("x2 dx3", 3);
    CHECK(leibniz_bracket(a, b) == pf("-1 dx3", 3));
    CHECK(lie_derivative(pv("-1 e2", 3), b) == pf("-1 dx3", 3));
    CHECK(leibniz_bracket(pf("dx1", 3), b).is_zero());
    const PF sym = leibniz_bracket(a, b) + leibniz_bracket(b, a);
    CHECK(sym.is_zero());
    CHECK(sym == d(contract(hamiltonian_field(a), b) + contract(hamiltonian_field(b), a)));
}

TEST_CASE("bivector bracket formulas on a fixed pair") {
    const PV X1 = pv("x2 e1", 3), X2 = pv("x3 e2", 3), Y1 = pv("x1 e3", 3), Y2 = pv("e1 + x2 e2", 3);
    const PF alpha = flat(wedge(X1, X2)), beta = flat(wedge(Y1, Y2));
    const PV lifted = sharp(leibniz_bracket(alpha, beta));
    CHECK(bivector_bracket(X1, X2, Y1, Y2) == lifted);
    CHECK(bivector_bracket_expanded(X1, X2, Y1, Y2) == lifted);
}

TEST_CASE("degree mismatch errors") {
    CHECK_THROWS(pf("dx1", 3) + pf("dx1^dx2", 3));
    CHECK_THROWS(leibniz_bracket(pf("dx1", 4), pf("dx1", 4)));
}
