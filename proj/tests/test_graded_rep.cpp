#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "leibform/graded_rep.hpp"

using namespace leibform;

TEST_CASE("basis dimensions") {
    CHECK(basis_divfree(3, 0).dim() == 3);
    CHECK(basis_divfree(3, 1).dim() == 8);
    CHECK(basis_divfree(3, 2).dim() == 15);
    CHECK(basis_divfree(3, 3).dim() == 24);
    for (int n = 3; n <= 4; ++n)
        for (int k = 0; k <= 4; ++k) CHECK(basis_divfree(n, k).dim() == divfree_dim_formula(n, k));
    CHECK(basis_divfree(2, 2).dim() == divfree_dim_formula(2, 2));
}

TEST_CASE("constant fields are the coordinate fields") {
    const auto B = basis_divfree(3, 0);
    for (const auto& X : B.vectors) CHECK(X.size() == 1);
    CHECK(B.contains(pv("e2", 3)));
}

TEST_CASE("basis vectors are homogeneous, divergence-free and independent") {
    const auto B = basis_divfree(3, 2);
    for (const auto& X : B.vectors) {
        CHECK(divergence(X).is_zero());
        for (const auto& [i, c] : X.terms()) CHECK(c.is_homogeneous(2));
    }
    // independence: coordinates of basis vector j are the unit vector j
    for (std::size_t j = 0; j < B.dim(); ++j) {
        const auto c = B.coordinates(B.vectors[j]);
        for (std::size_t i = 0; i < c.size(); ++i) CHECK(c[i] == (i == j ? 1 : 0));
    }
    CHECK_FALSE(B.contains(pv("x1^2 e1", 3)));
    CHECK(B.contains(pv("x2^2 e1 + x1 x3 e2", 3)));
}

TEST_CASE("grading") {
    CHECK(grading_check(3, 1, 1));
    CHECK(grading_check(3, 0, 2));
    CHECK(grading_check(4, 2, 2));
}

TEST_CASE("representation law and the sl(n) identification") {
    for (int n = 3; n <= 4; ++n) {
        const auto g = basis_divfree(n, 1);
        CHECK(g.dim() == static_cast<std::size_t>(n * n - 1));
        const auto on_fields = action_on_fields(g, basis_divfree(n, 2));
        CHECK(commutator_law_holds(g, on_fields));
        const auto on_wedge = action_on_wedge(g, n - 2);
        CHECK(commutator_law_holds(g, on_wedge));
        for (std::size_t i = 0; i < g.dim(); ++i) {
            DenseMatrix A = linear_field_matrix(g.vectors[i]);
            Rational trace(0);
            for (int j = 0; j < n; ++j) trace += A[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)];
            CHECK(trace == 0);
            for (auto& row : A)
                for (auto& a : row) a = -a;
            CHECK(on_wedge.actions[i] == wedge_matrix(A, n, n - 2));
        }
    }
}

TEST_CASE("whitehead lemma") {
    CHECK(whitehead_h1(3) == 0);
    CHECK(whitehead_h1(4) == 0);
    CHECK(whitehead_h1(3, true) == 0);
}

TEST_CASE("intertwiners vanish") {
    CHECK(intertwiner_dim(3, 2) == 0);
    CHECK(intertwiner_dim(3, 3) == 0);
    CHECK(intertwiner_dim(4, 2) == 0);
}

TEST_CASE("two irreducible summands") {
    CHECK(endo_dim_tensor(3, 2) == 2);
    CHECK(endo_dim_tensor(3, 3) == 2);
    CHECK(endo_dim_tensor(4, 2) == 2);
}

TEST_CASE("equivariant maps of a representation to itself include the identity") {
    const auto g = basis_divfree(3, 1);
    const auto rep = action_on_wedge(g, 1);
    CHECK(equivariant_dim(rep, rep) == 1);
}

TEST_CASE("divfree algebra of linear fields is sl(n)") {
    const auto alg = divfree_algebra(basis_divfree(3, 1));
    CHECK(alg.dim() == 8);
    CHECK(alg.kind() == AlgebraKind::lie);
    CHECK(h_dim(alg, trivial_module(alg), 1) == 0);
    CHECK(h_dim(alg, trivial_module(alg), 2) == 0);
}
