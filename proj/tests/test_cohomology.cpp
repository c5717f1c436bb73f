#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"
#include "leibform/graded_rep.hpp"
#include "leibform/random.hpp"

using namespace leibform;

namespace {

SparseVector sv(std::initializer_list<std::pair<const int, Rational>> l) { return SparseVector(l); }

FiniteAlgebra sl2() { return sl2_algebra(); }
FiniteAlgebra hemisemidirect() { return hemisemidirect_sl2(); }

Cochain scalar0(std::size_t alg_dim, Rational v) {
    Cochain c(0, alg_dim, 1);
    c.at_flat(0, 0) = v;
    return c;
}

Cochain negate(Cochain c) {
    for (std::size_t t = 0; t < c.tuple_count(); ++t)
        for (std::size_t r = 0; r < c.mod_dim(); ++r) c.at_flat(t, r) = -c.at_flat(t, r);
    return c;
}

}  // namespace

TEST_CASE("algebra identities are checked at construction") {
    CHECK_NOTHROW(sl2());
    CHECK_NOTHROW(hemisemidirect());
    std::vector<std::vector<SparseVector>> s(2, std::vector<SparseVector>(2));
    s[0][1] = sv({{0, 1}});
    CHECK_THROWS_AS(FiniteAlgebra({"a", "b"}, s, AlgebraKind::lie), std::invalid_argument);
    // hemisemidirect bracket is not antisymmetric
    const auto L = hemisemidirect();
    std::vector<std::vector<SparseVector>> t(5, std::vector<SparseVector>(5));
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) t[i][j] = L.bracket(i, j);
    CHECK_THROWS_AS(FiniteAlgebra({"h", "e", "f", "m1", "m2"}, t, AlgebraKind::lie), std::invalid_argument);
}

TEST_CASE("modules") {
    const auto g = sl2();
    CHECK(is_representation(g, adjoint_module(g)));
    CHECK(is_representation(g, coadjoint_module(g)));
    CHECK(is_representation(g, trivial_module(g)));
    const auto L = hemisemidirect();
    CHECK(is_representation(L, adjoint_module(L)));
    CHECK(is_representation(L, coadjoint_module(L)));
}

TEST_CASE("ce_d small cases") {
    const auto g = sl2();
    CHECK(ce_d(scalar0(3, 5), g, trivial_module(g)).is_zero());
    const auto ab = FiniteAlgebra::abelian(2);
    Rng rng(1);
    CHECK(ce_d(random_cochain(rng, 1, 2, 1, true), ab, trivial_module(ab)).is_zero());
    const auto adj = adjoint_module(g);
    for (int t = 0; t < 10; ++t) {
        const Cochain c = random_cochain(rng, 1, 3, 3, true);
        CHECK(ce_d(ce_d(c, g, adj), g, adj).is_zero());
    }
    CHECK_THROWS_AS(ce_d(random_cochain(rng, 3, 3, 1, true), g, trivial_module(g)), std::invalid_argument);
}

TEST_CASE("loday_d squares to zero") {
    Rng rng(2);
    for (const auto& L : {sl2(), hemisemidirect()}) {
        for (const auto& m : {trivial_module(L), adjoint_module(L), coadjoint_module(L)}) {
            for (int q = 0; q <= 2; ++q) {
                const Cochain c = random_cochain(rng, q, L.dim(), m.dim, false);
                CHECK(loday_d(loday_d(c, L, m), L, m).is_zero());
            }
        }
    }
}

TEST_CASE("the bracket is a Loday cocycle") {
    // with values in L under the zero action, closedness is the left Leibniz identity
    const auto L = hemisemidirect();
    Cochain psi(2, L.dim(), L.dim());
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j)
            for (const auto& [c, v] : L.bracket(i, j)) psi.at({i, j}, static_cast<std::size_t>(c)) = v;
    const Module zero_action{"zero", L.dim(), std::vector<DenseMatrix>(L.dim(), DenseMatrix(L.dim(), std::vector<Rational>(L.dim())))};
    CHECK(loday_d(psi, L, zero_action).is_zero());
    // the adjoint action adds [[x,y],z] + [z,[x,y]], which vanishes only for Lie algebras
    CHECK_FALSE(loday_d(psi, L, adjoint_module(L)).is_zero());
    const auto g = sl2();
    Cochain phi(2, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (const auto& [c, v] : g.bracket(i, j)) phi.at({i, j}, static_cast<std::size_t>(c)) = v;
    CHECK(loday_d(phi, g, adjoint_module(g)).is_zero());
}

TEST_CASE("loday_d agrees with ce_d on alternating cochains of a Lie algebra") {
    const auto g = sl2();
    Rng rng(3);
    for (const auto& m : {trivial_module(g), adjoint_module(g)}) {
        for (int q = 1; q <= 2; ++q) {
            const Cochain c = random_cochain(rng, q, 3, m.dim, true);
            CHECK(loday_d(c, g, m) == ce_d(c, g, m));
        }
    }
}

TEST_CASE("hat") {
    const auto L = hemisemidirect();
    const Module triv = trivial_module(L), co = coadjoint_module(L);
    CHECK(hat(Cochain(2, 5, 1)).is_zero());
    Rng rng(4);
    for (int q = 1; q <= 3; ++q) {
        const Cochain c = random_cochain(rng, q, 5, 1, false);
        CHECK(unhat(hat(c)) == c);
        CHECK(hat(loday_d(c, L, triv)) == loday_d(hat(c), L, co));
    }
    // psi = f o bracket is minus the coboundary of f, and hat turns it into the coboundary of f as a dual vector
    Cochain f(1, 5, 1);
    for (std::size_t i = 0; i < 5; ++i) f.at({i}, 0) = static_cast<int>(i) - 2;
    Cochain psi(2, 5, 1);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            for (const auto& [c, v] : L.bracket(i, j)) psi.at({i, j}, 0) += v * f.at({static_cast<std::size_t>(c)}, 0);
    CHECK(psi == negate(loday_d(f, L, triv)));
    CHECK(hat(psi) == negate(loday_d(hat(f), L, co)));
    CHECK(loday_d(hat(psi), L, co).is_zero());
}

TEST_CASE("cohomology dimensions") {
    const auto g = sl2();
    CHECK(h_dim(g, trivial_module(g), 2) == 0);
    CHECK(h_dim(g, trivial_module(g), 1) == 0);
    const auto ab = FiniteAlgebra::abelian(2);
    CHECK(h_dim(ab, trivial_module(ab), 1) == 2);
    CHECK(h_dim(ab, trivial_module(ab), 2) == 1);
    const auto gens = basis_divfree(3, 1);
    const auto sl3 = divfree_algebra(gens);
    CHECK(h_dim(sl3, as_module(action_on_fields(gens, basis_divfree(3, 0)), "natural(3)"), 1) == 0);
}

TEST_CASE("coboundaries killing squares descend to the quotient Lie algebra") {
    // eta vanishes on the ideal spanned by squares, which is R^2 here
    const auto L = hemisemidirect();
    const auto g = sl2();
    Rng rng(6);
    for (int t = 0; t < 10; ++t) {
        Cochain eta(1, 5, 1), bar(1, 3, 1);
        for (std::size_t i = 0; i < 3; ++i) bar.at({i}, 0) = eta.at({i}, 0) = static_cast<int>(rng.range(-3, 3));
        const Cochain psi = loday_d(eta, L, trivial_module(L));
        CHECK(psi.is_alternating());
        const Cochain down = ce_d(bar, g, trivial_module(g));
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                CHECK(psi.at({i, j}, 0) == (i < 3 && j < 3 ? down.at({i, j}, 0) : Rational(0)));
    }
}
