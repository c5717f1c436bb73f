#pragma once

#include <concepts>

#include "leibform/poly.hpp"
#include "leibform/trig.hpp"

namespace leibform {

/**
 * A commutative ring of scalar functions with pairwise-commuting derivations
 * d/dx_1..d/dx_n, each satisfying the product rule. Everything in the Cartan
 * calculus is written against this interface only.
 */
template <class C>
concept DifferentialAlgebra = requires(const C a, const C b, const Rational r, int axis) {
    typename C::Scalar;
    { C::zero(axis) } -> std::same_as<C>;
    { a.dim() } -> std::convertible_to<int>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.derive(axis) } -> std::same_as<C>;
    { a + b } -> std::same_as<C>;
    { a - b } -> std::same_as<C>;
    { a * b } -> std::same_as<C>;
    { -a } -> std::same_as<C>;
    { a * r } -> std::same_as<C>;
    { a == b } -> std::convertible_to<bool>;
};

/// Algebras with a total-integral functional; the integral of every derivative vanishes.
template <class C>
concept IntegrableAlgebra = DifferentialAlgebra<C> && requires(const C a) {
    { a.integral() } -> std::same_as<typename C::Scalar>;
};

static_assert(DifferentialAlgebra<PolyCoeff>);
static_assert(DifferentialAlgebra<TrigCoeff>);
static_assert(IntegrableAlgebra<TrigCoeff>);
static_assert(!IntegrableAlgebra<PolyCoeff>);

}  // namespace leibform
