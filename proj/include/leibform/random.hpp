#pragma once

/**
 * @file random.hpp
 * @brief Reproducible random instances.
 *
 * Every draw goes through mt19937_64 followed by a modulo reduction, so a seed
 * fixes the whole instance stream on every platform. Coefficients are p/q with
 * |p| <= num_bound and 1 <= q <= den_bound; monomials have total degree
 * <= deg_cap; trig modes have |k|_inf <= freq_cap.
 */

#include <cstdint>
#include <random>
#include <vector>

#include "leibform/cohomology.hpp"
#include "leibform/diffop.hpp"
#include "leibform/torus.hpp"

namespace leibform {

struct RandomCaps {
    int deg_cap = 3;
    int freq_cap = 2;
    long num_bound = 5;
    long den_bound = 3;
    int max_terms = 3;
};

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    /// Uniform-ish integer in [lo, hi] by modulo reduction.
    long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
    bool coin() { return (next() & 1U) != 0; }

    Rational rational(const RandomCaps& caps);
    Rational nonzero_rational(const RandomCaps& caps);
    GaussianRational gaussian(const RandomCaps& caps);

private:
    std::mt19937_64 eng_;
};

MultiIndex random_exponent(Rng& rng, int n, int max_degree);
MultiIndex random_frequency(Rng& rng, int n, int freq_cap);

PolyCoeff random_poly(Rng& rng, int n, const RandomCaps& caps);
TrigCoeff random_trig(Rng& rng, int n, const RandomCaps& caps);

inline PolyCoeff random_coeff(Rng& rng, int n, const RandomCaps& caps, const PolyCoeff*) { return random_poly(rng, n, caps); }
inline TrigCoeff random_coeff(Rng& rng, int n, const RandomCaps& caps, const TrigCoeff*) { return random_trig(rng, n, caps); }

template <DifferentialAlgebra C, class Kind>
Graded<C, Kind> random_graded(Rng& rng, int n, int k, const RandomCaps& caps) {
    Graded<C, Kind> out(n, k);
    if (!out.in_range()) return out;
    const auto sets = subsets_of_size(n, k);
    const long terms = rng.range(1, caps.max_terms);
    for (long t = 0; t < terms; ++t) {
        const IndexSet I = sets[static_cast<std::size_t>(rng.range(0, static_cast<long>(sets.size()) - 1))];
        out.add_term(I, random_coeff(rng, n, caps, static_cast<const C*>(nullptr)));
    }
    return out;
}

template <DifferentialAlgebra C>
Form<C> random_form(Rng& rng, int n, int k, const RandomCaps& caps) {
    return random_graded<C, FormKind>(rng, n, k, caps);
}

template <DifferentialAlgebra C>
MultiVec<C> random_multivec(Rng& rng, int n, int k, const RandomCaps& caps) {
    return random_graded<C, VecKind>(rng, n, k, caps);
}

template <DifferentialAlgebra C>
VectorField<C> random_field(Rng& rng, int n, const RandomCaps& caps) {
    return random_graded<C, VecKind>(rng, n, 1, caps);
}

/// k random vector fields, each with a single component, for decomposable inputs.
template <DifferentialAlgebra C>
std::vector<VectorField<C>> random_factors(Rng& rng, int n, int k, const RandomCaps& caps) {
    RandomCaps small = caps;
    small.max_terms = std::max(1, caps.max_terms - 1);
    std::vector<VectorField<C>> out;
    for (int i = 0; i < k; ++i) out.push_back(random_field<C>(rng, n, small));
    return out;
}

/// Divergence-free trig field sharp(d beta), plus a random constant field when with_constant.
TField random_divfree_trig(Rng& rng, int n, const RandomCaps& caps, bool with_constant);

/// Closed constant-coefficient 2-form with small integer coefficients.
TForm random_constant_two_form(Rng& rng, int n);

/// Random operator on (k+1)-forms of order <= max_order with output width `width`.
DiffOp random_diffop(Rng& rng, int n, int degree, int width, int max_order, const RandomCaps& caps);

/// Random dense cochain with small integer values.
Cochain random_cochain(Rng& rng, int arity, std::size_t alg_dim, std::size_t mod_dim, bool alternating);

}  // namespace leibform
