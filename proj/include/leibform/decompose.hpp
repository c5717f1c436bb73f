#pragma once

/**
 * @file decompose.hpp
 * @brief Explicit bracket and square decompositions on the polynomial model.
 *
 * Bump functions of the compact-support constructions are replaced by their
 * polynomial cores: every polynomial is a global x-derivative, so no
 * support or mass bookkeeping is needed.
 */

#include <cstddef>
#include <vector>

#include "leibform/cartan.hpp"

namespace leibform {

using PForm = Form<PolyCoeff>;
using PVec = MultiVec<PolyCoeff>;
using PField = VectorField<PolyCoeff>;

struct BracketPair {
    PVec left_bivector;
    PVec right_bivector;
    PForm left;   // flat(left_bivector)
    PForm right;  // flat(right_bivector)
};

struct BracketWitness {
    std::vector<BracketPair> pairs;
    PForm target;

    std::size_t count() const { return pairs.size(); }
    /// Sum of brackets, re-evaluated from scratch.
    PForm evaluate() const;
    bool verify() const { return evaluate() == target; }
};

struct SquareTerm {
    PField X;  // alpha = flat(X ^ Y)
    PField Y;
    PForm alpha;
};

struct SquareWitness {
    std::vector<SquareTerm> terms;
    PForm target;

    std::size_t count() const { return terms.size(); }
    /// Sum of iota_{X_alpha} alpha.
    PForm evaluate() const;
    bool verify() const { return evaluate() == target; }
};

/// C(n,2) * (n+1)
std::size_t bracket_bound(int n);
/// 4 * C(n,3)
std::size_t square_bound(int n);

/// One bracket pair per bivector component g e_a ^ e_b.
BracketWitness commutator_decompose(const PVec& B);

/// One decomposable potential per coordinate triple carrying a nonzero component of b.
SquareWitness square_decompose(const PForm& b);

/// Potentials alpha_i with sum [alpha_i, alpha_i] = c, given c = d b. Throws if c != d b.
std::vector<PForm> squares_of_exact(const PForm& c, const PForm& b);

/// iota_{X_alpha} alpha against -iota_{[X,Y] ^ X ^ Y} mu for alpha = flat(X ^ Y).
bool contraction_identity_holds(const SquareTerm& t);

}  // namespace leibform
