#pragma once

/**
 * @file graded_rep.hpp
 * @brief Homogeneous divergence-free polynomial vector fields and the sl(n) action on them.
 *
 * Coordinates on S^k (x) R^n: column (m, j) <-> x^{sigma_m} d_j with monomials in
 * graded-lex order, column index m * n + j. A field space is the span of a
 * list of weight vectors that have the identity pattern on a set of "free"
 * columns, so coordinates of a member are read off at those columns.
 */

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "leibform/cohomology.hpp"
#include "leibform/decompose.hpp"

namespace leibform {

/// Weight of a weight vector for the diagonal Cartan subalgebra, normalized modulo (1,...,1).
using Weight = std::array<int, kMaxDim>;

Weight normalize_weight(Weight w, int n);

struct FieldSpace {
    int n = 0;
    int k = 0;
    std::vector<MultiIndex> monomials;  // degree-k monomials, graded-lex
    std::map<MultiIndex, std::size_t, GrlexLess> monomial_pos;
    std::vector<int> free_columns;      // one per basis vector
    std::vector<PField> vectors;
    std::vector<Weight> weights;

    std::size_t dim() const { return vectors.size(); }
    int column(std::size_t monomial_index, int axis) const { return static_cast<int>(monomial_index) * n + axis; }
    /// Coefficient vector of a homogeneous degree-k field over all columns.
    SparseVector columns_of(const PField& X) const;
    /// Coordinates of a member of the space in the basis `vectors`.
    std::vector<Rational> coordinates(const PField& X) const;
    bool contains(const PField& X) const;
};

/// Basis of the divergence-free fields with homogeneous degree-k coefficients.
FieldSpace basis_divfree(int n, int k);
/// All fields x^sigma d_j with |sigma| = k.
FieldSpace basis_all_fields(int n, int k);

/// dim = n C(n+k-1, n-1) - C(n+k-2, n-1)
std::size_t divfree_dim_formula(int n, int k);

/// Every bracket of basis elements of degrees k and l lies in the degree k+l-1 space.
bool grading_check(int n, int k, int l);

/// Matrices of a generating family acting on a finite-dimensional space, plus weights.
struct RepMatrix {
    std::vector<DenseMatrix> actions;  // actions[g][row][col]
    std::vector<Weight> weights;       // weight of each space basis vector
    std::vector<Weight> generator_weights;
    std::size_t dim = 0;
};

/// X_1 acting on a field space by the Lie bracket.
RepMatrix action_on_fields(const FieldSpace& gens, const FieldSpace& space);
/// Fields acting on constant m-multivectors e_I by the Lie derivative; only the constant part is kept.
RepMatrix action_on_wedge(const FieldSpace& gens, int m);

/// [A(g), A(h)] == A([g, h]) for all generator pairs (generators from a degree-1 space).
bool commutator_law_holds(const FieldSpace& gens, const RepMatrix& rep);

/// Dimension of the space of linear maps D: source -> target with D A_s(g) = A_t(g) D for all g.
std::size_t equivariant_dim(const RepMatrix& source, const RepMatrix& target);

/// X_1 as an abstract Lie algebra, with the bracket of vector fields.
FiniteAlgebra divfree_algebra(const FieldSpace& space);
/// The module given by a RepMatrix over the algebra of its generators.
Module as_module(const RepMatrix& rep, const std::string& name);

/// X_0 + ... + X_K with brackets landing above degree K dropped. Not a Lie algebra;
/// Jacobi is checked on the triples whose nested brackets stay in the window.
FiniteAlgebra truncated_divfree_algebra(int n, int K);

/// Constant m-vectors under X_0 + ... + X_K, keeping the constant part of L_X e_I.
/// Only the degree-1 piece acts nontrivially, so this is a module for X_1 alone.
Module truncated_wedge_module(int n, int K, int m);

/// dim H^1(sl(n), wedge^m R^n); m = n-2 by default. `trivial` swaps in the trivial module.
std::size_t whitehead_h1(int n, bool trivial = false);

/// Equivariant maps X_k -> wedge^{n-2} R^n.
std::size_t intertwiner_dim(int n, int k);

/// Equivariant endomorphisms of S^k (x) R^n.
std::size_t endo_dim_tensor(int n, int k);

/// The exterior-power action of a matrix A (acting on R^n) on wedge^m, as a derivation.
DenseMatrix wedge_matrix(const DenseMatrix& A, int n, int m);

/// Matrix A of a linear field X = sum_i (sum_j a_ij x_j) d_i.
DenseMatrix linear_field_matrix(const PField& X);

}  // namespace leibform
