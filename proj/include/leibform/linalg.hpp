#pragma once

/**
 * @file linalg.hpp
 * @brief Exact rational linear algebra: incremental sparse row echelon, RREF, kernels.
 *
 * No tolerances anywhere. Vanishing claims (cohomology, intertwiners) are
 * decided by exact rank.
 */

#include <cstddef>
#include <map>
#include <vector>

#include "leibform/rational.hpp"

namespace leibform {

using SparseVector = std::map<int, Rational>;

/// Adds c * v into acc, pruning cancellations.
void axpy(SparseVector& acc, const Rational& c, const SparseVector& v);

/**
 * Row echelon basis built one row at a time. Each stored row has a pivot
 * column with coefficient 1 and no other stored row has a nonzero there.
 */
class SparseEchelon {
public:
    /// Returns true iff `row` was independent of the rows already added.
    bool add(SparseVector row);

    /// Reduces v against the stored rows; the result is zero iff v is in the span.
    SparseVector reduce(SparseVector v) const;

    bool in_span(const SparseVector& v) const { return reduce(v).empty(); }

    std::size_t rank() const { return pivots_.size(); }

    /// Pivot columns in increasing order.
    std::vector<int> pivot_columns() const;

    /// Basis of the solution space {x : row . x = 0 for every stored row} in `num_cols` unknowns.
    /// One vector per free column, with a 1 in that column and 0 in every other free column.
    std::vector<SparseVector> kernel_basis(int num_cols) const;

private:
    void back_substitute_into(SparseVector& row) const;

    std::map<int, SparseVector> pivots_;  // pivot column -> row (fully reduced)
};

/// Dense rows, used where matrices are small.
using DenseMatrix = std::vector<std::vector<Rational>>;

std::size_t rank(const DenseMatrix& m);

/// Kernel of m (as a map R^cols -> R^rows), one vector per free column.
std::vector<std::vector<Rational>> kernel(const DenseMatrix& m, std::size_t cols);

SparseVector to_sparse(const std::vector<Rational>& dense);

}  // namespace leibform
