#pragma once

/**
 * @file cohomology.hpp
 * @brief Chevalley-Eilenberg and Loday cochain complexes over finite bases.
 *
 * Cochains are dense: a q-cochain with values in an m-dimensional module
 * stores dim^q * m rationals, tuple-major. Ranks are exact.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "leibform/linalg.hpp"

namespace leibform {

enum class AlgebraKind {
    lie,        // antisymmetric, Jacobi on every triple
    leibniz,    // left Leibniz identity on every triple
    truncated,  // graded window of a Lie algebra; Jacobi only inside the window
};

std::string to_string(AlgebraKind k);

/// Bilinear bracket on a finite basis, identities checked at construction.
class FiniteAlgebra {
public:
    /// structure[i][j] = [b_i, b_j] in basis coordinates.
    /// For `truncated`, `grading` gives each basis element's degree and `window` the top degree.
    FiniteAlgebra(std::vector<std::string> labels, std::vector<std::vector<SparseVector>> structure, AlgebraKind kind,
                  std::vector<int> grading = {}, int window = -1);

    std::size_t dim() const { return labels_.size(); }
    AlgebraKind kind() const { return kind_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const SparseVector& bracket(std::size_t i, std::size_t j) const { return structure_[i][j]; }
    SparseVector bracket(const SparseVector& u, const SparseVector& v) const;

    /// Triples on which the declared identity was checked (all triples unless truncated).
    std::size_t checked_triples() const { return checked_triples_; }
    int window() const { return window_; }

    /// Abelian algebra of the given dimension.
    static FiniteAlgebra abelian(std::size_t dim);

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<SparseVector>> structure_;
    AlgebraKind kind_;
    std::vector<int> grading_;
    int window_;
    std::size_t checked_triples_ = 0;
};

/// sl(2) with basis h, e, f.
FiniteAlgebra sl2_algebra();

/// sl(2) x R^2 with [(x,m),(y,n)] = ([x,y], x.n): Leibniz but not Lie.
FiniteAlgebra hemisemidirect_sl2();

/// Left module: action[i] is the matrix of b_i on the module (rows = output coordinates).
struct Module {
    std::string name;
    std::size_t dim = 0;
    std::vector<DenseMatrix> action;
};

Module trivial_module(const FiniteAlgebra& g);
Module adjoint_module(const FiniteAlgebra& g);
/// Dual of the adjoint module: (x . T)(y) = -T([x, y]).
Module coadjoint_module(const FiniteAlgebra& g);

/// [rho(x), rho(y)] == rho([x, y]) on all basis pairs.
bool is_representation(const FiniteAlgebra& g, const Module& m);

class Cochain {
public:
    Cochain(int arity, std::size_t alg_dim, std::size_t mod_dim);

    int arity() const { return arity_; }
    std::size_t alg_dim() const { return alg_dim_; }
    std::size_t mod_dim() const { return mod_dim_; }
    std::size_t tuple_count() const { return values_.size() / mod_dim_; }

    Rational& at(const std::vector<std::size_t>& tuple, std::size_t r);
    const Rational& at(const std::vector<std::size_t>& tuple, std::size_t r) const;
    Rational& at_flat(std::size_t tuple_index, std::size_t r) { return values_[tuple_index * mod_dim_ + r]; }
    const Rational& at_flat(std::size_t tuple_index, std::size_t r) const { return values_[tuple_index * mod_dim_ + r]; }

    std::vector<std::size_t> unflatten(std::size_t tuple_index) const;
    std::size_t flatten(const std::vector<std::size_t>& tuple) const;

    bool is_zero() const;
    bool is_alternating() const;

    const std::vector<Rational>& values() const { return values_; }

    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.arity_ == b.arity_ && a.alg_dim_ == b.alg_dim_ && a.mod_dim_ == b.mod_dim_ && a.values_ == b.values_;
    }

private:
    int arity_;
    std::size_t alg_dim_;
    std::size_t mod_dim_;
    std::vector<Rational> values_;
};

/// Largest arity a dense cochain may have.
inline constexpr int kMaxArity = 4;

/// Chevalley-Eilenberg differential, including the action term.
Cochain ce_d(const Cochain& c, const FiniteAlgebra& g, const Module& m);

/// Loday differential: [x_i, x_j] replaces x_j, sign (-1)^i, plus the action term.
Cochain loday_d(const Cochain& c, const FiniteAlgebra& g, const Module& m);

/// psi-hat(x_1..x_{q-1})(y) = psi(x_1..x_{q-1}, y). Needs trivial scalar values.
Cochain hat(const Cochain& c);
/// Inverse of hat.
Cochain unhat(const Cochain& c);

/// Alternating cochain from coordinates on strictly increasing tuples (tuple-major, then module index).
Cochain alternating_from_coordinates(int arity, std::size_t alg_dim, std::size_t mod_dim,
                                     const std::vector<Rational>& coords);

struct CohomologyDims {
    std::size_t cochains = 0;
    std::size_t rank_in = 0;   // rank of d into degree q
    std::size_t rank_out = 0;  // rank of d out of degree q
    std::size_t dim() const { return cochains - rank_out - rank_in; }
};

/// Dimension of H^q by exact ranks. CE on alternating cochains for Lie and truncated
/// algebras, Loday on all multilinear cochains for Leibniz algebras.
CohomologyDims h_dims(const FiniteAlgebra& g, const Module& m, int q);
std::size_t h_dim(const FiniteAlgebra& g, const Module& m, int q);

}  // namespace leibform
