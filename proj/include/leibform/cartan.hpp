#pragma once

/**
 * @file cartan.hpp
 * @brief Cartan calculus on forms and multivector fields for the standard volume form.
 *
 * Contraction convention: iota_{A ^ B} mu = iota_B iota_A mu. Concretely,
 * iota_{e_{i1} ^ ... ^ e_{ik}} contracts e_{i1} first.
 *
 * Two families of routes are provided on purpose:
 *  - definitional: delta = sharp o d o flat, X_alpha = sharp(d alpha),
 *    [alpha, beta] = L_{X_alpha} beta;
 *  - explicit multivector formulas on decomposable inputs (the double-sum
 *    formula for delta, the three-term formula for X_alpha, and the two
 *    expansions of the bivector bracket).
 * The test suites check that both routes agree.
 */

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "leibform/graded.hpp"

namespace leibform {

/// Raised by operations that require an explicitly decomposable multivector.
class NotDecomposableError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

template <class T>
void check_same_dim(const T& a, const char* op, int dim) {
    if (a.dim() != dim) throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}

/// Sign of replacing slot `old_axis` of the basis element over `index` by `new_axis`,
/// expressed relative to the sorted basis element over (index \ old) u new. 0 if degenerate.
inline int replacement_sign(IndexSet index, int old_axis, int new_axis) {
    const IndexSet rest = index & ~bit(old_axis);
    if (contains(rest, new_axis)) return 0;
    return parity_sign(count_below(index, old_axis) + count_below(rest, new_axis));
}

}  // namespace detail

// --- exterior algebra ---------------------------------------------------------

/// Exterior product; identical algebra for forms and multivectors.
template <DifferentialAlgebra C, class Kind>
Graded<C, Kind> wedge(const Graded<C, Kind>& a, const Graded<C, Kind>& b) {
    detail::check_same_dim(b, "wedge", a.dim());
    const int n = a.dim();
    Graded<C, Kind> out(n, a.degree() + b.degree());
    if (!out.in_range()) return out;
    for (const auto& [ia, ca] : a.terms())
        for (const auto& [ib, cb] : b.terms()) {
            const int s = wedge_sign(ia, ib);
            if (s == 0) continue;
            C prod = ca * cb;
            out.add_term(ia | ib, s > 0 ? prod : -prod);
        }
    return out;
}

/// Applies a vector field to a function: X(f) = sum_i X^i d_i f.
template <DifferentialAlgebra C>
C apply(const VectorField<C>& X, const C& f) {
    if (X.degree() != 1) throw std::invalid_argument("apply: expected a vector field");
    C out = C::zero(X.dim());
    for (const auto& [i, xi] : X.terms()) out += xi * f.derive(std::countr_zero(i));
    return out;
}

/// de Rham differential.
template <DifferentialAlgebra C>
Form<C> d(const Form<C>& a) {
    const int n = a.dim();
    Form<C> out(n, a.degree() + 1);
    if (!out.in_range()) return out;
    for (const auto& [idx, c] : a.terms())
        for (int j = 0; j < n; ++j) {
            if (contains(idx, j)) continue;
            C dc = c.derive(j);
            if (dc.is_zero()) continue;
            out.add_term(idx | bit(j), count_below(idx, j) % 2 ? -dc : dc);
        }
    return out;
}

/// iota_A w. Requires deg A <= deg w.
template <DifferentialAlgebra C>
Form<C> contract(const MultiVec<C>& A, const Form<C>& w) {
    detail::check_same_dim(w, "contract", A.dim());
    if (A.degree() > w.degree())
        throw std::invalid_argument("contract: multivector degree " + std::to_string(A.degree()) +
                                    " exceeds form degree " + std::to_string(w.degree()));
    Form<C> out(A.dim(), w.degree() - A.degree());
    for (const auto& [ia, ca] : A.terms())
        for (const auto& [iw, cw] : w.terms()) {
            if ((ia & iw) != ia) continue;
            C prod = ca * cw;
            out.add_term(iw & ~ia, contraction_sign(ia, iw) > 0 ? prod : -prod);
        }
    return out;
}

/// A -> iota_A mu.
template <DifferentialAlgebra C>
Form<C> flat(const MultiVec<C>& A) {
    return contract(A, volume_form<C>(A.dim()));
}

/// Inverse of flat.
template <DifferentialAlgebra C>
MultiVec<C> sharp(const Form<C>& w) {
    const int n = w.dim();
    MultiVec<C> out(n, n - w.degree());
    const IndexSet all = full_set(n);
    for (const auto& [iw, c] : w.terms()) {
        const IndexSet comp = all & ~iw;
        out.add_term(comp, contraction_sign(comp, all) > 0 ? c : -c);
    }
    return out;
}

// --- vector fields -------------------------------------------------------------

template <DifferentialAlgebra C>
C divergence(const VectorField<C>& X) {
    if (X.degree() != 1) throw std::invalid_argument("divergence: expected a vector field");
    C out = C::zero(X.dim());
    for (const auto& [i, xi] : X.terms()) out += xi.derive(std::countr_zero(i));
    return out;
}

template <DifferentialAlgebra C>
VectorField<C> lie_bracket(const VectorField<C>& X, const VectorField<C>& Y) {
    if (X.degree() != 1 || Y.degree() != 1) throw std::invalid_argument("lie_bracket: expected vector fields");
    detail::check_same_dim(Y, "lie_bracket", X.dim());
    VectorField<C> out(X.dim(), 1);
    for (const auto& [j, yj] : Y.terms()) out.add_term(j, apply(X, yj));
    for (const auto& [j, xj] : X.terms()) out.add_term(j, -apply(Y, xj));
    return out;
}

/// L_X w by the coordinate formula (derivative of coefficients plus the action on each dx slot).
template <DifferentialAlgebra C>
Form<C> lie_derivative(const VectorField<C>& X, const Form<C>& w) {
    if (X.degree() != 1) throw std::invalid_argument("lie_derivative: expected a vector field");
    detail::check_same_dim(w, "lie_derivative", X.dim());
    const int n = X.dim();
    Form<C> out(n, w.degree());
    for (const auto& [idx, c] : w.terms()) {
        out.add_term(idx, apply(X, c));
        for (int m : elements(idx)) {
            const C xm = X.component(bit(m));
            if (xm.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                const int s = detail::replacement_sign(idx, m, j);
                if (s == 0) continue;
                C term = c * xm.derive(j);
                if (term.is_zero()) continue;
                out.add_term((idx & ~bit(m)) | bit(j), s > 0 ? term : -term);
            }
        }
    }
    return out;
}

/// L_X A = [X, A] (Schouten bracket with a vector field).
template <DifferentialAlgebra C>
MultiVec<C> lie_derivative(const VectorField<C>& X, const MultiVec<C>& A) {
    if (X.degree() != 1) throw std::invalid_argument("lie_derivative: expected a vector field");
    detail::check_same_dim(A, "lie_derivative", X.dim());
    const int n = X.dim();
    MultiVec<C> out(n, A.degree());
    for (const auto& [idx, c] : A.terms()) {
        out.add_term(idx, apply(X, c));
        // [X, e_m] = -sum_j (d_m X^j) e_j
        for (int m : elements(idx))
            for (const auto& [jb, xj] : X.terms()) {
                const int j = std::countr_zero(jb);
                const int s = detail::replacement_sign(idx, m, j);
                if (s == 0) continue;
                C term = c * xj.derive(m);
                if (term.is_zero()) continue;
                out.add_term((idx & ~bit(m)) | jb, s > 0 ? -term : term);
            }
    }
    return out;
}

// --- volume-form calculus -------------------------------------------------------

/// delta(A) = sharp(d(flat(A))), lowering multivector degree by one.
template <DifferentialAlgebra C>
MultiVec<C> delta(const MultiVec<C>& A) {
    if (A.degree() < 1) throw std::invalid_argument("delta: degree must be at least 1");
    return sharp(d(flat(A)));
}

template <DifferentialAlgebra C>
void require_potential_degree(const Form<C>& a, const char* op) {
    if (a.degree() != a.dim() - 2)
        throw std::invalid_argument(std::string(op) + ": expected a form of degree n-2 = " +
                                    std::to_string(a.dim() - 2) + ", got " + std::to_string(a.degree()));
}

/// X_alpha: the vector field with iota_{X_alpha} mu = d alpha.
template <DifferentialAlgebra C>
VectorField<C> hamiltonian_field(const Form<C>& a) {
    require_potential_degree(a, "hamiltonian_field");
    return sharp(d(a));
}

/// [alpha, beta] = L_{X_alpha} beta on (n-2)-forms.
template <DifferentialAlgebra C>
Form<C> leibniz_bracket(const Form<C>& a, const Form<C>& b) {
    require_potential_degree(b, "leibniz_bracket");
    return lie_derivative(hamiltonian_field(a), b);
}

// --- explicit formulas on decomposable multivectors ----------------------------------

template <DifferentialAlgebra C>
MultiVec<C> wedge_all(const std::vector<VectorField<C>>& factors, int dim) {
    MultiVec<C> out = MultiVec<C>::basis(dim, 0, C::constant(dim, 1));
    for (const auto& f : factors) out = wedge(out, f);
    return out;
}

/// delta(X_1 ^ ... ^ X_k) by the double-sum formula over brackets and divergences.
template <DifferentialAlgebra C>
MultiVec<C> delta_decomposable(const std::vector<VectorField<C>>& factors) {
    const int k = static_cast<int>(factors.size());
    if (k < 1) throw std::invalid_argument("delta_decomposable: need at least one factor");
    const int n = factors.front().dim();
    for (const auto& f : factors)
        if (f.degree() != 1 || f.dim() != n) throw NotDecomposableError("delta_decomposable: factors must be vector fields");

    auto omit = [&](std::initializer_list<int> skip) {
        std::vector<VectorField<C>> rest;
        for (int i = 0; i < k; ++i)
            if (std::find(skip.begin(), skip.end(), i) == skip.end()) rest.push_back(factors[static_cast<std::size_t>(i)]);
        return rest;
    };

    MultiVec<C> out(n, k - 1);
    // 1-based i < j in the printed formula; sign (-1)^(k+i+j) is invariant under the shift.
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            auto rest = omit({i, j});
            rest.insert(rest.begin(), lie_bracket(factors[static_cast<std::size_t>(i)], factors[static_cast<std::size_t>(j)]));
            MultiVec<C> term = wedge_all(rest, n);
            out += parity_sign(k + i + j) > 0 ? term : -term;
        }
    for (int i = 0; i < k; ++i) {
        MultiVec<C> term = wedge_all(omit({i}), n) * divergence(factors[static_cast<std::size_t>(i)]);
        // (-1)^(k + i) with 1-based i is (-1)^(k + i + 1) here.
        out += parity_sign(k + i + 1) > 0 ? term : -term;
    }
    return out;
}

/// Splits a single-term multivector f e_{i1} ^ ... ^ e_{ik} into the factors
/// (f e_{i1}, e_{i2}, ..., e_{ik}). Anything else is rejected without attempting factorization.
template <DifferentialAlgebra C>
std::vector<VectorField<C>> trivial_factors(const MultiVec<C>& A) {
    if (A.degree() < 1) throw NotDecomposableError("trivial_factors: degree must be at least 1");
    if (A.size() != 1) throw NotDecomposableError("multivector is not a single decomposable term");
    const int n = A.dim();
    const auto& [idx, c] = *A.terms().begin();
    std::vector<VectorField<C>> factors;
    bool first = true;
    for (int i : elements(idx)) {
        factors.push_back(VectorField<C>::basis(n, bit(i), first ? c : C::constant(n, 1)));
        first = false;
    }
    return factors;
}

template <DifferentialAlgebra C>
MultiVec<C> delta_decomposable(const MultiVec<C>& A) {
    return delta_decomposable(trivial_factors(A));
}

/// X_alpha for alpha = iota_{X1 ^ X2} mu: div(X2) X1 - div(X1) X2 - [X1, X2].
template <DifferentialAlgebra C>
VectorField<C> hamiltonian_field_bivector(const VectorField<C>& X1, const VectorField<C>& X2) {
    return X1 * divergence(X2) - X2 * divergence(X1) - lie_bracket(X1, X2);
}

/// [X1 ^ X2, Y1 ^ Y2] = [delta(X1 ^ X2), Y1] ^ Y2 + Y1 ^ [delta(X1 ^ X2), Y2].
template <DifferentialAlgebra C>
MultiVec<C> bivector_bracket(const VectorField<C>& X1, const VectorField<C>& X2, const VectorField<C>& Y1,
                             const VectorField<C>& Y2) {
    const VectorField<C> Xa = hamiltonian_field_bivector(X1, X2);
    return wedge(lie_bracket(Xa, Y1), Y2) + wedge(Y1, lie_bracket(Xa, Y2));
}

/// The ten-term expansion of the bivector bracket in brackets and divergences.
template <DifferentialAlgebra C>
MultiVec<C> bivector_bracket_expanded(const VectorField<C>& X1, const VectorField<C>& X2, const VectorField<C>& Y1,
                                      const VectorField<C>& Y2) {
    const VectorField<C> X12 = lie_bracket(X1, X2);
    const C div1 = divergence(X1);
    const C div2 = divergence(X2);
    MultiVec<C> out = -wedge(lie_bracket(X12, Y1), Y2) - wedge(Y1, lie_bracket(X12, Y2));
    out -= wedge(lie_bracket(X2, Y1), Y2) * div1 + wedge(Y1, lie_bracket(X2, Y2)) * div1;
    out += wedge(X2, Y2) * apply(Y1, div1) + wedge(Y1, X2) * apply(Y2, div1);
    out += wedge(lie_bracket(X1, Y1), Y2) * div2 + wedge(Y1, lie_bracket(X1, Y2)) * div2;
    out -= wedge(X1, Y2) * apply(Y1, div2) + wedge(Y1, X1) * apply(Y2, div2);
    return out;
}

}  // namespace leibform
