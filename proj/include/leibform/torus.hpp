#pragma once

/**
 * @file torus.hpp
 * @brief The central extension of exact divergence-free fields on T^n, mode by mode.
 *
 * h(c e_k dx_I) = e_k iota_K dx_I / |k|^2 with K = sum_j k_j d_j, so that
 * dh + hd = id on every nonconstant mode. Quotient classes are represented by
 * the normal form const(a) + h(da).
 */

#include <utility>
#include <vector>

#include "leibform/cartan.hpp"
#include "leibform/linalg.hpp"

namespace leibform {

using TForm = Form<TrigCoeff>;
using TVec = MultiVec<TrigCoeff>;
using TField = VectorField<TrigCoeff>;

/// Mode-wise homotopy; lowers degree by one and kills constant modes.
TForm homotopy(const TForm& a);

/// Zero-mode part of every coefficient.
TForm constant_mode(const TForm& a);

struct QuotientClass {
    TForm rep;
    TForm original;
};

/// rep = constant_mode(a) + h(d a); invariant under a -> a + d b.
QuotientClass normal_form(const TForm& a);

/// Mean-zero test for a divergence-free field. Throws on nonzero divergence.
bool is_exact_divfree(const TField& X);

/// alpha = h(iota_X mu) with d alpha = iota_X mu. Throws on non-exact input.
TForm potential(const TField& X);

/// Class of iota_{X_A} iota_{X_B} mu.
QuotientClass central_bracket(const QuotientClass& A, const QuotientClass& B);

/// integral of sigma(X, Y) over T^n. sigma must be a closed 2-form, X and Y divergence-free.
GaussianRational lichnerowicz(const TForm& sigma, const TField& X, const TField& Y);

/// Coordinate (n-2)-subtorus {x_a = x_b = 0}; `fixed` holds the two fixed axes.
struct CycleSpec {
    IndexSet fixed = 0;
    int dim = 0;

    static CycleSpec from_fixed(int dim, int a, int b);
    IndexSet free_axes() const { return full_set(dim) & ~fixed; }
};

/// Integral of an (n-2)-form over a coordinate subtorus (unit periods, fixed coordinates at 0).
GaussianRational integrate_over_cycle(const CycleSpec& C, const TForm& w);

/// integral over C of iota_X iota_Y mu.
GaussianRational cycle_cocycle(const CycleSpec& C, const TField& X, const TField& Y);

/// (omega_sigma(X_a, X_b), -integral([a, b] ^ sigma)). The two agree because sigma is closed.
std::pair<GaussianRational, GaussianRational> cocycle_vs_bracket(const TForm& sigma, const TForm& a, const TForm& b);

/// Entry (I, C) = integral over C of dx_I for the constant (n-2)-forms and all coordinate cycles.
struct PairingMatrix {
    std::vector<IndexSet> center;   // rows
    std::vector<CycleSpec> cycles;  // columns
    DenseMatrix values;
    std::size_t rank() const { return leibform::rank(values); }
};

PairingMatrix pairing_matrix(int n);

}  // namespace leibform
