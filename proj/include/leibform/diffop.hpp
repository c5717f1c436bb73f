#pragma once

/**
 * @file diffop.hpp
 * @brief Linear differential operators on polynomial forms and their factorization through d.
 *
 * An operator on k-forms is a finite sum D(a) = sum_{I, sigma} (d_sigma a_I) T_{I,sigma}
 * with T_{I,sigma} a fixed-width vector of polynomials. Terms are keyed by
 * (I, sigma) in a sorted map with zero vectors pruned, so equality is syntactic.
 */

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "leibform/decompose.hpp"

namespace leibform {

using PolyVector = std::vector<PolyCoeff>;

struct OpKey {
    IndexSet I = 0;
    MultiIndex sigma{};
    friend bool operator==(const OpKey&, const OpKey&) = default;
};

struct OpKeyLess {
    bool operator()(const OpKey& a, const OpKey& b) const {
        if (a.I != b.I) return LexSetLess{}(a.I, b.I);
        return GrlexLess{}(a.sigma, b.sigma);
    }
};

class DiffOp {
public:
    using TermMap = std::map<OpKey, PolyVector, OpKeyLess>;

    DiffOp(int dim, int degree, int width);

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    int width() const { return width_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// max |sigma|; -1 for the zero operator.
    int order() const;

    void add_term(IndexSet I, const MultiIndex& sigma, const PolyVector& value);

    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);
    DiffOp& operator*=(const Rational& r);
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    friend DiffOp operator*(DiffOp a, const Rational& r) { return a *= r; }
    friend bool operator==(const DiffOp& a, const DiffOp& b) {
        return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.width_ == b.width_ && a.terms_ == b.terms_;
    }

private:
    void check_compatible(const DiffOp& o) const;

    int dim_;
    int degree_;
    int width_;
    TermMap terms_;
};

PolyVector apply(const DiffOp& D, const PForm& a);

/// (compose_d Q)(a) = Q(d a). Q acts on (k+1)-forms; the result acts on k-forms.
DiffOp compose_d(const DiffOp& Q);

/// (compose_iota_euler D)(w) = D(iota_E w). D acts on k-forms; the result acts on (k+1)-forms.
DiffOp compose_iota_euler(const DiffOp& D);

/// Keeps the terms with |sigma| <= l.
DiffOp truncate(const DiffOp& D, int l);

/// Rebuilds the order <= l part of D from its values on all monomial forms of degree <= l.
DiffOp truncate_by_evaluation(const DiffOp& D, int l);

/// All monomial k-forms x^tau dx_I with |tau| <= max_degree (or == exact_degree).
std::vector<PForm> monomial_forms(int n, int k, int max_degree);
std::vector<PForm> monomial_forms_of_degree(int n, int k, int degree);

/// D(a) == 0 for every monomial form of degree <= max_degree.
bool annihilates(const DiffOp& D, int max_degree);

struct FactorStage {
    int l = 0;
    bool property1 = false;  // D_l == Q_l o d
    bool property2 = false;  // D - D_l kills forms of coefficient degree <= l
};

struct Factorization {
    DiffOp Q;
    std::vector<FactorStage> stages;
    int iterations = 0;
    bool verified = false;  // Q o d == D on monomials to degree order(D)+2
};

/// Thrown when D o d != 0.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Q with D = Q o d by the Euler-field induction. Requires k >= 1 and D o d = 0.
Factorization factor_through_d(const DiffOp& D);

/// L_E a == (k + l + 1) a for every monomial k-form with coefficient degree l+1, via the Cartan formula.
bool euler_eigencheck(int k, int l, int n);

/// Euler field sum x_i d_i.
PField euler_field(int n);

/// Coefficient of dx_I as a one-slot operator (the "identity extraction").
DiffOp coefficient_extraction(int n, int k, IndexSet I);

}  // namespace leibform
