#pragma once

/**
 * @file graded.hpp
 * @brief Sparse alternating tensors: differential forms and multivector fields.
 *
 * A Form of degree k stores f_I dx_I over strictly increasing index sets I with
 * |I| = k; a MultiVec stores f_I e_I with e_i = d/dx_i. Degrees outside [0, n]
 * are legal and always hold no terms, so degree-shifting code never branches.
 */

#include <map>
#include <stdexcept>
#include <string>

#include "leibform/coefficient.hpp"
#include "leibform/index.hpp"

namespace leibform {

struct FormKind {
    static constexpr const char* name = "form";
};
struct VecKind {
    static constexpr const char* name = "vec";
};

template <DifferentialAlgebra C, class Kind>
class Graded {
public:
    using Coefficient = C;
    using TermMap = std::map<IndexSet, C, LexSetLess>;

    Graded(int dim, int degree) : dim_(dim), degree_(degree) { check_dim(dim); }

    static Graded zero(int dim, int degree) { return Graded(dim, degree); }

    /// Single basis element c * b_I.
    static Graded basis(int dim, IndexSet index, C coeff) {
        Graded g(dim, set_size(index));
        g.add_term(index, std::move(coeff));
        return g;
    }

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    bool in_range() const { return degree_ >= 0 && degree_ <= dim_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    C component(IndexSet index) const {
        auto it = terms_.find(index);
        return it == terms_.end() ? C::zero(dim_) : it->second;
    }

    void add_term(IndexSet index, const C& coeff) {
        if (index >> dim_) throw std::out_of_range("index set exceeds dimension");
        if (set_size(index) != degree_) throw std::invalid_argument("index set size does not match degree");
        if (coeff.dim() != dim_) throw std::invalid_argument("coefficient dimension mismatch");
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(index, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Graded operator-() const {
        Graded out(*this);
        for (auto& [i, c] : out.terms_) c = -c;
        return out;
    }

    Graded& operator+=(const Graded& o) {
        check_compatible(o);
        for (const auto& [i, c] : o.terms_) add_term(i, c);
        return *this;
    }
    Graded& operator-=(const Graded& o) {
        check_compatible(o);
        for (const auto& [i, c] : o.terms_) add_term(i, -c);
        return *this;
    }

    /// Multiplication by a scalar function.
    Graded& operator*=(const C& f) {
        if (f.dim() != dim_) throw std::invalid_argument("coefficient dimension mismatch");
        TermMap next;
        for (auto& [i, c] : terms_) {
            C p = c * f;
            if (!p.is_zero()) next.emplace(i, std::move(p));
        }
        terms_ = std::move(next);
        return *this;
    }
    Graded& operator*=(const Rational& r) {
        if (sgn(r) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [i, c] : terms_) c = c * r;
        return *this;
    }

    friend Graded operator+(Graded a, const Graded& b) { return a += b; }
    friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
    friend Graded operator*(Graded a, const C& f) { return a *= f; }
    friend Graded operator*(const C& f, Graded a) { return a *= f; }
    friend Graded operator*(Graded a, const Rational& r) { return a *= r; }
    friend Graded operator*(const Rational& r, Graded a) { return a *= r; }

    friend bool operator==(const Graded& a, const Graded& b) {
        return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    void check_compatible(const Graded& o) const {
        if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
        if (o.degree_ != degree_)
            throw std::invalid_argument("degree mismatch: " + std::to_string(degree_) + " vs " +
                                        std::to_string(o.degree_));
    }

private:
    int dim_;
    int degree_;
    TermMap terms_;
};

template <DifferentialAlgebra C>
using Form = Graded<C, FormKind>;

template <DifferentialAlgebra C>
using MultiVec = Graded<C, VecKind>;

/// Degree-1 multivector field.
template <DifferentialAlgebra C>
using VectorField = MultiVec<C>;

/// Builds sum_i f_i e_i from a component list of length dim.
template <DifferentialAlgebra C>
VectorField<C> vector_field(const std::vector<C>& components) {
    const int n = static_cast<int>(components.size());
    VectorField<C> X(n, 1);
    for (int i = 0; i < n; ++i) X.add_term(bit(i), components[static_cast<std::size_t>(i)]);
    return X;
}

/// The volume form dx_1 ^ ... ^ dx_n with unit coefficient.
template <DifferentialAlgebra C>
Form<C> volume_form(int dim) {
    return Form<C>::basis(dim, full_set(dim), C::constant(dim, 1));
}

}  // namespace leibform
