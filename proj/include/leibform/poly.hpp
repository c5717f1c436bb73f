#pragma once

/**
 * @file poly.hpp
 * @brief Sparse multivariate polynomials with rational coefficients on R^n.
 */

#include <map>
#include <string>

#include "leibform/index.hpp"
#include "leibform/rational.hpp"

namespace leibform {

/// Polynomial in x1..xn. No zero coefficient is ever stored.
class PolyCoeff {
public:
    using Scalar = Rational;
    using TermMap = std::map<MultiIndex, Rational, GrlexLess>;

    static constexpr const char* ring_name = "poly";

    explicit PolyCoeff(int dim = 1) : dim_(dim) { check_dim(dim); }

    static PolyCoeff zero(int dim) { return PolyCoeff(dim); }
    static PolyCoeff constant(int dim, const Rational& c);
    static PolyCoeff variable(int dim, int axis);
    static PolyCoeff monomial(int dim, const MultiIndex& exponent, const Rational& c = Rational(1));

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    /// Maximal total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous(int deg) const;
    Rational coefficient(const MultiIndex& exponent) const;

    /// Adds c x^exponent, pruning the entry if it cancels.
    void add_term(const MultiIndex& exponent, const Rational& c);

    /// Exact partial derivative in `axis` (0-based). Throws std::out_of_range.
    PolyCoeff derive(int axis) const;

    /// h with derive(h, axis) == *this and no term constant in x_axis.
    PolyCoeff primitive(int axis) const;

    /// Multiplies by x^shift.
    PolyCoeff shifted(const MultiIndex& shift) const;

    PolyCoeff operator-() const;
    PolyCoeff& operator+=(const PolyCoeff& o);
    PolyCoeff& operator-=(const PolyCoeff& o);
    PolyCoeff& operator*=(const Rational& r);

    friend PolyCoeff operator+(PolyCoeff a, const PolyCoeff& b) { return a += b; }
    friend PolyCoeff operator-(PolyCoeff a, const PolyCoeff& b) { return a -= b; }
    friend PolyCoeff operator*(const PolyCoeff& a, const PolyCoeff& b);
    friend PolyCoeff operator*(PolyCoeff a, const Rational& r) { return a *= r; }
    friend PolyCoeff operator*(const Rational& r, PolyCoeff a) { return a *= r; }

    friend bool operator==(const PolyCoeff& a, const PolyCoeff& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

private:
    void check_same_dim(const PolyCoeff& o) const;

    int dim_;
    TermMap terms_;
};

/// Right inverse of derive in `axis` (0-based).
PolyCoeff primitive_in_axis(const PolyCoeff& f, int axis);

}  // namespace leibform
