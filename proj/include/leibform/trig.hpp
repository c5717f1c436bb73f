#pragma once

/**
 * @file trig.hpp
 * @brief Finite Fourier series on the unit-period torus T^n.
 *
 * Derivations are scaled: D_j e_k = k_j e_k. The 2*pi*i factor of the honest
 * derivative is absorbed so that all arithmetic stays in Q(i). The total
 * volume is normalized, so integrating picks out the zero mode.
 */

#include <map>

#include "leibform/index.hpp"
#include "leibform/rational.hpp"

namespace leibform {

class TrigCoeff {
public:
    using Scalar = GaussianRational;
    using ModeMap = std::map<MultiIndex, GaussianRational, GrlexLess>;

    static constexpr const char* ring_name = "trig";

    explicit TrigCoeff(int dim = 1) : dim_(dim) { check_dim(dim); }

    static TrigCoeff zero(int dim) { return TrigCoeff(dim); }
    static TrigCoeff constant(int dim, const GaussianRational& c);
    static TrigCoeff mode(int dim, const MultiIndex& frequency, const GaussianRational& c = GaussianRational(1));

    int dim() const { return dim_; }
    bool is_zero() const { return modes_.empty(); }
    const ModeMap& modes() const { return modes_; }
    std::size_t size() const { return modes_.size(); }

    GaussianRational coefficient(const MultiIndex& frequency) const;
    void add_mode(const MultiIndex& frequency, const GaussianRational& c);

    /// Largest |k_j| over stored modes; 0 for constants and zero.
    int max_frequency() const;

    /// Scaled derivation in `axis` (0-based). Throws std::out_of_range.
    TrigCoeff derive(int axis) const;

    /// Coefficient of the zero mode.
    GaussianRational integral() const { return coefficient(MultiIndex{}); }

    /// Pointwise complex conjugate: c_k e_k -> conj(c_k) e_{-k}.
    TrigCoeff conj() const;

    /// True iff coefficient(-k) == conj(coefficient(k)) for every k.
    bool is_real() const;

    /// The zero-mode part as a trig coefficient.
    TrigCoeff constant_part() const;

    TrigCoeff operator-() const;
    TrigCoeff& operator+=(const TrigCoeff& o);
    TrigCoeff& operator-=(const TrigCoeff& o);
    TrigCoeff& operator*=(const Rational& r);
    TrigCoeff& operator*=(const GaussianRational& z);

    friend TrigCoeff operator+(TrigCoeff a, const TrigCoeff& b) { return a += b; }
    friend TrigCoeff operator-(TrigCoeff a, const TrigCoeff& b) { return a -= b; }
    /// Convolution of mode maps.
    friend TrigCoeff operator*(const TrigCoeff& a, const TrigCoeff& b);
    friend TrigCoeff operator*(TrigCoeff a, const Rational& r) { return a *= r; }
    friend TrigCoeff operator*(const Rational& r, TrigCoeff a) { return a *= r; }
    friend TrigCoeff operator*(TrigCoeff a, const GaussianRational& z) { return a *= z; }

    friend bool operator==(const TrigCoeff& a, const TrigCoeff& b) {
        return a.dim_ == b.dim_ && a.modes_ == b.modes_;
    }

private:
    void check_same_dim(const TrigCoeff& o) const;

    int dim_;
    ModeMap modes_;
};

/// Total integral over T^n (unit volume): the zero-mode coefficient.
inline GaussianRational integrate_torus(const TrigCoeff& f) { return f.integral(); }

}  // namespace leibform
