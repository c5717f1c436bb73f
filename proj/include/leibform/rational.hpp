#pragma once

/**
 * @file rational.hpp
 * @brief Exact scalars: arbitrary-precision rationals and Gaussian rationals.
 *
 * Rational is GMP's mpq_class. Every arithmetic operation keeps values in
 * canonical (reduced, positive denominator) form, so equality is structural.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace leibform {

using Rational = mpq_class;

/// Reduced p/q; throws std::domain_error when q == 0.
Rational make_rational(long num, long den = 1);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

/// Parses "p", "-p", "p/q"; throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Element of Q(i). Field axioms hold exactly; conj is an involution.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long re) : re_(re) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// |z|^2, always a nonnegative rational.
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational re = re_ * o.re_ - im_ * o.im_;
        Rational im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    GaussianRational& operator*=(const Rational& r) {
        re_ *= r;
        im_ *= r;
        return *this;
    }
    /// Throws std::domain_error on division by zero.
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator*(GaussianRational a, const Rational& r) { return a *= r; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

private:
    Rational re_{0};
    Rational im_{0};
};

/// "a", "bi", or "(a+bi)" with rationals printed by to_string.
std::string to_string(const GaussianRational& z);

/// Accepts the forms produced by to_string plus "i", "-i", "3/2i".
GaussianRational parse_gaussian(std::string_view text);

}  // namespace leibform
