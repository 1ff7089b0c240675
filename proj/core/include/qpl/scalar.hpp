#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "qpl/errors.hpp"

namespace qpl {

using Int = std::int64_t;
using Rational = mpq_class;

/// Parse "num/den" (or "num") into a canonical rational.
Rational parse_rational(const std::string& text);

/// Format as "num/den", or "num" when the denominator is 1.
std::string format_rational(const Rational& value);

/// Exact Gaussian-rational scalar re + im*i.
///
/// All arithmetic is exact field arithmetic; nothing in this class rounds.
/// Products against exact-zero components are skipped.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(int value) : re_(value), im_(0) {}  // NOLINT: implicit by design
    Scalar(Int value) : re_(Rational(static_cast<long>(value))), im_(0) {}
    explicit Scalar(Rational re) : re_(std::move(re)), im_(0) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return sgn(im_) == 0 && re_ == 1; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }

    /// Squared modulus re^2 + im^2.
    Rational abs_sq() const;

    std::complex<double> to_complex() const {
        return {re_.get_d(), im_.get_d()};
    }

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator-(const Scalar& value) {
        return Scalar(-value.re_, -value.im_);
    }
    friend Scalar operator*(const Scalar& lhs, const Scalar& rhs);
    /// Exact division; BadParameter on zero divisor.
    friend Scalar operator/(const Scalar& lhs, const Scalar& rhs);

    friend bool operator==(const Scalar& lhs, const Scalar& rhs) {
        return lhs.re_ == rhs.re_ && lhs.im_ == rhs.im_;
    }
    friend bool operator!=(const Scalar& lhs, const Scalar& rhs) {
        return !(lhs == rhs);
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& value);

private:
    Rational re_, im_;
};

/// Integer power; negative exponents require an invertible base (unit modulus
/// or any nonzero scalar -- uses exact division).
Scalar pow(const Scalar& base, Int exponent);

}  // namespace qpl
