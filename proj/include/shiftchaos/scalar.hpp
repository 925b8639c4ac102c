#pragma once

// Exact scalars of the field F (real or complex rationals).
//
// Complex magnitudes are never formed exactly; every comparison goes
// through |s|^2, which is always rational.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace shiftchaos {

using Rational = mpq_class;

/// Natural log of a positive rational. Safe for numbers far outside the
/// double range.
double log_of(const Rational& q);

/// q^e for a rational and a signed exponent (q != 0 when e < 0).
Rational pow(const Rational& q, std::int64_t e);

class Scalar {
 public:
  Scalar() = default;
  Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Scalar(Rational re, Rational im);
  Scalar(long v) : re_(v) {}  // NOLINT
  Scalar(int v) : re_(v) {}   // NOLINT

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  /// |s|^2, exact.
  Rational norm_sq() const { return re_ * re_ + im_ * im_; }
  /// ln|s|; -inf for zero.
  double log_abs() const;

  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar inverse() const;
  /// s^e, with 0^0 = 1. Negative exponents require s != 0.
  Scalar pow(std::int64_t e) const;

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical literal: "p/q" (or "p" when q = 1), complex as
  /// "p/q+r/s i" / "p/q-r/s i".
  std::string str() const;
  static Scalar parse(std::string_view text);

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Canonical "p/q" (or "p") form of a rational.
std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

}  // namespace shiftchaos
