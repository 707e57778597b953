#pragma once

// Exact scalars: arbitrary-precision rationals and Gaussian rationals a + bi.

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace eigenmatrix {

/// GMP rationals are kept canonical (reduced, positive denominator, 0 == 0/1)
/// by every arithmetic operator; `make_rational` canonicalizes explicit p/q.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& numerator, const Integer& denominator);

class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT: implicit from integer literals
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2 = re^2 + im^2.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Total order by (re, im); used to sort spectra deterministically.
std::strong_ordering compare(const GaussianRational& a, const GaussianRational& b);

struct GaussianLess {
  bool operator()(const GaussianRational& a, const GaussianRational& b) const {
    return compare(a, b) < 0;
  }
};

enum class ArithOp { Add, Sub, Mul, Div };

/// Field arithmetic in Q(i). Throws DivisionByZero for x / 0.
GaussianRational gq_arith(const GaussianRational& a, const GaussianRational& b, ArithOp op);

/// Parses the scalar grammar:
///   scalar := real | imag | real imag
///   real   := ['-'] int ['/' posint]
///   imag   := ('+'|'-') [int ['/' posint]] 'i'   (a standalone imag may omit the sign)
GaussianRational gq_parse(std::string_view text);

/// Inverse of gq_parse: "3", "-3/2i", "2-i", "1/2+i".
std::string gq_format(const GaussianRational& value);

GaussianRational gq_conj(const GaussianRational& value);

GaussianRational pow(const GaussianRational& base, unsigned exponent);

std::string format_rational(const Rational& value);

}  // namespace eigenmatrix
