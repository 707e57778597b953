#include "eigenmatrix/field.hpp"

#include <cctype>

#include "eigenmatrix/error.hpp"

namespace eigenmatrix {

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (sgn(denominator) == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero scalar");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  // (a+bi)/(c+di) = (a+bi)(c-di) / (c^2+d^2)
  const Rational n = o.norm();
  Rational re = (re_ * o.re_ + im_ * o.im_) / n;
  Rational im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::strong_ordering compare(const GaussianRational& a, const GaussianRational& b) {
  if (int c = cmp(a.re(), b.re()); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  int c = cmp(a.im(), b.im());
  if (c == 0) return std::strong_ordering::equal;
  return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

GaussianRational gq_arith(const GaussianRational& a, const GaussianRational& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw Error(ErrorKind::InternalInconsistency, "unknown arithmetic op");
}

GaussianRational gq_conj(const GaussianRational& value) { return value.conj(); }

GaussianRational pow(const GaussianRational& base, unsigned exponent) {
  GaussianRational result(1);
  GaussianRational b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::string format_rational(const Rational& value) { return value.get_str(); }

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  GaussianRational parse() {
    if (text_.empty()) fail("empty scalar");
    // Leading imaginary part with no real part: "i", "-i", "3/2i", "-3/2i".
    if (text_.back() == 'i' && !has_inner_sign()) {
      return {Rational(0), parse_imag(0, text_.size() - 1)};
    }
    std::size_t split = find_inner_sign();
    if (split == std::string_view::npos) {
      return {parse_real(0, text_.size())};
    }
    if (text_.back() != 'i') fail("imaginary part must end in 'i'");
    Rational re = parse_real(0, split);
    if (split + 1 >= text_.size()) fail("dangling sign");
    return {re, parse_imag(split, text_.size() - 1)};
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError, "'" + std::string(text_) + "': " + why);
  }

  // Position of a '+'/'-' after the first character, separating real and imaginary parts.
  std::size_t find_inner_sign() const {
    for (std::size_t k = 1; k < text_.size(); ++k) {
      if (text_[k] == '+' || text_[k] == '-') return k;
    }
    return std::string_view::npos;
  }
  bool has_inner_sign() const { return find_inner_sign() != std::string_view::npos; }

  Integer parse_digits(std::size_t begin, std::size_t end) const {
    if (begin >= end) fail("expected digits");
    for (std::size_t k = begin; k < end; ++k) {
      if (!std::isdigit(static_cast<unsigned char>(text_[k]))) fail("unexpected character");
    }
    return Integer(std::string(text_.substr(begin, end - begin)), 10);
  }

  // [int ['/' posint]] over [begin, end)
  Rational parse_magnitude(std::size_t begin, std::size_t end) const {
    std::size_t slash = text_.find('/', begin);
    if (slash == std::string_view::npos || slash >= end) return Rational(parse_digits(begin, end));
    Integer num = parse_digits(begin, slash);
    Integer den = parse_digits(slash + 1, end);
    if (sgn(den) == 0) throw Error(ErrorKind::DivisionByZero, "'" + std::string(text_) + "': zero denominator");
    return make_rational(num, den);
  }

  Rational parse_real(std::size_t begin, std::size_t end) const {
    bool negative = false;
    if (begin < end && text_[begin] == '-') {
      negative = true;
      ++begin;
    }
    Rational r = parse_magnitude(begin, end);
    return negative ? Rational(-r) : r;
  }

  // Sign at `begin` is optional only for a standalone imaginary part; `end` excludes the 'i'.
  Rational parse_imag(std::size_t begin, std::size_t end) const {
    bool negative = false;
    if (begin < end && (text_[begin] == '+' || text_[begin] == '-')) {
      negative = text_[begin] == '-';
      ++begin;
    }
    Rational r = begin == end ? Rational(1) : parse_magnitude(begin, end);
    return negative ? Rational(-r) : r;
  }

  std::string_view text_;
};

}  // namespace

GaussianRational gq_parse(std::string_view text) { return ScalarParser(text).parse(); }

std::string gq_format(const GaussianRational& value) {
  const Rational& re = value.re();
  const Rational& im = value.im();
  if (sgn(im) == 0) return format_rational(re);

  std::string out;
  if (sgn(re) != 0) out = format_rational(re);
  const Rational mag = abs(im);
  if (sgn(im) < 0) {
    out += '-';
  } else if (!out.empty()) {
    out += '+';
  }
  if (mag != 1) out += format_rational(mag);
  out += 'i';
  return out;
}

}  // namespace eigenmatrix
