#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eigenmatrix/matrix.hpp"

namespace eigenmatrix {

/// Coefficients in ascending degree order.
struct Polynomial {
  std::vector<Scalar> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  Scalar evaluate(const Scalar& x) const;
  bool is_real() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

Polynomial operator*(const Polynomial& a, const Polynomial& b);

/// Divides p by (x - root); throws InternalInconsistency on a nonzero remainder.
Polynomial deflate(const Polynomial& p, const Scalar& root);

/// Number of times (x - root) divides p.
std::size_t root_multiplicity(const Polynomial& p, const Scalar& root);

/// Renders as "l^3 - l^2 - l + 1" using `var` as the variable name.
std::string format_polynomial(const Polynomial& p, const std::string& var = "l");

struct Eigenvalue {
  Scalar value;
  std::size_t alg_mult = 0;

  friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

/// Distinct eigenvalues with algebraic multiplicities, sorted ascending by (re, im).
class Spectrum {
 public:
  Spectrum() = default;
  Spectrum(std::vector<Eigenvalue> pairs);  // NOLINT: sorts on construction

  const std::vector<Eigenvalue>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  std::size_t dimension() const;
  bool contains(const Scalar& value) const;
  /// 0 when value is absent.
  std::size_t multiplicity(const Scalar& value) const;
  std::vector<Scalar> values() const;

  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  std::vector<Eigenvalue> pairs_;
};

/// Product of (x - value)^mult over the spectrum.
Polynomial polynomial_from_spectrum(const Spectrum& s);

/// Monic det(xI - A), computed by the Faddeev-LeVerrier recursion.
Polynomial charpoly(const Matrix& a);

/// Exact roots in Q(i) of a monic polynomial with rational coefficients.
/// Throws IrrationalSpectrum when some root lies outside Q(i) or the
/// coefficients are not all real.
Spectrum find_spectrum(const Polynomial& p);

/// Accepts `claimed` only if it is an exact factorization of charpoly(a).
Spectrum verify_spectrum(const Matrix& a, const Spectrum& claimed);

Spectrum shift_spectrum(const Spectrum& s, const Scalar& mu);

/// verify_spectrum when `s` is given, otherwise find_spectrum(charpoly(a)).
Spectrum resolve_spectrum(const Matrix& a, const std::optional<Spectrum>& s);

}  // namespace eigenmatrix
