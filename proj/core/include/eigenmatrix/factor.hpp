#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "eigenmatrix/matrix.hpp"
#include "eigenmatrix/spectrum.hpp"

namespace eigenmatrix {

struct Diagonalization {
  Matrix P;
  Matrix D;
  Matrix P_inv;
  std::vector<Scalar> eigen_order;
};

/// A = P D P^{-1} with eigenvalues ascending along D. Throws NotDiagonalizableError
/// carrying the nonzero kappa-product, or IrrationalSpectrum when `s` is absent and
/// the roots cannot be found exactly.
Diagonalization diagonalize(const Matrix& a, const std::optional<Spectrum>& s = std::nullopt);

/// A^n through P D^n P^{-1} when A is diagonalizable, otherwise by repeated squaring.
Matrix matrix_power(const Matrix& a, unsigned n, const std::optional<Spectrum>& s = std::nullopt);
Matrix matrix_power_binary(const Matrix& a, unsigned n);

enum class Trig { None, Cos, Sin };

/// vector * t^t_power / t_power! * trig(beta t)
struct OdeComponent {
  Vector vector;
  std::size_t t_power = 0;
  Integer factorial{1};
  Trig trig = Trig::None;
};

/// c_label * exp(exponent t) * sum(components). Realified terms have a real
/// exponent alpha and beta != 0; otherwise beta is 0 and trig is None.
struct OdeSolutionTerm {
  std::size_t label = 0;
  Scalar exponent;
  Rational beta{0};
  std::vector<OdeComponent> components;
};

/// n independent solutions of X' = A X, one per chain vector. `realify` defaults
/// to true for real matrices; requesting it for a nonreal matrix throws
/// RealifyOnComplexMatrix.
std::vector<OdeSolutionTerm> ode_general_solution(const Matrix& a, const std::optional<Spectrum>& s = std::nullopt,
                                                  std::optional<bool> realify = std::nullopt);

/// X(0) of a term.
Vector ode_initial_value(const OdeSolutionTerm& term);

/// "c1*[-1,1]^T*exp(2t) + c2*[1,2]^T*exp(5t)"
std::string render_ode_solution(const std::vector<OdeSolutionTerm>& terms);

}  // namespace eigenmatrix
