#pragma once

// Eigenvectors from products of characteristic matrices kappa_l(A) = A - l*I.

#include <cstddef>
#include <utility>
#include <vector>

#include "eigenmatrix/error.hpp"
#include "eigenmatrix/matrix.hpp"
#include "eigenmatrix/spectrum.hpp"

namespace eigenmatrix {

/// Raised when a matrix has no eigenbasis; `witness()` is the nonzero product
/// of kappa-matrices over the distinct eigenvalues.
class NotDiagonalizableError : public Error {
 public:
  NotDiagonalizableError(const std::string& message, Matrix witness)
      : Error(ErrorKind::NotDiagonalizable, message), witness_(std::move(witness)) {}
  const Matrix& witness() const { return witness_; }

 private:
  Matrix witness_;
};

/// Raised by shortcut_2x2 for a repeated eigenvalue with a one-dimensional
/// eigenspace; `direction()` spans that eigenspace.
class DefectiveError : public Error {
 public:
  DefectiveError(const std::string& message, Vector direction)
      : Error(ErrorKind::Defective, message), direction_(std::move(direction)) {}
  const Vector& direction() const { return direction_; }

 private:
  Vector direction_;
};

struct KappaMatrix {
  Matrix matrix;
  Scalar eigenvalue;
  std::size_t source_dim = 0;
};

KappaMatrix kappa_of(const Matrix& a, const Scalar& lambda);

/// Product of kappa-matrices over the eigenvalues other than `target`, ascending.
/// With `with_multiplicity`, each factor is repeated by its multiplicity and the
/// target's own factor appears (m_target - 1) times.
Matrix complementary_product(const Matrix& a, const Spectrum& s, const Scalar& target, bool with_multiplicity,
                             OpCounter* counter = nullptr);

/// A basis of the eigenspace of `target`, built column by column from the
/// kappa-product with matrix-vector chains. Every vector is normalized and
/// residual-checked. For a defective eigenvalue the generalized-eigenspace columns
/// are reduced to the eigenspace by one extra null-space solve inside that span.
std::vector<Vector> eigenvectors_via_kappa(const Matrix& a, const Spectrum& s, const Scalar& target,
                                           OpCounter* counter = nullptr);

/// Row-vector analogue: each w satisfies w*A = target*w.
std::vector<Vector> left_eigenvectors_via_kappa(const Matrix& a, const Spectrum& s, const Scalar& target,
                                                OpCounter* counter = nullptr);

/// For sigma(A) = {lambda1, lambda2}: columns of kappa_{lambda2} give lambda1-eigenvectors
/// and vice versa. Throws WrongSpectrum or NotDiagonalizableError.
std::pair<std::vector<Vector>, std::vector<Vector>> two_spectrum_eigenvectors(const Matrix& a,
                                                                              const Scalar& lambda1,
                                                                              const Scalar& lambda2);

/// Closed-form 2x2 eigenvectors: v1 = (a - l2, c), v2 = (b, d - l1), with the
/// other column of the same kappa-matrix as fallback.
std::pair<Vector, Vector> shortcut_2x2(const Matrix& a, const Scalar& lambda1, const Scalar& lambda2);

struct CombinedKappa {
  Matrix matrix;
  std::vector<std::size_t> zero_columns;
};

/// Column i is column i of kappa_mu(A) where mu is the eigenvalue complementary to
/// column_assignment[i]. Requires at most two distinct eigenvalues.
CombinedKappa spectrum2_combined_matrix(const Matrix& a, const std::vector<Scalar>& column_assignment);

/// Cross product of the first non-parallel pair of rows of kappa_lambda(A), for 3x3 A.
Vector cross_product_eigenvector_3x3(const Matrix& a, const Scalar& lambda);

/// Basis of col(b1) ∩ col(b2), taken from the null space of [b1 | -b2].
std::vector<Vector> column_space_intersection(const Matrix& b1, const Matrix& b2);

/// Eigenspace of `target` restricted to the intersection of col(kappa_mu) over mu != target.
std::vector<Vector> eigenvectors_via_intersection(const Matrix& a, const Spectrum& s, const Scalar& target,
                                                  OpCounter* counter = nullptr);

struct DiagonalizabilityVerdict {
  bool diagonalizable = false;
  Matrix witness;  // the distinct-eigenvalue product; zero iff diagonalizable
};

DiagonalizabilityVerdict is_diagonalizable(const Matrix& a, const Spectrum& s, OpCounter* counter = nullptr);

struct EigenSpace {
  Scalar eigenvalue;
  std::size_t alg_mult = 0;
  std::vector<Vector> vectors;

  std::size_t geom_mult() const { return vectors.size(); }
};

std::vector<EigenSpace> eigen_system(const Matrix& a, const Spectrum& s, OpCounter* counter = nullptr);

}  // namespace eigenmatrix
