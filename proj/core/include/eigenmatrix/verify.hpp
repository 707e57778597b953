#pragma once

// Independent checks: echelon-form eigenvectors, residuals, spans, and a seeded
// generator of matrices with prescribed spectra. Nothing here calls into kappa.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "eigenmatrix/factor.hpp"
#include "eigenmatrix/jordan.hpp"
#include "eigenmatrix/matrix.hpp"
#include "eigenmatrix/spectrum.hpp"

namespace eigenmatrix {

/// Normalized null-space basis of A - lambda*I. Throws NotInSpectrum when trivial.
std::vector<Vector> oracle_eigenvectors(const Matrix& a, const Scalar& lambda, OpCounter* counter = nullptr);

enum class Side { Right, Left };

/// Exact test of (A - lambda I) v = 0 (right) or v (A - lambda I) = 0 (left).
/// Throws ZeroVector for v = 0.
bool residual_check(const Matrix& a, const Scalar& lambda, const Vector& v, Side side = Side::Right);

struct SpanBasis {
  std::vector<Vector> vectors;
  std::size_t ambient_dim = 0;
};

bool span_equal(const SpanBasis& b1, const SpanBasis& b2);
bool span_equal(const std::vector<Vector>& b1, const std::vector<Vector>& b2, std::size_t ambient_dim);

/// Product of kappa-matrices over the full eigenvalue multiset is zero.
bool cayley_hamilton_check(const Matrix& a, const Spectrum& s);

struct GeneratorConfig {
  std::size_t dim = 0;
  Spectrum spectrum;
  std::uint64_t seed = 0;
  long entry_bound = 2;
  /// When nonempty, D is replaced by these Jordan blocks (sizes per eigenvalue must
  /// sum to its multiplicity).
  std::vector<JordanBlock> jordan_blocks;
};

struct GeneratedMatrix {
  Matrix a;
  Matrix p;
};

/// A = P D P^{-1} for a seeded random integer P. Throws GenerationFailed if no
/// invertible P is found within a bounded number of draws.
GeneratedMatrix random_spectral_matrix(const GeneratorConfig& cfg);

/// Seeded configuration with small-integer eigenvalues and random multiplicities.
/// With `defective`, at least one eigenvalue gets a Jordan block of size >= 2.
GeneratorConfig random_config(std::uint64_t seed, std::size_t dim, bool defective, long entry_bound = 2);

/// X' = A X checked coefficient-wise on the basis t^k/k! e^{alpha t} {cos, sin}(beta t).
bool ode_term_check(const Matrix& a, const OdeSolutionTerm& term);

}  // namespace eigenmatrix
