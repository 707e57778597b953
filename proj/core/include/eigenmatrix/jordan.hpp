#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "eigenmatrix/matrix.hpp"
#include "eigenmatrix/spectrum.hpp"

namespace eigenmatrix {

struct KappaPower {
  Matrix power;
  std::size_t rank = 0;
};

/// kappa^1, kappa^2, ... up to the first power whose rank is n - alg_mult(lambda).
/// The length of the result is the index of lambda.
std::vector<KappaPower> kappa_power_sequence(const Matrix& a, const Scalar& lambda);

/// Null-space basis vectors of kappa^j that are independent modulo null(kappa^{j-1}).
std::vector<Vector> generalized_eigenvectors(const Matrix& a, const Scalar& lambda, std::size_t rank_j);

/// x_1 (an eigenvector) through x_m, with kappa * x_{k+1} = x_k.
struct JordanChain {
  Scalar eigenvalue;
  std::vector<Vector> vectors;

  std::size_t size() const { return vectors.size(); }
};

/// Chains for lambda, longest first. Tops are picked from null(kappa^j) level by
/// level and multiplied down; each chain carries one common scale factor.
std::vector<JordanChain> build_chains(const Matrix& a, const Scalar& lambda);

/// A particular solution x of kappa * x = v, if one exists.
std::optional<Vector> solve_preimage(const Matrix& kappa, const Vector& v);

/// Appends a new top x with kappa_lambda(A) x = (current top); nullopt when the
/// current top is not in the range of kappa.
std::optional<JordanChain> extend_chain(const Matrix& a, const JordanChain& chain);

struct JordanBlock {
  Scalar eigenvalue;
  std::size_t size = 0;
};

struct JordanForm {
  Matrix P;
  Matrix J;
  Matrix P_inv;
  std::vector<JordanBlock> blocks;
  std::vector<JordanChain> chains;
};

/// P * J * P^{-1} = A with eigenvalues ascending and blocks descending in size
/// within each eigenvalue; J carries ones on the block superdiagonals.
JordanForm jordan_form(const Matrix& a, const Spectrum& s);

}  // namespace eigenmatrix
