#include "eigenmatrix/jordan.hpp"

#include "eigenmatrix/error.hpp"

namespace eigenmatrix {

namespace {

std::size_t algebraic_multiplicity(const Matrix& a, const Scalar& lambda) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "Jordan structure of a non-square matrix");
  const std::size_t m = root_multiplicity(charpoly(a), lambda);
  if (m == 0) throw Error(ErrorKind::NotInSpectrum, gq_format(lambda) + " is not an eigenvalue");
  return m;
}

std::vector<KappaPower> power_sequence(const Matrix& a, const Scalar& lambda, std::size_t alg_mult) {
  const std::size_t n = a.rows();
  const Matrix k = mat_sub_scalar_diag(a, lambda);
  std::vector<KappaPower> seq;
  Matrix p = k;
  while (true) {
    const std::size_t r = mat_rank(p);
    seq.push_back({p, r});
    if (r == n - alg_mult) break;
    if (seq.size() > alg_mult) throw Error(ErrorKind::InternalInconsistency, "kappa powers failed to stabilize");
    p = mat_mul(p, k);
  }
  return seq;
}

// Scales the whole chain by one factor so that its entries are coprime Gaussian integers.
JordanChain scaled(JordanChain chain) {
  const std::size_t n = chain.vectors.front().size();
  Vector flat(n * chain.size());
  for (std::size_t j = 0; j < chain.size(); ++j) {
    for (std::size_t r = 0; r < n; ++r) flat[j * n + r] = chain.vectors[j][r];
  }
  flat = normalize_eigenvector(flat);
  for (std::size_t j = 0; j < chain.size(); ++j) {
    for (std::size_t r = 0; r < n; ++r) chain.vectors[j][r] = flat[j * n + r];
  }
  return chain;
}

std::vector<JordanChain> chains_for(const Matrix& a, const Scalar& lambda, std::size_t alg_mult) {
  const std::size_t n = a.rows();
  const Matrix k = mat_sub_scalar_diag(a, lambda);
  const std::vector<KappaPower> seq = power_sequence(a, lambda, alg_mult);
  const std::size_t index = seq.size();

  // rank(kappa^j) for j = 0..index+1, with the sequence stable past the index.
  std::vector<std::size_t> ranks{n};
  for (const auto& kp : seq) ranks.push_back(kp.rank);
  ranks.push_back(seq.back().rank);

  std::vector<std::vector<Vector>> nulls{{}};
  for (const auto& kp : seq) nulls.push_back(mat_nullspace_basis(kp.power));

  // chains[c] holds vectors top-down while building.
  std::vector<std::vector<Vector>> tops;
  for (std::size_t j = index; j >= 1; --j) {
    const std::size_t at_least_j = ranks[j - 1] - ranks[j];
    const std::size_t at_least_j1 = ranks[j] - ranks[j + 1];
    const std::size_t wanted = at_least_j - at_least_j1;

    std::vector<Vector> span = nulls[j - 1];
    for (auto& chain : tops) {
      // Level-j vector of a longer chain is kappa applied to its level-(j+1) vector.
      chain.push_back(mat_vec_mul(k, chain.back()));
      span.push_back(chain.back());
    }
    std::size_t found = 0;
    for (const auto& x : nulls[j]) {
      if (found == wanted) break;
      if (in_span(span, x)) continue;
      span.push_back(x);
      tops.push_back({x});
      ++found;
    }
    if (found != wanted) {
      throw Error(ErrorKind::InternalInconsistency, "Jordan partition could not be realized");
    }
  }

  std::vector<JordanChain> out;
  for (auto& t : tops) {
    JordanChain c{lambda, {t.rbegin(), t.rend()}};
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      if (mat_vec_mul(k, c.vectors[i + 1]) != c.vectors[i]) {
        throw Error(ErrorKind::InternalInconsistency, "chain relation violated");
      }
    }
    out.push_back(scaled(std::move(c)));
  }
  return out;
}

}  // namespace

std::vector<KappaPower> kappa_power_sequence(const Matrix& a, const Scalar& lambda) {
  return power_sequence(a, lambda, algebraic_multiplicity(a, lambda));
}

std::vector<Vector> generalized_eigenvectors(const Matrix& a, const Scalar& lambda, std::size_t rank_j) {
  const std::vector<KappaPower> seq = kappa_power_sequence(a, lambda);
  if (rank_j == 0 || rank_j > seq.size()) {
    throw Error(ErrorKind::RankTooLarge, "rank must lie in 1.." + std::to_string(seq.size()));
  }
  std::vector<Vector> lower = rank_j == 1 ? std::vector<Vector>{} : mat_nullspace_basis(seq[rank_j - 2].power);
  std::vector<Vector> out;
  for (const auto& x : mat_nullspace_basis(seq[rank_j - 1].power)) {
    if (in_span(lower, x)) continue;
    lower.push_back(x);
    out.push_back(x);
  }
  return out;
}

std::vector<JordanChain> build_chains(const Matrix& a, const Scalar& lambda) {
  return chains_for(a, lambda, algebraic_multiplicity(a, lambda));
}

std::optional<Vector> solve_preimage(const Matrix& kappa, const Vector& v) {
  if (v.size() != kappa.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length != rows");
  Matrix aug(kappa.rows(), kappa.cols() + 1);
  for (std::size_t r = 0; r < kappa.rows(); ++r) {
    for (std::size_t c = 0; c < kappa.cols(); ++c) aug(r, c) = kappa(r, c);
    aug(r, kappa.cols()) = v[r];
  }
  const RrefResult rr = mat_rref(aug);
  if (!rr.pivots.empty() && rr.pivots.back() == kappa.cols()) return std::nullopt;
  Vector x(kappa.cols());
  for (std::size_t r = 0; r < rr.pivots.size(); ++r) x[rr.pivots[r]] = rr.matrix(r, kappa.cols());
  return x;
}

std::optional<JordanChain> extend_chain(const Matrix& a, const JordanChain& chain) {
  if (chain.vectors.empty()) throw Error(ErrorKind::ZeroVector, "empty chain");
  auto x = solve_preimage(mat_sub_scalar_diag(a, chain.eigenvalue), chain.vectors.back());
  if (!x) return std::nullopt;
  JordanChain out = chain;
  out.vectors.push_back(std::move(*x));
  return out;
}

JordanForm jordan_form(const Matrix& a, const Spectrum& s) {
  const Spectrum checked = verify_spectrum(a, s);
  const std::size_t n = a.rows();
  JordanForm f;
  f.J = Matrix(n, n);
  std::vector<Vector> columns;
  for (const auto& e : checked) {
    for (auto& chain : chains_for(a, e.value, e.alg_mult)) {
      const std::size_t start = columns.size();
      for (std::size_t k = 0; k < chain.size(); ++k) {
        f.J(start + k, start + k) = e.value;
        if (k > 0) f.J(start + k - 1, start + k) = 1;
        columns.push_back(chain.vectors[k]);
      }
      f.blocks.push_back({e.value, chain.size()});
      f.chains.push_back(std::move(chain));
    }
  }
  if (columns.size() != n) throw Error(ErrorKind::InternalInconsistency, "chains do not fill the space");
  f.P = Matrix::from_columns(columns, n);
  try {
    f.P_inv = mat_inverse(f.P);
  } catch (const Error&) {
    throw Error(ErrorKind::InternalInconsistency, "chain vectors are dependent");
  }
  if (mat_mul(mat_mul(f.P, f.J), f.P_inv) != a) {
    throw Error(ErrorKind::InternalInconsistency, "P J P^-1 does not reproduce the input");
  }
  return f;
}

}  // namespace eigenmatrix
