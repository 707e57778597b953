#include "eigenmatrix/kappa.hpp"

#include <algorithm>

namespace eigenmatrix {

namespace {

void require_target(const Spectrum& s, const Scalar& target) {
  if (!s.contains(target)) {
    throw Error(ErrorKind::TargetNotInSpectrum, gq_format(target) + " is not in the spectrum");
  }
}

bool satisfies(const Matrix& a, const Scalar& lambda, const Vector& v) {
  if (v.is_zero()) return false;
  return mat_vec_mul(mat_sub_scalar_diag(a, lambda), v).is_zero();
}

Vector unit_vector(std::size_t n, std::size_t k, Orientation o) {
  Vector v(n, o);
  v[k] = 1;
  return v;
}

// Keeps `v` when it is nonzero, passes the residual test, and is independent of `kept`.
bool try_keep(std::vector<Vector>& kept, const Matrix& a, const Scalar& lambda, const Vector& v) {
  if (v.is_zero() || !satisfies(a, lambda, v)) return false;
  if (in_span(kept, v)) return false;
  kept.push_back(v);
  return true;
}

// The factors other than the target's, ascending, each repeated by multiplicity.
std::vector<Matrix> other_factors(const Matrix& a, const Spectrum& s, const Scalar& target) {
  std::vector<Matrix> factors;
  for (const auto& e : s) {
    if (e.value == target) continue;
    const Matrix k = mat_sub_scalar_diag(a, e.value);
    for (std::size_t r = 0; r < e.alg_mult; ++r) factors.push_back(k);
  }
  return factors;
}

Matrix product_of(const std::vector<Matrix>& factors, std::size_t n, OpCounter* counter) {
  if (factors.empty()) return Matrix::identity(n);
  Matrix p = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) p = mat_mul(p, factors[k], counter);
  return p;
}

std::vector<Vector> independent_nonzero_columns(const Matrix& m) {
  std::vector<Vector> out;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Vector v = m.column(c);
    if (!v.is_zero() && !in_span(out, v)) out.push_back(std::move(v));
  }
  return out;
}

// Right eigenvectors of `a` for `target` from kappa-product columns.
// The columns of Q * kappa_t^e (Q = product of the other factors) are generated
// lazily for e = m-1 down to 0. For e = m-1 every nonzero column is an eigenvector;
// smaller e reaches eigenvectors hidden when kappa_t^{m-1} annihilates Q's range.
// Any eigenvectors still missing are recovered from null(kappa_t * C), where the
// columns C of Q span the generalized eigenspace.
std::vector<Vector> kappa_eigenvectors(const Matrix& a, const Spectrum& s, const Scalar& target,
                                       OpCounter* counter) {
  require_target(s, target);
  const std::size_t n = a.rows();
  const std::size_t m = s.multiplicity(target);
  const Matrix kt = mat_sub_scalar_diag(a, target);
  const std::vector<Matrix> factors = other_factors(a, s, target);

  std::vector<Vector> kept;
  for (std::size_t e = m; e-- > 0 && kept.size() < m;) {
    for (std::size_t j = 0; j < n && kept.size() < m; ++j) {
      Vector v = unit_vector(n, j, Orientation::Column);
      for (std::size_t r = 0; r < e && !v.is_zero(); ++r) v = mat_vec_mul(kt, v, counter);
      for (auto it = factors.rbegin(); it != factors.rend() && !v.is_zero(); ++it) {
        v = mat_vec_mul(*it, v, counter);
      }
      try_keep(kept, a, target, v);
    }
  }

  if (kept.size() < m) {
    const std::vector<Vector> c = independent_nonzero_columns(product_of(factors, n, counter));
    if (c.empty()) throw Error(ErrorKind::InternalInconsistency, "complementary product is zero");
    const Matrix cm = Matrix::from_columns(c, n);
    const std::vector<Vector> weights = mat_nullspace_basis(mat_mul(kt, cm, counter), counter);
    for (const auto& w : weights) try_keep(kept, a, target, mat_vec_mul(cm, w, counter));
    if (weights.size() != kept.size()) {
      throw Error(ErrorKind::InternalInconsistency,
                  "eigenvector count mismatch for " + gq_format(target));
    }
  }
  if (kept.empty()) {
    throw Error(ErrorKind::InternalInconsistency, "no eigenvector found for " + gq_format(target));
  }

  std::vector<Vector> out;
  out.reserve(kept.size());
  for (const auto& v : kept) out.push_back(normalize_eigenvector(v));
  return out;
}

}  // namespace

KappaMatrix kappa_of(const Matrix& a, const Scalar& lambda) {
  return {mat_sub_scalar_diag(a, lambda), lambda, a.rows()};
}

Matrix complementary_product(const Matrix& a, const Spectrum& s, const Scalar& target, bool with_multiplicity,
                             OpCounter* counter) {
  require_target(s, target);
  std::vector<Matrix> factors;
  for (const auto& e : s) {
    std::size_t copies = 1;
    if (with_multiplicity) copies = e.value == target ? e.alg_mult - 1 : e.alg_mult;
    else if (e.value == target) copies = 0;
    const Matrix k = mat_sub_scalar_diag(a, e.value);
    for (std::size_t r = 0; r < copies; ++r) factors.push_back(k);
  }
  return product_of(factors, a.rows(), counter);
}

std::vector<Vector> eigenvectors_via_kappa(const Matrix& a, const Spectrum& s, const Scalar& target,
                                           OpCounter* counter) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "eigenvectors of a non-square matrix");
  return kappa_eigenvectors(a, s, target, counter);
}

std::vector<Vector> left_eigenvectors_via_kappa(const Matrix& a, const Spectrum& s, const Scalar& target,
                                                OpCounter* counter) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "eigenvectors of a non-square matrix");
  require_target(s, target);
  const std::size_t n = a.rows();
  const std::size_t m = s.multiplicity(target);
  const Matrix kt = mat_sub_scalar_diag(a, target);
  const std::vector<Matrix> factors = other_factors(a, s, target);

  auto left_ok = [&](const Vector& w) { return !w.is_zero() && mat_vec_mul(kt, w).is_zero(); };
  std::vector<Vector> kept;
  auto keep = [&](const Vector& w) {
    if (left_ok(w) && !in_span(kept, w)) kept.push_back(w);
  };

  // Row i of kappa_t^e * Q, pushed through the factors from the left.
  for (std::size_t e = m; e-- > 0 && kept.size() < m;) {
    for (std::size_t i = 0; i < n && kept.size() < m; ++i) {
      Vector w = unit_vector(n, i, Orientation::Row);
      for (std::size_t r = 0; r < e && !w.is_zero(); ++r) w = mat_vec_mul(kt, w, counter);
      for (auto it = factors.begin(); it != factors.end() && !w.is_zero(); ++it) w = mat_vec_mul(*it, w, counter);
      keep(w);
    }
  }

  if (kept.size() < m) {
    // Rows R of Q span the left generalized eigenspace; solve (y R) kappa_t = 0.
    const Matrix q = product_of(factors, n, counter);
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i) {
      Vector r = q.row(i);
      if (!r.is_zero() && !in_span(rows, r)) rows.push_back(std::move(r));
    }
    if (rows.empty()) throw Error(ErrorKind::InternalInconsistency, "complementary product is zero");
    const Matrix rm = Matrix::from_columns(rows, n).transpose();
    const std::vector<Vector> weights = mat_nullspace_basis(mat_mul(rm, kt, counter).transpose(), counter);
    for (const auto& y : weights) keep(mat_vec_mul(rm, y.transposed(), counter));
    if (weights.size() != kept.size()) {
      throw Error(ErrorKind::InternalInconsistency, "left eigenvector count mismatch for " + gq_format(target));
    }
  }
  if (kept.empty()) {
    throw Error(ErrorKind::InternalInconsistency, "no left eigenvector found for " + gq_format(target));
  }

  std::vector<Vector> out;
  for (const auto& w : kept) out.push_back(normalize_eigenvector(w));
  return out;
}

std::pair<std::vector<Vector>, std::vector<Vector>> two_spectrum_eigenvectors(const Matrix& a,
                                                                              const Scalar& lambda1,
                                                                              const Scalar& lambda2) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "eigenvectors of a non-square matrix");
  if (lambda1 == lambda2) throw Error(ErrorKind::WrongSpectrum, "the two eigenvalues must differ");
  const Polynomial p = charpoly(a);
  const std::size_t m1 = root_multiplicity(p, lambda1);
  const std::size_t m2 = root_multiplicity(p, lambda2);
  if (m1 == 0 || m2 == 0 || m1 + m2 != a.rows()) {
    throw Error(ErrorKind::WrongSpectrum,
                "spectrum is not {" + gq_format(lambda1) + ", " + gq_format(lambda2) + "}");
  }
  const Matrix k1 = mat_sub_scalar_diag(a, lambda1);
  const Matrix k2 = mat_sub_scalar_diag(a, lambda2);
  Matrix product = mat_mul(k1, k2);
  if (!product.is_zero()) {
    throw NotDiagonalizableError("kappa product over the two eigenvalues is nonzero", std::move(product));
  }

  auto collect = [&](const Matrix& source, const Scalar& lambda) {
    std::vector<Vector> out;
    for (const auto& v : independent_nonzero_columns(source)) {
      if (!satisfies(a, lambda, v)) {
        throw Error(ErrorKind::InternalInconsistency, "column failed the residual check");
      }
      out.push_back(normalize_eigenvector(v));
    }
    return out;
  };
  return {collect(k2, lambda1), collect(k1, lambda2)};
}

std::pair<Vector, Vector> shortcut_2x2(const Matrix& a, const Scalar& lambda1, const Scalar& lambda2) {
  if (a.rows() != 2 || a.cols() != 2) throw Error(ErrorKind::DimensionMismatch, "shortcut needs a 2x2 matrix");
  const Scalar& pa = a(0, 0);
  const Scalar& pb = a(0, 1);
  const Scalar& pc = a(1, 0);
  const Scalar& pd = a(1, 1);

  auto first_nonzero = [](const Vector& x, const Vector& y) { return x.is_zero() ? y : x; };

  if (lambda1 == lambda2) {
    const Scalar& l = lambda1;
    if (a == Scalar(l) * Matrix::identity(2)) return {Vector{1, 0}, Vector{0, 1}};
    const Vector v = first_nonzero(Vector{pa - l, pc}, Vector{pb, pd - l});
    if (v.is_zero() || !satisfies(a, l, v)) {
      throw Error(ErrorKind::WrongSpectrum, gq_format(l) + " is not a double eigenvalue");
    }
    throw DefectiveError("only one independent eigenvector for " + gq_format(l), normalize_eigenvector(v));
  }

  const Vector v1 = first_nonzero(Vector{pa - lambda2, pc}, Vector{pb, pd - lambda2});
  const Vector v2 = first_nonzero(Vector{pb, pd - lambda1}, Vector{pa - lambda1, pc});
  if (!satisfies(a, lambda1, v1) || !satisfies(a, lambda2, v2)) {
    throw Error(ErrorKind::WrongSpectrum, "supplied values are not the eigenvalues");
  }
  return {normalize_eigenvector(v1), normalize_eigenvector(v2)};
}

CombinedKappa spectrum2_combined_matrix(const Matrix& a, const std::vector<Scalar>& column_assignment) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "combined kappa-matrix of a non-square matrix");
  const std::size_t n = a.rows();
  if (column_assignment.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "one eigenvalue per column is required");
  }
  std::vector<Scalar> distinct;
  for (const auto& x : column_assignment) {
    if (std::find(distinct.begin(), distinct.end(), x) == distinct.end()) distinct.push_back(x);
  }
  if (distinct.size() > 2) throw Error(ErrorKind::SpectrumTooLarge, "more than two eigenvalues assigned");

  const Polynomial p = charpoly(a);
  Polynomial rest = p;
  for (const auto& x : distinct) {
    const std::size_t m = root_multiplicity(rest, x);
    if (m == 0) throw Error(ErrorKind::WrongSpectrum, gq_format(x) + " is not an eigenvalue");
    for (std::size_t k = 0; k < m; ++k) rest = deflate(rest, x);
  }
  if (rest.degree() > 0) {
    if (distinct.size() == 2) throw Error(ErrorKind::SpectrumTooLarge, "matrix has more than two eigenvalues");
    // rest must be (x - y)^k; read y off the subleading coefficient.
    const std::size_t k = rest.degree();
    const Scalar y = -rest.coeffs[k - 1] / Scalar(static_cast<long>(k));
    if (root_multiplicity(rest, y) != k) {
      throw Error(ErrorKind::SpectrumTooLarge, "matrix has more than two eigenvalues");
    }
    distinct.push_back(y);
  }

  auto complement = [&](const Scalar& x) {
    if (distinct.size() == 1) return distinct.front();
    return distinct[0] == x ? distinct[1] : distinct[0];
  };

  CombinedKappa out{Matrix(n, n), {}};
  for (std::size_t c = 0; c < n; ++c) {
    const Scalar mu = complement(column_assignment[c]);
    bool zero = true;
    for (std::size_t r = 0; r < n; ++r) {
      out.matrix(r, c) = r == c ? a(r, c) - mu : a(r, c);
      zero = zero && out.matrix(r, c).is_zero();
    }
    if (zero) out.zero_columns.push_back(c);
  }
  return out;
}

Vector cross_product_eigenvector_3x3(const Matrix& a, const Scalar& lambda) {
  if (a.rows() != 3 || a.cols() != 3) throw Error(ErrorKind::DimensionMismatch, "cross-product method needs 3x3");
  const Matrix k = mat_sub_scalar_diag(a, lambda);
  static constexpr std::size_t kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& pr : kPairs) {
    const Vector c = cross_product_3(k.row(pr[0]).transposed(), k.row(pr[1]).transposed());
    if (c.is_zero()) continue;
    if (!mat_vec_mul(k, c).is_zero()) {
      throw Error(ErrorKind::NotInSpectrum, gq_format(lambda) + " is not an eigenvalue");
    }
    return normalize_eigenvector(c);
  }
  throw Error(ErrorKind::AllRowsParallel, "all rows of the kappa-matrix are parallel");
}

std::vector<Vector> column_space_intersection(const Matrix& b1, const Matrix& b2) {
  if (b1.rows() != b2.rows()) throw Error(ErrorKind::DimensionMismatch, "row counts differ");
  const std::size_t rows = b1.rows();
  Matrix block(rows, b1.cols() + b2.cols());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < b1.cols(); ++c) block(r, c) = b1(r, c);
    for (std::size_t c = 0; c < b2.cols(); ++c) block(r, b1.cols() + c) = -b2(r, c);
  }
  std::vector<Vector> out;
  for (const auto& w : mat_nullspace_basis(block)) {
    Vector coeffs(b1.cols());
    for (std::size_t c = 0; c < b1.cols(); ++c) coeffs[c] = w[c];
    Vector v = mat_vec_mul(b1, coeffs);
    if (!v.is_zero() && !in_span(out, v)) out.push_back(std::move(v));
  }
  for (auto& v : out) v = normalize_eigenvector(v);
  return out;
}

std::vector<Vector> eigenvectors_via_intersection(const Matrix& a, const Spectrum& s, const Scalar& target,
                                                  OpCounter* counter) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "eigenvectors of a non-square matrix");
  require_target(s, target);
  const std::size_t n = a.rows();
  std::vector<Vector> w;
  bool first = true;
  for (const auto& e : s) {
    if (e.value == target) continue;
    const Matrix k = mat_sub_scalar_diag(a, e.value);
    if (first) {
      w = independent_nonzero_columns(k);
      first = false;
    } else {
      w = column_space_intersection(Matrix::from_columns(w, n), k);
    }
    if (w.empty()) throw Error(ErrorKind::InternalInconsistency, "empty column-space intersection");
  }
  const Matrix wm = first ? Matrix::identity(n) : Matrix::from_columns(w, n);
  const Matrix kt = mat_sub_scalar_diag(a, target);
  std::vector<Vector> out;
  for (const auto& y : mat_nullspace_basis(mat_mul(kt, wm, counter), counter)) {
    Vector v = mat_vec_mul(wm, y, counter);
    if (!satisfies(a, target, v)) throw Error(ErrorKind::InternalInconsistency, "intersection vector failed residual");
    if (!in_span(out, v)) out.push_back(normalize_eigenvector(v));
  }
  if (out.empty()) throw Error(ErrorKind::InternalInconsistency, "no eigenvector found for " + gq_format(target));
  return out;
}

DiagonalizabilityVerdict is_diagonalizable(const Matrix& a, const Spectrum& s, OpCounter* counter) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "diagonalizability of a non-square matrix");
  std::vector<Matrix> factors;
  for (const auto& e : s) factors.push_back(mat_sub_scalar_diag(a, e.value));
  Matrix witness = product_of(factors, a.rows(), counter);
  const bool ok = witness.is_zero();
  return {ok, std::move(witness)};
}

std::vector<EigenSpace> eigen_system(const Matrix& a, const Spectrum& s, OpCounter* counter) {
  std::vector<EigenSpace> out;
  for (const auto& e : s) out.push_back({e.value, e.alg_mult, eigenvectors_via_kappa(a, s, e.value, counter)});
  return out;
}

}  // namespace eigenmatrix
