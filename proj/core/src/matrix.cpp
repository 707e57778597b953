#include "eigenmatrix/matrix.hpp"

#include <utility>

#include "eigenmatrix/error.hpp"

namespace eigenmatrix {

namespace {

void count_mul(OpCounter* c, std::uint64_t n = 1) {
  if (c) c->scalar_mults += n;
}
void count_add(OpCounter* c, std::uint64_t n = 1) {
  if (c) c->scalar_adds += n;
}
void count_div(OpCounter* c, std::uint64_t n = 1) {
  if (c) c->scalar_divs += n;
}

void require_same_size(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector lengths differ");
}

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "matrix shapes differ");
  }
}

void require_square(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "matrix is not square");
}

}  // namespace

bool Vector::is_zero() const {
  for (const auto& x : entries_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Vector::is_real() const {
  for (const auto& x : entries_) {
    if (!x.is_real()) return false;
  }
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  require_same_size(a, b);
  Vector out(a.size(), a.orientation());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same_size(a, b);
  Vector out(a.size(), a.orientation());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

Vector operator*(const Scalar& c, const Vector& v) {
  Vector out(v.size(), v.orientation());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = c * v[k];
  return out;
}

Scalar dot(const Vector& a, const Vector& b) {
  require_same_size(a, b);
  Scalar s;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorKind::DimensionMismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns) {
  if (columns.empty()) throw Error(ErrorKind::DimensionMismatch, "no columns");
  return from_columns(columns, columns.front().size());
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_, Orientation::Column);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  Vector v(cols_, Orientation::Row);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_real() const {
  for (const auto& x : data_) {
    if (!x.is_real()) return false;
  }
  return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
  }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
  }
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = s * m(r, c);
  }
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b, OpCounter* counter) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "inner dimensions differ");
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Scalar s;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(r, k) * b(k, c);
      out(r, c) = std::move(s);
    }
  }
  count_mul(counter, a.rows() * b.cols() * a.cols());
  if (a.cols() > 0) count_add(counter, a.rows() * b.cols() * (a.cols() - 1));
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

Matrix mat_sub_scalar_diag(const Matrix& a, const Scalar& lambda) {
  require_square(a);
  Matrix out = a;
  for (std::size_t k = 0; k < a.rows(); ++k) out(k, k) -= lambda;
  return out;
}

RrefResult mat_rref(const Matrix& a, OpCounter* counter) {
  Matrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    }
    const Scalar pivot = m(row, col);
    if (pivot != Scalar(1)) {
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) {
          m(row, c) /= pivot;
          count_div(counter);
        }
      }
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (m(row, c).is_zero()) continue;
        m(r, c) -= factor * m(row, c);
        count_mul(counter);
        count_add(counter);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t mat_rank(const Matrix& a) { return mat_rref(a).pivots.size(); }

std::vector<Vector> mat_nullspace_basis(const Matrix& a, OpCounter* counter) {
  const RrefResult rr = mat_rref(a, counter);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector x(a.cols());
    x[f] = 1;
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) x[rr.pivots[r]] = -rr.matrix(r, f);
    basis.push_back(normalize_eigenvector(x));
  }
  return basis;
}

Scalar mat_det(const Matrix& a) {
  require_square(a);
  Matrix m = a;
  const std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m(p, col).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(p, c), m(col, c));
      det = -det;
    }
    const Scalar pivot = m(col, col);
    det *= pivot;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col) / pivot;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

Matrix mat_inverse(const Matrix& a) {
  require_square(a);
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  const RrefResult rr = mat_rref(aug);
  if (rr.pivots.size() < n || rr.pivots[n - 1] != n - 1) {
    throw Error(ErrorKind::Singular, "matrix is not invertible");
  }
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = rr.matrix(r, n + c);
  }
  return inv;
}

Vector mat_vec_mul(const Matrix& a, const Vector& v, OpCounter* counter) {
  if (v.orientation() == Orientation::Column) {
    if (v.size() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "vector length != cols");
    Vector out(a.rows(), Orientation::Column);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      Scalar s;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(r, k) * v[k];
      out[r] = std::move(s);
    }
    count_mul(counter, a.rows() * a.cols());
    if (a.cols() > 0) count_add(counter, a.rows() * (a.cols() - 1));
    return out;
  }
  if (v.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "row vector length != rows");
  Vector out(a.cols(), Orientation::Row);
  for (std::size_t c = 0; c < a.cols(); ++c) {
    Scalar s;
    for (std::size_t k = 0; k < a.rows(); ++k) s += v[k] * a(k, c);
    out[c] = std::move(s);
  }
  count_mul(counter, a.rows() * a.cols());
  if (a.rows() > 0) count_add(counter, a.cols() * (a.rows() - 1));
  return out;
}

Vector cross_product_3(const Vector& u, const Vector& v) {
  if (u.size() != 3 || v.size() != 3) throw Error(ErrorKind::DimensionMismatch, "cross product needs length 3");
  return Vector{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

std::size_t rank_of(const std::vector<Vector>& vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return mat_rank(Matrix::from_columns(vectors, dim));
}

bool in_span(const std::vector<Vector>& basis, const Vector& v) {
  if (v.is_zero()) return true;
  std::vector<Vector> all = basis;
  all.push_back(v);
  return rank_of(all, v.size()) == rank_of(basis, v.size());
}

namespace {

Integer round_nearest(const Rational& x) {
  // floor(x + 1/2)
  Rational shifted = x + Rational(1, 2);
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return q;
}

// Euclid in Z[i]; inputs have integer parts.
Scalar gaussian_gcd(Scalar a, Scalar b) {
  while (!b.is_zero()) {
    const Scalar q = a / b;
    const Scalar rounded{Rational(round_nearest(q.re())), Rational(round_nearest(q.im()))};
    Scalar r = a - rounded * b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Unit u in {1, i, -1, -i} with u*z in the quadrant re > 0, im >= 0.
Scalar canonical_unit(const Scalar& z) {
  const int re = sgn(z.re());
  const int im = sgn(z.im());
  if (re > 0 && im >= 0) return Scalar(1);
  if (re <= 0 && im > 0) return Scalar(Rational(0), Rational(-1));  // rotate by -i
  if (re < 0 && im <= 0) return Scalar(-1);
  return Scalar::i();
}

}  // namespace

Vector normalize_eigenvector(const Vector& v) {
  if (v.is_zero()) throw Error(ErrorKind::ZeroVector, "cannot normalize the zero vector");

  Integer lcm_den(1);
  for (std::size_t k = 0; k < v.size(); ++k) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v[k].re().get_den_mpz_t());
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v[k].im().get_den_mpz_t());
  }
  Vector w = Scalar(Rational(lcm_den)) * v;

  Scalar content;
  if (w.is_real()) {
    Integer g(0);
    for (std::size_t k = 0; k < w.size(); ++k) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[k].re().get_num_mpz_t());
    }
    content = Scalar(Rational(g));
  } else {
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (!w[k].is_zero()) content = gaussian_gcd(w[k], content);
    }
  }

  std::size_t first = 0;
  while (w[first].is_zero()) ++first;
  const Scalar unit = canonical_unit(w[first] / content);
  const Scalar factor = unit / content;
  Vector out(w.size(), v.orientation());
  for (std::size_t k = 0; k < w.size(); ++k) out[k] = factor * w[k];
  return out;
}

std::string to_string(const Vector& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ",";
    s += gq_format(v[k]);
  }
  s += "]";
  if (v.orientation() == Orientation::Column) s += "^T";
  return s;
}

std::string to_string(const Matrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) s += ",";
    s += "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) s += ",";
      s += gq_format(m(r, c));
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace eigenmatrix
