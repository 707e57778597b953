#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "eigenmatrix/field.hpp"

namespace eigenmatrix {

using Scalar = GaussianRational;

/// Counts field operations on Scalar values. Not thread-safe; use one per computation.
struct OpCounter {
  std::uint64_t scalar_mults = 0;
  std::uint64_t scalar_adds = 0;
  std::uint64_t scalar_divs = 0;

  std::uint64_t total() const { return scalar_mults + scalar_adds + scalar_divs; }
  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

enum class Orientation { Column, Row };

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t size, Orientation orientation = Orientation::Column)
      : entries_(size), orientation_(orientation) {}
  Vector(std::vector<Scalar> entries, Orientation orientation = Orientation::Column)
      : entries_(std::move(entries)), orientation_(orientation) {}
  Vector(std::initializer_list<Scalar> entries) : entries_(entries) {}

  std::size_t size() const { return entries_.size(); }
  Orientation orientation() const { return orientation_; }
  Vector transposed() const {
    return {entries_, orientation_ == Orientation::Column ? Orientation::Row : Orientation::Column};
  }

  Scalar& operator[](std::size_t k) { return entries_[k]; }
  const Scalar& operator[](std::size_t k) const { return entries_[k]; }
  const std::vector<Scalar>& entries() const { return entries_; }

  bool is_zero() const;
  bool is_real() const;

  /// Entry-wise equality; orientation is ignored.
  friend bool operator==(const Vector& a, const Vector& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Scalar> entries_;
  Orientation orientation_ = Orientation::Column;
};

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& c, const Vector& v);
/// Bilinear dot product (no conjugation).
Scalar dot(const Vector& a, const Vector& b);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  static Matrix from_columns(const std::vector<Vector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  Matrix transpose() const;

  bool is_zero() const;
  bool is_real() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& c, const Matrix& m);

Matrix mat_mul(const Matrix& a, const Matrix& b, OpCounter* counter = nullptr);
Matrix operator*(const Matrix& a, const Matrix& b);

/// A - lambda*I.
Matrix mat_sub_scalar_diag(const Matrix& a, const Scalar& lambda);

struct RrefResult {
  Matrix matrix;
  std::vector<std::size_t> pivots;
};

/// Pivot is the first nonzero entry at or below the current row in column order.
RrefResult mat_rref(const Matrix& a, OpCounter* counter = nullptr);
std::size_t mat_rank(const Matrix& a);

/// One vector per free column (free variable 1, other free variables 0), normalized.
std::vector<Vector> mat_nullspace_basis(const Matrix& a, OpCounter* counter = nullptr);

Scalar mat_det(const Matrix& a);
Matrix mat_inverse(const Matrix& a);

/// Column vector: A*v (needs v.size() == cols). Row vector: v*A (needs v.size() == rows).
Vector mat_vec_mul(const Matrix& a, const Vector& v, OpCounter* counter = nullptr);

Vector cross_product_3(const Vector& u, const Vector& v);

/// Rank of the matrix whose columns are `vectors` (all of length `dim`).
std::size_t rank_of(const std::vector<Vector>& vectors, std::size_t dim);
/// True when v lies in span(basis).
bool in_span(const std::vector<Vector>& basis, const Vector& v);

/// Canonical representative of the line through v over Q(i): clear denominators,
/// divide by the Gaussian-integer content, then rotate by a unit so the first
/// nonzero entry has re > 0 and im >= 0. Throws ZeroVector.
Vector normalize_eigenvector(const Vector& v);

std::string to_string(const Vector& v);
std::string to_string(const Matrix& m);

}  // namespace eigenmatrix
