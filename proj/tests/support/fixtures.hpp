#pragma once

// Worked matrices shared by unit and acceptance tests.

#include <optional>
#include <string>
#include <vector>

#include "eigenmatrix/error.hpp"
#include "eigenmatrix/matrix.hpp"
#include "eigenmatrix/spectrum.hpp"

namespace fixtures {

using eigenmatrix::Matrix;
using eigenmatrix::Scalar;
using eigenmatrix::Spectrum;
using eigenmatrix::Vector;

inline Scalar s(const char* text) { return eigenmatrix::gq_parse(text); }

inline Matrix mat(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Scalar>> out;
  for (const auto& r : rows) {
    std::vector<Scalar> row;
    for (const auto& x : r) row.push_back(eigenmatrix::gq_parse(x));
    out.push_back(std::move(row));
  }
  return Matrix::from_rows(out);
}

inline Vector vec(const std::vector<std::string>& xs) {
  std::vector<Scalar> out;
  for (const auto& x : xs) out.push_back(eigenmatrix::gq_parse(x));
  return Vector(out);
}

inline Spectrum spec(const std::vector<std::pair<std::string, std::size_t>>& pairs) {
  std::vector<eigenmatrix::Eigenvalue> out;
  for (const auto& [v, m] : pairs) out.push_back({eigenmatrix::gq_parse(v), m});
  return Spectrum(out);
}

/// Kind of the eigenmatrix::Error thrown by `fn`, or nullopt if it returns normally.
template <class Fn>
std::optional<eigenmatrix::ErrorKind> error_kind(Fn&& fn) {
  try {
    fn();
  } catch (const eigenmatrix::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

// [[3,1],[2,4]], eigenvalues 2 and 5.
inline Matrix two_by_two() { return mat({{"3", "1"}, {"2", "4"}}); }
// Symmetric, eigenvalues 1 and 3.
inline Matrix symmetric_2() { return mat({{"2", "1"}, {"1", "2"}}); }
// Double eigenvalue 2 with one eigenvector.
inline Matrix defective_2() { return mat({{"3", "-1"}, {"1", "1"}}); }
// sigma = {1:2, -1:1}, diagonalizable.
inline Matrix repeated_3() { return mat({{"0", "-1", "1"}, {"-2", "-1", "2"}, {"-1", "-1", "2"}}); }
// sigma = {1:1, 2:2}, rational entries.
inline Matrix rational_3() {
  return mat({{"3/2", "-1/2", "1/2"}, {"-1", "1", "1"}, {"-1/2", "-1/2", "5/2"}});
}
// sigma = {1, 2, 3}.
inline Matrix distinct_3() { return mat({{"4", "0", "-1"}, {"4", "2", "-2"}, {"5", "-1", "0"}}); }
// sigma = {4:1, 1:2}.
inline Matrix shifted_3() { return mat({{"-1", "1", "1"}, {"-4", "3", "2"}, {"-6", "3", "4"}}); }
// sigma = {0, 3, -4}.
inline Matrix cross_3() { return mat({{"1", "2", "1"}, {"6", "-1", "0"}, {"-1", "-2", "-1"}}); }
// sigma = {1:1, -2:2}, not diagonalizable.
inline Matrix defective_3() { return mat({{"2", "4", "3"}, {"-4", "-6", "-3"}, {"3", "3", "1"}}); }
// sigma = {1:1, 2-i:2}, complex entries.
inline Matrix complex_3() {
  return mat({{"1-1/2i", "1/2+i", "-1/2-i"}, {"i", "3-i", "-1"}, {"1/2+i", "1-1/2i", "1-1/2i"}});
}
// sigma = {2:1, 1:3}.
inline Matrix triple_4() {
  return mat({{"3/2", "1/2", "1/2", "-1/2"}, {"1", "2", "1", "-1"}, {"3/2", "3/2", "5/2", "-3/2"}, {"2", "2", "2", "-1"}});
}
// sigma = {1:2, 2:2}.
inline Matrix pairs_4() {
  return mat({{"1", "-1/2", "1/2", "-1/2"}, {"0", "3/2", "-1/2", "1/2"}, {"-1", "-1", "2", "0"}, {"-1", "-1/2", "1/2", "3/2"}});
}
// sigma = {0:1, 1:2, 2:1}.
inline Matrix three_eigen_4() {
  return mat({{"3", "2", "5", "-5"}, {"3", "4", "7", "-7"}, {"4", "4", "10", "-9"}, {"6", "6", "14", "-13"}});
}
// Blocks J2(1), J3(2); lower triangular.
inline Matrix two_blocks_5() {
  return mat({{"1", "0", "0", "0", "0"},
              {"3", "1", "0", "0", "0"},
              {"6", "3", "2", "0", "0"},
              {"10", "6", "3", "2", "0"},
              {"15", "10", "6", "3", "2"}});
}
// Single eigenvalue 2, blocks J3(2), J2(2).
inline Matrix single_eigen_5() {
  return mat({{"1", "0", "-1", "1", "0"},
              {"-4", "1", "-3", "2", "1"},
              {"-2", "-1", "0", "1", "1"},
              {"-3", "-1", "-3", "4", "1"},
              {"-8", "-2", "-7", "5", "4"}});
}
// sigma = {0, 1, -1, 2-i, 2+i}, complex entries with a real characteristic polynomial.
inline Matrix complex_5() {
  return mat({{"1-3/2i", "2-i", "-4-5/2i", "1+3i", "-3"},
              {"-2+i", "-4+i", "3", "1-i", "5-i"},
              {"-1+3/2i", "i", "2+5/2i", "-1-3i", "1"},
              {"-2+i", "-1+i", "-1", "2-i", "1-i"},
              {"-1-1/2i", "-3", "-5/2i", "2+2i", "3-i"}});
}
inline Spectrum complex_5_spectrum() { return spec({{"0", 1}, {"1", 1}, {"-1", 1}, {"2-i", 1}, {"2+i", 1}}); }

}  // namespace fixtures
