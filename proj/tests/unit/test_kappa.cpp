#include "doctest.h"

#include "eigenmatrix/kappa.hpp"
#include "eigenmatrix/verify.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "random.hpp"

using namespace eigenmatrix;
using fixtures::error_kind;
using fixtures::mat;
using fixtures::s;
using fixtures::spec;
using fixtures::vec;

namespace {

bool all_residuals_zero(const Matrix& a, const Scalar& lambda, const std::vector<Vector>& vs) {
  for (const auto& v : vs) {
    if (v.is_zero() || !(oracle::apply(a, v) == lambda * v)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("kappa_of") {
  const auto k = kappa_of(fixtures::symmetric_2(), 3);
  CHECK(k.matrix == mat({{"-1", "1"}, {"1", "-1"}}));
  CHECK(k.eigenvalue == Scalar(3));
  CHECK(k.source_dim == 2);
  CHECK(kappa_of(fixtures::distinct_3(), 2).matrix == mat({{"2", "0", "-1"}, {"4", "0", "-2"}, {"5", "-1", "-2"}}));
  CHECK(kappa_of(fixtures::distinct_3(), 0).matrix == fixtures::distinct_3());
  CHECK(error_kind([] { (void)kappa_of(Matrix(1, 2), 0); }) == ErrorKind::NotSquare);
}

TEST_CASE("kappa invariants on the worked matrices") {
  const std::vector<std::pair<Matrix, Spectrum>> cases{
      {fixtures::distinct_3(), spec({{"1", 1}, {"2", 1}, {"3", 1}})},
      {fixtures::three_eigen_4(), spec({{"0", 1}, {"1", 2}, {"2", 1}})},
      {fixtures::complex_3(), spec({{"1", 1}, {"2-i", 2}})}};
  for (const auto& [a, sigma] : cases) {
    for (const auto& e : sigma) {
      const auto k = kappa_of(a, e.value);
      CHECK(mat_det(k.matrix).is_zero());
      CHECK(k.matrix + e.value * Matrix::identity(a.rows()) == a);
    }
  }
}

TEST_CASE("complementary_product") {
  const Matrix a = fixtures::cross_3();
  CHECK(complementary_product(a, spec({{"0", 1}, {"3", 1}, {"-4", 1}}), 0, false) ==
        mat({{"1", "0", "1"}, {"6", "0", "6"}, {"-13", "0", "-13"}}));

  const Matrix d = fixtures::defective_3();
  const Matrix q = complementary_product(d, spec({{"1", 1}, {"-2", 2}}), 1, true);
  const Matrix k = mat_sub_scalar_diag(d, -2);
  CHECK(q == k * k);
  for (std::size_t c = 0; c < 3; ++c) {
    if (!q.column(c).is_zero()) CHECK(oracle::parallel(q.column(c), vec({"3", "-3", "3"})));
  }

  CHECK(complementary_product(fixtures::symmetric_2(), spec({{"1", 1}, {"3", 1}}), 1, false) ==
        mat_sub_scalar_diag(fixtures::symmetric_2(), 3));
  CHECK(error_kind([&] { (void)complementary_product(a, spec({{"0", 1}, {"3", 1}, {"-4", 1}}), 7, false); }) ==
        ErrorKind::TargetNotInSpectrum);
}

TEST_CASE("eigenvectors_via_kappa on the worked matrices") {
  const Matrix h = fixtures::three_eigen_4();
  const Spectrum sh = spec({{"0", 1}, {"2", 1}, {"1", 2}});
  const auto v0 = eigenvectors_via_kappa(h, sh, 0);
  REQUIRE(v0.size() == 1);
  CHECK(v0[0] == vec({"1", "1", "1", "2"}));
  const auto v1 = eigenvectors_via_kappa(h, sh, 1);
  CHECK(v1.size() == 2);
  CHECK(span_equal(v1, {vec({"-1", "1", "0", "0"}), vec({"0", "0", "1", "1"})}, 4));

  const Matrix d = fixtures::defective_3();
  const auto vd = eigenvectors_via_kappa(d, spec({{"1", 1}, {"-2", 2}}), -2);
  REQUIRE(vd.size() == 1);
  CHECK(oracle::parallel(vd[0], vec({"3", "-3", "0"})));

  const auto vc = eigenvectors_via_kappa(fixtures::complex_3(), spec({{"1", 1}, {"2-i", 2}}), s("2-i"));
  CHECK(vc.size() == 2);
  CHECK(span_equal(vc, {vec({"-i", "2i", "1+2i"}), vec({"1+2i", "2", "i"})}, 3));

  CHECK(error_kind([&] { (void)eigenvectors_via_kappa(h, sh, 5); }) == ErrorKind::TargetNotInSpectrum);
}

TEST_CASE("a scalar matrix yields the standard basis") {
  const Matrix a = Scalar(5) * Matrix::identity(3);
  const auto vs = eigenvectors_via_kappa(a, spec({{"5", 3}}), 5);
  CHECK(vs.size() == 3);
  CHECK(rank_of(vs, 3) == 3);
}

TEST_CASE("single eigenvalue with a non-scalar matrix") {
  const Matrix a = fixtures::single_eigen_5();
  const auto vs = eigenvectors_via_kappa(a, spec({{"2", 5}}), 2);
  CHECK(vs.size() == 2);
  CHECK(all_residuals_zero(a, 2, vs));
  CHECK(span_equal(vs, oracle_eigenvectors(a, 2), 5));
}

TEST_CASE("two_spectrum_eigenvectors") {
  const auto [l1, l3] = two_spectrum_eigenvectors(fixtures::symmetric_2(), 1, 3);
  CHECK(span_equal(l1, {vec({"1", "-1"})}, 2));
  CHECK(span_equal(l3, {vec({"1", "1"})}, 2));

  const Matrix f = fixtures::triple_4();
  const auto [f2, f1] = two_spectrum_eigenvectors(f, 2, 1);
  REQUIRE(f2.size() == 1);
  CHECK(f2[0] == vec({"1", "2", "3", "4"}));
  CHECK(f1.size() == 3);
  CHECK(all_residuals_zero(f, 1, f1));

  const auto [b2, b1] = two_spectrum_eigenvectors(fixtures::rational_3(), 2, 1);
  CHECK(span_equal(b2, {vec({"1", "0", "1"}), vec({"1", "2", "3"})}, 3));
  CHECK(span_equal(b1, {vec({"1", "2", "1"})}, 3));

  const Matrix d = fixtures::defective_3();
  try {
    (void)two_spectrum_eigenvectors(d, 1, -2);
    FAIL("expected NotDiagonalizable");
  } catch (const NotDiagonalizableError& e) {
    CHECK(e.witness() == mat({{"-3", "-3", "0"}, {"3", "3", "0"}, {"0", "0", "0"}}));
  }
  CHECK(error_kind([] { (void)two_spectrum_eigenvectors(fixtures::symmetric_2(), 1, 2); }) ==
        ErrorKind::WrongSpectrum);
}

TEST_CASE("shortcut_2x2") {
  const auto [v1, v2] = shortcut_2x2(fixtures::two_by_two(), 2, 5);
  CHECK(span_equal({v1}, {vec({"-1", "1"})}, 2));
  CHECK(span_equal({v2}, {vec({"1", "2"})}, 2));

  const auto [w1, w2] = shortcut_2x2(mat({{"5", "7"}, {"0", "2"}}), 2, 5);
  CHECK(w1 == vec({"7", "-3"}));
  CHECK(oracle::parallel(w2, vec({"1", "0"})));

  try {
    (void)shortcut_2x2(fixtures::defective_2(), 2, 2);
    FAIL("expected Defective");
  } catch (const DefectiveError& e) {
    CHECK(oracle::parallel(e.direction(), vec({"1", "1"})));
  }

  const auto [e1, e2] = shortcut_2x2(Scalar(3) * Matrix::identity(2), 3, 3);
  CHECK(rank_of({e1, e2}, 2) == 2);
  CHECK(error_kind([] { (void)shortcut_2x2(fixtures::two_by_two(), 1, 6); }) == ErrorKind::WrongSpectrum);
}

TEST_CASE("spectrum2_combined_matrix") {
  const auto c = spectrum2_combined_matrix(fixtures::two_by_two(), {s("2"), s("5")});
  CHECK(c.matrix == mat({{"-2", "1"}, {"2", "2"}}));
  CHECK(c.zero_columns.empty());

  const Matrix a = fixtures::repeated_3();
  const auto c3 = spectrum2_combined_matrix(a, {s("-1"), s("1"), s("1")});
  CHECK(c3.matrix.column(0) == vec({"-1", "-2", "-1"}));
  CHECK(oracle::apply(a, c3.matrix.column(0)) == Scalar(-1) * c3.matrix.column(0));

  const auto cz = spectrum2_combined_matrix(Scalar(4) * Matrix::identity(2), {s("4"), s("4")});
  CHECK(cz.matrix.is_zero());
  CHECK(cz.zero_columns == std::vector<std::size_t>{0, 1});

  CHECK(error_kind([] { (void)spectrum2_combined_matrix(fixtures::distinct_3(), {s("1"), s("2"), s("3")}); }) ==
        ErrorKind::SpectrumTooLarge);
}

TEST_CASE("cross_product_eigenvector_3x3") {
  const Matrix a = fixtures::cross_3();
  CHECK(cross_product_eigenvector_3x3(a, 0) == vec({"1", "6", "-13"}));
  CHECK(oracle::parallel(cross_product_eigenvector_3x3(a, 3), vec({"2", "3", "-2"})));
  CHECK(error_kind([] { (void)cross_product_eigenvector_3x3(fixtures::repeated_3(), 1); }) ==
        ErrorKind::AllRowsParallel);
  CHECK(error_kind([&] { (void)cross_product_eigenvector_3x3(a, 1); }) == ErrorKind::NotInSpectrum);
}

TEST_CASE("column_space_intersection") {
  const Matrix a = fixtures::cross_3();
  const auto meet = column_space_intersection(mat_sub_scalar_diag(a, 3), mat_sub_scalar_diag(a, -4));
  CHECK(span_equal(meet, {vec({"1", "6", "-13"})}, 3));
  const Matrix single = mat({{"1"}, {"2"}, {"3"}});
  CHECK(span_equal(column_space_intersection(single, single), {vec({"1", "2", "3"})}, 3));
  CHECK(column_space_intersection(mat({{"1"}, {"0"}}), mat({{"0"}, {"1"}})).empty());
  CHECK(error_kind([] { (void)column_space_intersection(Matrix(2, 1), Matrix(3, 1)); }) ==
        ErrorKind::DimensionMismatch);

  const auto vs = eigenvectors_via_intersection(fixtures::distinct_3(), spec({{"1", 1}, {"2", 1}, {"3", 1}}), 3);
  CHECK(span_equal(vs, {vec({"1", "2", "1"})}, 3));
}

TEST_CASE("is_diagonalizable") {
  CHECK(is_diagonalizable(fixtures::distinct_3(), spec({{"1", 1}, {"2", 1}, {"3", 1}})).diagonalizable);
  const auto d = is_diagonalizable(fixtures::defective_3(), spec({{"1", 1}, {"-2", 2}}));
  CHECK_FALSE(d.diagonalizable);
  CHECK(d.witness == mat({{"-3", "-3", "0"}, {"3", "3", "0"}, {"0", "0", "0"}}));
  const auto d2 = is_diagonalizable(fixtures::defective_2(), spec({{"2", 2}}));
  CHECK_FALSE(d2.diagonalizable);
  CHECK(d2.witness == mat({{"1", "-1"}, {"1", "-1"}}));
}

TEST_CASE("left_eigenvectors_via_kappa") {
  const Matrix a = fixtures::two_by_two();
  const Spectrum sa = spec({{"2", 1}, {"5", 1}});
  const auto w2 = left_eigenvectors_via_kappa(a, sa, 2);
  REQUIRE(w2.size() == 1);
  CHECK(w2[0].orientation() == Orientation::Row);
  CHECK(oracle::parallel(w2[0], vec({"-2", "1"})));
  CHECK(oracle::apply_left(vec({"-2", "1"}), a) == vec({"-4", "2"}));
  const auto w5 = left_eigenvectors_via_kappa(a, sa, 5);
  CHECK(oracle::parallel(w5[0], vec({"1", "1"})));

  const Matrix sym = fixtures::symmetric_2();
  const Spectrum ss = spec({{"1", 1}, {"3", 1}});
  for (const auto& e : ss) {
    CHECK(span_equal(left_eigenvectors_via_kappa(sym, ss, e.value), eigenvectors_via_kappa(sym, ss, e.value), 2));
  }
}

TEST_CASE("eigen_system on a complex matrix with supplied spectrum") {
  const auto system = eigen_system(fixtures::complex_5(), fixtures::complex_5_spectrum());
  CHECK(system.size() == 5);
  for (const auto& es : system) {
    CHECK(es.geom_mult() == 1);
    CHECK(all_residuals_zero(fixtures::complex_5(), es.eigenvalue, es.vectors));
  }
  CHECK(system[1].eigenvalue == Scalar(0));
  CHECK(system[2].vectors[0] == vec({"1", "1", "-1", "0", "2"}));
}

TEST_CASE("the kappa-matrix of a two-eigenvalue matrix has 0 with the complementary multiplicity") {
  // kappa_l1 of A has spectrum {0 : m1, l2 - l1 : m2}
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto cfg = random_config(4400 + seed, 2 + seed % 4, seed % 2 == 1);
    if (cfg.spectrum.size() != 2) continue;
    const Matrix a = random_spectral_matrix(cfg).a;
    for (const auto& e : cfg.spectrum) {
      const Spectrum shifted = find_spectrum(charpoly(mat_sub_scalar_diag(a, e.value)));
      CHECK(shifted.multiplicity(0) == e.alg_mult);
      CHECK(shifted == shift_spectrum(cfg.spectrum, e.value));
    }
  }
}

TEST_CASE("kappa-matrices commute") {
  rnd::Source src(1111);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const Matrix a = src.matrix(n, n, trial % 2 == 0);
    const Matrix kl = mat_sub_scalar_diag(a, src.scalar());
    const Matrix km = mat_sub_scalar_diag(a, src.scalar());
    CHECK(oracle::mul(kl, km) == oracle::mul(km, kl));
  }
}

TEST_CASE("eigenspaces lie in the column spaces of the other kappa-matrices") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto cfg = random_config(5500 + seed, 2 + seed % 4, false);
    const Matrix a = random_spectral_matrix(cfg).a;
    for (const auto& l : cfg.spectrum) {
      for (const auto& m : cfg.spectrum) {
        if (l.value == m.value) continue;
        const Matrix km = mat_sub_scalar_diag(a, m.value);
        const std::size_t rk = oracle::rank(km);
        for (const auto& v : oracle_eigenvectors(a, l.value)) {
          Matrix aug(a.rows(), a.cols() + 1);
          for (std::size_t r = 0; r < a.rows(); ++r) {
            for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = km(r, c);
            aug(r, a.cols()) = v[r];
          }
          CHECK(oracle::rank(aug) == rk);
        }
      }
    }
  }
}

TEST_CASE("eigenvectors from the kappa route pass every residual on random complex input") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto cfg = random_config(6600 + seed, 2 + seed % 4, seed % 3 == 0);
    std::vector<Eigenvalue> pairs;
    for (const auto& e : cfg.spectrum) pairs.push_back({e.value + Scalar(Rational(0), Rational(seed % 5)), e.alg_mult});
    cfg.spectrum = Spectrum(pairs);
    for (auto& b : cfg.jordan_blocks) b.eigenvalue = b.eigenvalue + Scalar(Rational(0), Rational(seed % 5));
    const Matrix a = random_spectral_matrix(cfg).a;
    for (const auto& e : cfg.spectrum) {
      const auto vs = eigenvectors_via_kappa(a, cfg.spectrum, e.value);
      CHECK(all_residuals_zero(a, e.value, vs));
      CHECK(vs.size() >= 1);
      CHECK(vs.size() <= e.alg_mult);
      CHECK(rank_of(vs, a.rows()) == vs.size());
      CHECK(span_equal(vs, oracle_eigenvectors(a, e.value), a.rows()));
    }
  }
}
