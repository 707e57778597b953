#include "doctest.h"

#include "eigenmatrix/spectrum.hpp"
#include "eigenmatrix/verify.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"
#include "random.hpp"

using namespace eigenmatrix;
using fixtures::error_kind;
using fixtures::s;
using fixtures::spec;

namespace {

Polynomial poly(std::initializer_list<long> ascending) {
  Polynomial p;
  for (long c : ascending) p.coeffs.emplace_back(c);
  return p;
}

}  // namespace

TEST_CASE("charpoly is monic det(lI - A)") {
  CHECK(charpoly(fixtures::two_by_two()) == poly({10, -7, 1}));
  CHECK(charpoly(fixtures::repeated_3()) == poly({1, -1, -1, 1}));
  CHECK(charpoly(fixtures::distinct_3()) == poly({-6, 11, -6, 1}));
  CHECK(format_polynomial(charpoly(fixtures::two_by_two())) == "l^2 - 7*l + 10");
  CHECK(error_kind([] { (void)charpoly(Matrix(2, 3)); }) == ErrorKind::NotSquare);
}

TEST_CASE("find_spectrum") {
  CHECK(find_spectrum(poly({10, -7, 1})) == spec({{"2", 1}, {"5", 1}}));
  CHECK(find_spectrum(poly({1, -1, -1, 1})) == spec({{"1", 2}, {"-1", 1}}));
  CHECK(find_spectrum(poly({5, -4, 1})) == spec({{"2+i", 1}, {"2-i", 1}}));
  CHECK(find_spectrum(poly({0, 0, 0, 1})) == spec({{"0", 3}}));
  CHECK(find_spectrum(poly({-1, 0, 4})) == spec({{"1/2", 1}, {"-1/2", 1}}));
  CHECK(error_kind([] { (void)find_spectrum(poly({-2, 0, 1})); }) == ErrorKind::IrrationalSpectrum);
  CHECK(error_kind([] { (void)find_spectrum(poly({-2, 0, 0, 1})); }) == ErrorKind::IrrationalSpectrum);
}

TEST_CASE("verify_spectrum") {
  CHECK(verify_spectrum(fixtures::complex_5(), fixtures::complex_5_spectrum()) == fixtures::complex_5_spectrum());
  CHECK(verify_spectrum(fixtures::two_by_two(), spec({{"2", 1}, {"5", 1}})).size() == 2);
  CHECK(error_kind([] { (void)verify_spectrum(fixtures::two_by_two(), spec({{"2", 2}})); }) ==
        ErrorKind::InvalidSpectrum);
  CHECK(error_kind([] { (void)verify_spectrum(fixtures::two_by_two(), spec({{"2", 1}})); }) ==
        ErrorKind::InvalidSpectrum);
  CHECK(error_kind([] { (void)verify_spectrum(fixtures::two_by_two(), spec({{"2", 1}, {"2", 1}})); }) ==
        ErrorKind::InvalidSpectrum);
}

TEST_CASE("shift_spectrum") {
  const Spectrum sigma = spec({{"4", 1}, {"1", 2}});
  CHECK(shift_spectrum(sigma, 1) == spec({{"3", 1}, {"0", 2}}));
  CHECK(shift_spectrum(sigma, 4) == spec({{"0", 1}, {"-3", 2}}));
  CHECK(shift_spectrum(sigma, 0) == sigma);
  // the shifted matrix has the shifted spectrum
  const Matrix a = fixtures::shifted_3();
  CHECK(find_spectrum(charpoly(mat_sub_scalar_diag(a, 1))) == shift_spectrum(sigma, 1));
}

TEST_CASE("resolve_spectrum falls back to the supplied spectrum") {
  CHECK(resolve_spectrum(fixtures::two_by_two(), std::nullopt) == spec({{"2", 1}, {"5", 1}}));
  // nonreal coefficients are outside the root search; the caller must supply the spectrum
  CHECK(error_kind([] { (void)resolve_spectrum(fixtures::complex_3(), std::nullopt); }) ==
        ErrorKind::IrrationalSpectrum);
  CHECK(resolve_spectrum(fixtures::complex_3(), spec({{"1", 1}, {"2-i", 2}})) == spec({{"1", 1}, {"2-i", 2}}));
  CHECK(resolve_spectrum(fixtures::complex_5(), fixtures::complex_5_spectrum()) == fixtures::complex_5_spectrum());
}

TEST_CASE("Spectrum sorts and answers queries") {
  const Spectrum sigma = spec({{"2+i", 1}, {"-1", 2}, {"2-i", 1}});
  CHECK(sigma.values() == std::vector<Scalar>{s("-1"), s("2-i"), s("2+i")});
  CHECK(sigma.dimension() == 4);
  CHECK(sigma.contains(s("2-i")));
  CHECK(sigma.multiplicity(s("-1")) == 2);
  CHECK(sigma.multiplicity(s("7")) == 0);
}

TEST_CASE("polynomial helpers") {
  const Polynomial p = polynomial_from_spectrum(spec({{"1", 2}, {"-1", 1}}));
  CHECK(p == poly({1, -1, -1, 1}));
  CHECK(root_multiplicity(p, 1) == 2);
  CHECK(root_multiplicity(p, 3) == 0);
  CHECK(deflate(p, -1) == poly({1, -2, 1}));
  CHECK(p.evaluate(2) == Scalar(3));
}

TEST_CASE("found spectra are exact roots that rebuild the polynomial") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto cfg = random_config(9000 + seed, 2 + seed % 4, seed % 2 == 0);
    const Matrix a = random_spectral_matrix(cfg).a;
    const Polynomial p = charpoly(a);
    const Spectrum sigma = find_spectrum(p);
    CHECK(sigma == cfg.spectrum);
    for (const auto& e : sigma) CHECK(p.evaluate(e.value).is_zero());
    CHECK(polynomial_from_spectrum(sigma) == p);
    CHECK(verify_spectrum(a, sigma) == sigma);
  }
}

TEST_CASE("charpoly coefficients give trace and determinant") {
  rnd::Source src(808);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const Matrix a = src.matrix(n, n, trial % 2 == 0);
    const Polynomial p = charpoly(a);
    REQUIRE(p.degree() == n);
    CHECK(p.coeffs[n] == Scalar(1));
    Scalar trace;
    for (std::size_t k = 0; k < n; ++k) trace += a(k, k);
    CHECK(p.coeffs[n - 1] == -trace);
    const Scalar det = oracle::det(a);
    CHECK(p.coeffs[0] == (n % 2 == 0 ? det : -det));
  }
}

TEST_CASE("shifting there and back is the identity") {
  rnd::Source src(909);
  for (int trial = 0; trial < 100; ++trial) {
    const Spectrum sigma = spec({{gq_format(src.scalar()), 1}, {gq_format(src.scalar() + Scalar(20)), 2}});
    const Scalar mu = src.scalar();
    CHECK(shift_spectrum(shift_spectrum(sigma, mu), -mu) == sigma);
  }
}

TEST_CASE("every eigenvalue makes its kappa-matrix singular") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto cfg = random_config(9500 + seed, 2 + seed % 4, seed % 3 == 0);
    const Matrix a = random_spectral_matrix(cfg).a;
    for (const auto& e : cfg.spectrum) CHECK(oracle::det(mat_sub_scalar_diag(a, e.value)).is_zero());
  }
}
