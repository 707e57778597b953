#include "eigenmatrix/spectrum.hpp"

#include <algorithm>
#include <set>

#include "eigenmatrix/error.hpp"

namespace eigenmatrix {

namespace {

// Trial division is used to enumerate candidate roots; beyond this bound the
// search is abandoned and the caller is asked to supply the spectrum.
const Integer kMaxTrialDivisor("10000000");

Polynomial trimmed(Polynomial p) {
  while (p.coeffs.size() > 1 && p.coeffs.back().is_zero()) p.coeffs.pop_back();
  return p;
}

std::vector<Integer> positive_divisors(const Integer& value) {
  Integer n = abs(value);
  std::vector<Integer> small;
  std::vector<Integer> large;
  Integer d(1);
  while (d * d <= n) {
    if (d > kMaxTrialDivisor) {
      throw Error(ErrorKind::IrrationalSpectrum,
                  "coefficients too large for rational-root search; supply --spectrum");
    }
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
    ++d;
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// sqrt of a non-negative rational if it is a perfect square.
std::optional<Rational> exact_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) {
    return std::nullopt;
  }
  Integer num;
  Integer den;
  mpz_sqrt(num.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), x.get_den_mpz_t());
  return make_rational(num, den);
}

void add_root(std::vector<Eigenvalue>& roots, const Scalar& value, std::size_t mult) {
  for (auto& r : roots) {
    if (r.value == value) {
      r.alg_mult += mult;
      return;
    }
  }
  roots.push_back({value, mult});
}

}  // namespace

Scalar Polynomial::evaluate(const Scalar& x) const {
  Scalar acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool Polynomial::is_real() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Scalar& c) { return c.is_real(); });
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  Polynomial out{std::vector<Scalar>(a.coeffs.size() + b.coeffs.size() - 1)};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return out;
}

Polynomial deflate(const Polynomial& p, const Scalar& root) {
  if (p.coeffs.size() < 2) throw Error(ErrorKind::InternalInconsistency, "cannot deflate a constant");
  const std::size_t n = p.degree();
  std::vector<Scalar> q(n);
  Scalar carry;
  for (std::size_t k = n; k-- > 0;) {
    carry = p.coeffs[k + 1] + carry * root;
    q[k] = carry;
  }
  if (!(p.coeffs[0] + carry * root).is_zero()) {
    throw Error(ErrorKind::InternalInconsistency, "deflation by a non-root");
  }
  return {std::move(q)};
}

std::size_t root_multiplicity(const Polynomial& p, const Scalar& root) {
  std::size_t m = 0;
  Polynomial q = trimmed(p);
  while (q.degree() >= 1 && q.evaluate(root).is_zero()) {
    q = deflate(q, root);
    ++m;
  }
  return m;
}

std::string format_polynomial(const Polynomial& p, const std::string& var) {
  std::string out;
  for (std::size_t k = p.coeffs.size(); k-- > 0;) {
    const Scalar& c = p.coeffs[k];
    if (c.is_zero()) continue;
    const bool real = c.is_real();
    const bool negative = real && sgn(c.re()) < 0;
    const Scalar mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == Scalar(1);
    std::string coef = real ? gq_format(mag) : "(" + gq_format(mag) + ")";
    if (k == 0) {
      out += coef;
      continue;
    }
    if (!unit) out += coef + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

Spectrum::Spectrum(std::vector<Eigenvalue> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end(),
            [](const Eigenvalue& a, const Eigenvalue& b) { return compare(a.value, b.value) < 0; });
}

std::size_t Spectrum::dimension() const {
  std::size_t n = 0;
  for (const auto& e : pairs_) n += e.alg_mult;
  return n;
}

bool Spectrum::contains(const Scalar& value) const { return multiplicity(value) > 0; }

std::size_t Spectrum::multiplicity(const Scalar& value) const {
  for (const auto& e : pairs_) {
    if (e.value == value) return e.alg_mult;
  }
  return 0;
}

std::vector<Scalar> Spectrum::values() const {
  std::vector<Scalar> out;
  out.reserve(pairs_.size());
  for (const auto& e : pairs_) out.push_back(e.value);
  return out;
}

Polynomial polynomial_from_spectrum(const Spectrum& s) {
  Polynomial p{{Scalar(1)}};
  for (const auto& e : s) {
    const Polynomial linear{{-e.value, Scalar(1)}};
    for (std::size_t k = 0; k < e.alg_mult; ++k) p = p * linear;
  }
  return p;
}

Polynomial charpoly(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "charpoly needs a square matrix");
  const std::size_t n = a.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  Matrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I ; c_{n-k} = -tr(A M_k) / k
    m = mat_mul(a, m);
    for (std::size_t d = 0; d < n; ++d) m(d, d) += c[n - k + 1];
    const Matrix am = mat_mul(a, m);
    Scalar trace;
    for (std::size_t d = 0; d < n; ++d) trace += am(d, d);
    c[n - k] = -trace / Scalar(static_cast<long>(k));
  }
  return {std::move(c)};
}

Spectrum find_spectrum(const Polynomial& input) {
  Polynomial p = trimmed(input);
  if (p.degree() < 1) throw Error(ErrorKind::InvalidSpectrum, "polynomial has no roots");
  if (!p.is_real()) {
    throw Error(ErrorKind::IrrationalSpectrum,
                "characteristic polynomial has nonreal coefficients; supply --spectrum");
  }

  std::vector<Eigenvalue> roots;

  std::size_t zeros = 0;
  while (zeros < p.coeffs.size() && p.coeffs[zeros].is_zero()) ++zeros;
  if (zeros > 0) {
    add_root(roots, Scalar(0), zeros);
    p.coeffs.erase(p.coeffs.begin(), p.coeffs.begin() + static_cast<std::ptrdiff_t>(zeros));
  }

  if (p.degree() >= 1) {
    // Integer coefficients with the same roots.
    Integer lcm_den(1);
    for (const auto& c : p.coeffs) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.re().get_den_mpz_t());
    const Integer a0 = Rational(p.coeffs.front().re() * lcm_den).get_num();
    const Integer an = Rational(p.coeffs.back().re() * lcm_den).get_num();

    std::set<Rational> candidates;
    const auto num_divs = positive_divisors(a0);
    const auto den_divs = positive_divisors(an);
    for (const auto& d : num_divs) {
      for (const auto& e : den_divs) {
        const Rational r = make_rational(d, e);
        candidates.insert(r);
        candidates.insert(-r);
      }
    }
    for (const auto& r : candidates) {
      if (p.degree() < 1) break;
      const Scalar x(r);
      std::size_t m = 0;
      while (p.degree() >= 1 && p.evaluate(x).is_zero()) {
        p = deflate(p, x);
        ++m;
      }
      if (m > 0) add_root(roots, x, m);
    }
  }

  if (p.degree() == 2) {
    const Rational a = p.coeffs[2].re();
    const Rational b = p.coeffs[1].re();
    const Rational c = p.coeffs[0].re();
    const Rational disc = b * b - 4 * a * c;
    const Rational two_a = 2 * a;
    if (auto r = exact_sqrt(disc)) {
      add_root(roots, Scalar((-b + *r) / two_a), 1);
      add_root(roots, Scalar((-b - *r) / two_a), 1);
    } else if (auto s = exact_sqrt(-disc)) {
      add_root(roots, Scalar(-b / two_a, *s / two_a), 1);
      add_root(roots, Scalar(-b / two_a, -*s / two_a), 1);
    } else {
      throw Error(ErrorKind::IrrationalSpectrum, "quadratic factor has irrational roots; supply --spectrum");
    }
  } else if (p.degree() >= 1) {
    throw Error(ErrorKind::IrrationalSpectrum,
                "factor of degree " + std::to_string(p.degree()) + " has no rational roots; supply --spectrum");
  }
  return Spectrum(std::move(roots));
}

Spectrum verify_spectrum(const Matrix& a, const Spectrum& claimed) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "spectrum of a non-square matrix");
  for (const auto& e : claimed) {
    if (e.alg_mult == 0) throw Error(ErrorKind::InvalidSpectrum, "multiplicity must be positive");
  }
  if (claimed.dimension() != a.rows()) {
    throw Error(ErrorKind::InvalidSpectrum, "multiplicities sum to " + std::to_string(claimed.dimension()) +
                                                ", expected " + std::to_string(a.rows()));
  }
  for (std::size_t k = 1; k < claimed.size(); ++k) {
    if (claimed.pairs()[k - 1].value == claimed.pairs()[k].value) {
      throw Error(ErrorKind::InvalidSpectrum, "eigenvalue " + gq_format(claimed.pairs()[k].value) + " repeated");
    }
  }
  if (polynomial_from_spectrum(claimed) != charpoly(a)) {
    throw Error(ErrorKind::InvalidSpectrum, "product of factors does not equal the characteristic polynomial");
  }
  return claimed;
}

Spectrum shift_spectrum(const Spectrum& s, const Scalar& mu) {
  std::vector<Eigenvalue> out;
  out.reserve(s.size());
  for (const auto& e : s) out.push_back({e.value - mu, e.alg_mult});
  return Spectrum(std::move(out));
}

Spectrum resolve_spectrum(const Matrix& a, const std::optional<Spectrum>& s) {
  if (s) return verify_spectrum(a, *s);
  return find_spectrum(charpoly(a));
}

}  // namespace eigenmatrix
