#include "eigenmatrix/factor.hpp"

#include "eigenmatrix/error.hpp"
#include "eigenmatrix/jordan.hpp"
#include "eigenmatrix/kappa.hpp"

namespace eigenmatrix {

namespace {

Integer factorial(std::size_t k) {
  Integer f(1);
  for (std::size_t j = 2; j <= k; ++j) f *= static_cast<unsigned long>(j);
  return f;
}

Vector real_part(const Vector& v) {
  Vector out(v.size(), v.orientation());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = Scalar(v[k].re());
  return out;
}

Vector imag_part(const Vector& v) {
  Vector out(v.size(), v.orientation());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = Scalar(v[k].im());
  return out;
}

// "2t", "-t", "(2-i)t"; empty for 0.
std::string times_t(const Scalar& x) {
  if (x.is_zero()) return "";
  if (x == Scalar(1)) return "t";
  if (x == Scalar(-1)) return "-t";
  if (x.is_real()) return gq_format(x) + "t";
  return "(" + gq_format(x) + ")t";
}

std::string render_component(const OdeComponent& c, const Rational& beta) {
  std::string s = to_string(c.vector);
  if (c.t_power == 1) s += "*t";
  if (c.t_power > 1) {
    s += "*t^" + std::to_string(c.t_power);
    if (c.factorial != 1) s += "/" + c.factorial.get_str();
  }
  if (c.trig == Trig::Cos) s += "*cos(" + times_t(Scalar(beta)) + ")";
  if (c.trig == Trig::Sin) s += "*sin(" + times_t(Scalar(beta)) + ")";
  return s;
}

}  // namespace

Diagonalization diagonalize(const Matrix& a, const std::optional<Spectrum>& s) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "diagonalize needs a square matrix");
  const Spectrum sigma = resolve_spectrum(a, s);
  DiagonalizabilityVerdict verdict = is_diagonalizable(a, sigma);
  if (!verdict.diagonalizable) {
    throw NotDiagonalizableError("product of kappa-matrices over distinct eigenvalues is nonzero; use jordan",
                                 std::move(verdict.witness));
  }
  const std::size_t n = a.rows();
  Diagonalization d;
  d.D = Matrix(n, n);
  std::vector<Vector> columns;
  for (const auto& e : sigma) {
    const std::vector<Vector> vs = eigenvectors_via_kappa(a, sigma, e.value);
    if (vs.size() != e.alg_mult) {
      throw Error(ErrorKind::InternalInconsistency, "eigenspace dimension below multiplicity");
    }
    for (const auto& v : vs) {
      d.D(columns.size(), columns.size()) = e.value;
      d.eigen_order.push_back(e.value);
      columns.push_back(v);
    }
  }
  d.P = Matrix::from_columns(columns, n);
  d.P_inv = mat_inverse(d.P);
  if (mat_mul(mat_mul(d.P, d.D), d.P_inv) != a) {
    throw Error(ErrorKind::InternalInconsistency, "P D P^-1 does not reproduce the input");
  }
  return d;
}

Matrix matrix_power_binary(const Matrix& a, unsigned n) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "power of a non-square matrix");
  Matrix result = Matrix::identity(a.rows());
  Matrix base = a;
  while (n > 0) {
    if (n & 1u) result = mat_mul(result, base);
    n >>= 1u;
    if (n > 0) base = mat_mul(base, base);
  }
  return result;
}

Matrix matrix_power(const Matrix& a, unsigned n, const std::optional<Spectrum>& s) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "power of a non-square matrix");
  if (n == 0) return Matrix::identity(a.rows());
  Diagonalization d;
  try {
    d = diagonalize(a, s);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotDiagonalizable || e.kind() == ErrorKind::IrrationalSpectrum) {
      return matrix_power_binary(a, n);
    }
    throw;
  }
  Matrix dn = d.D;
  for (std::size_t k = 0; k < dn.rows(); ++k) dn(k, k) = pow(d.D(k, k), n);
  return mat_mul(mat_mul(d.P, dn), d.P_inv);
}

std::vector<OdeSolutionTerm> ode_general_solution(const Matrix& a, const std::optional<Spectrum>& s,
                                                  std::optional<bool> realify) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "ODE system needs a square matrix");
  if (realify.value_or(false) && !a.is_real()) {
    throw Error(ErrorKind::RealifyOnComplexMatrix, "realify needs a matrix with real entries");
  }
  const bool real_form = realify.value_or(a.is_real());
  const Spectrum sigma = resolve_spectrum(a, s);

  std::vector<OdeSolutionTerm> terms;
  auto next_label = [&]() { return terms.size() + 1; };

  for (const auto& e : sigma) {
    const Scalar& lambda = e.value;
    const bool paired = real_form && !lambda.is_real() && sigma.contains(lambda.conj());
    if (paired && sgn(lambda.im()) < 0) continue;  // covered by the conjugate with positive imaginary part

    std::vector<JordanChain> chains;
    const std::vector<Vector> eig = eigenvectors_via_kappa(a, sigma, lambda);
    if (eig.size() == e.alg_mult) {
      for (const auto& v : eig) chains.push_back({lambda, {v}});
    } else {
      chains = build_chains(a, lambda);
    }

    for (const auto& chain : chains) {
      // X_k = sum_{j<=k} x_j t^{k-j}/(k-j)! e^{lambda t}
      for (std::size_t k = 1; k <= chain.size(); ++k) {
        std::vector<OdeComponent> poly;
        for (std::size_t j = k; j >= 1; --j) {
          const std::size_t p = k - j;
          poly.push_back({chain.vectors[j - 1], p, factorial(p), Trig::None});
        }
        if (!paired) {
          terms.push_back({next_label(), lambda, Rational(0), std::move(poly)});
          continue;
        }
        // Re and Im of V e^{(alpha + beta i) t}.
        OdeSolutionTerm x1{next_label(), Scalar(lambda.re()), lambda.im(), {}};
        OdeSolutionTerm x2{0, Scalar(lambda.re()), lambda.im(), {}};
        for (const auto& c : poly) {
          const Vector re = real_part(c.vector);
          const Vector im = imag_part(c.vector);
          if (!re.is_zero()) {
            x1.components.push_back({re, c.t_power, c.factorial, Trig::Cos});
            x2.components.push_back({re, c.t_power, c.factorial, Trig::Sin});
          }
          if (!im.is_zero()) {
            x1.components.push_back({Scalar(-1) * im, c.t_power, c.factorial, Trig::Sin});
            x2.components.push_back({im, c.t_power, c.factorial, Trig::Cos});
          }
        }
        terms.push_back(std::move(x1));
        x2.label = next_label();
        terms.push_back(std::move(x2));
      }
    }
  }
  if (terms.size() != a.rows()) throw Error(ErrorKind::InternalInconsistency, "ODE term count differs from n");
  return terms;
}

Vector ode_initial_value(const OdeSolutionTerm& term) {
  if (term.components.empty()) throw Error(ErrorKind::InternalInconsistency, "empty ODE term");
  Vector x(term.components.front().vector.size());
  for (const auto& c : term.components) {
    if (c.t_power == 0 && c.trig != Trig::Sin) x = x + c.vector;
  }
  return x;
}

std::string render_ode_solution(const std::vector<OdeSolutionTerm>& terms) {
  std::string out;
  for (const auto& term : terms) {
    if (!out.empty()) out += " + ";
    out += "c" + std::to_string(term.label) + "*";
    std::string body;
    for (const auto& c : term.components) {
      if (!body.empty()) body += " + ";
      body += render_component(c, term.beta);
    }
    out += term.components.size() > 1 ? "(" + body + ")" : body;
    const std::string e = times_t(term.exponent);
    if (!e.empty()) out += "*exp(" + e + ")";
  }
  return out;
}

}  // namespace eigenmatrix
