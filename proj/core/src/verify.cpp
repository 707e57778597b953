#include "eigenmatrix/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <utility>

#include "eigenmatrix/error.hpp"

namespace eigenmatrix {

namespace {

constexpr int kMaxDraws = 200;

// Uniform in [lo, hi]; plain modulo keeps results identical across standard libraries.
long draw(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

Matrix build_d(const GeneratorConfig& cfg) {
  Matrix d(cfg.dim, cfg.dim);
  if (cfg.jordan_blocks.empty()) {
    std::size_t k = 0;
    for (const auto& e : cfg.spectrum) {
      for (std::size_t r = 0; r < e.alg_mult; ++r, ++k) d(k, k) = e.value;
    }
    return d;
  }
  for (const auto& e : cfg.spectrum) {
    std::size_t total = 0;
    for (const auto& b : cfg.jordan_blocks) {
      if (b.eigenvalue == e.value) total += b.size;
    }
    if (total != e.alg_mult) throw Error(ErrorKind::InvalidSpectrum, "Jordan block sizes do not match multiplicity");
  }
  std::size_t k = 0;
  for (const auto& b : cfg.jordan_blocks) {
    if (!cfg.spectrum.contains(b.eigenvalue) || b.size == 0) {
      throw Error(ErrorKind::InvalidSpectrum, "Jordan block for an eigenvalue outside the spectrum");
    }
    for (std::size_t r = 0; r < b.size; ++r, ++k) {
      d(k, k) = b.eigenvalue;
      if (r > 0) d(k - 1, k) = 1;
    }
  }
  return d;
}

Integer factorial_of(std::size_t k) {
  Integer f(1);
  for (std::size_t j = 2; j <= k; ++j) f *= static_cast<unsigned long>(j);
  return f;
}

std::vector<std::size_t> random_partition(std::mt19937_64& rng, std::size_t m, bool need_long_block) {
  std::vector<std::size_t> parts;
  std::size_t left = m;
  if (need_long_block) {
    const auto first = static_cast<std::size_t>(draw(rng, 2, static_cast<long>(m)));
    parts.push_back(first);
    left -= first;
  }
  while (left > 0) {
    const auto p = static_cast<std::size_t>(draw(rng, 1, static_cast<long>(left)));
    parts.push_back(p);
    left -= p;
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

}  // namespace

std::vector<Vector> oracle_eigenvectors(const Matrix& a, const Scalar& lambda, OpCounter* counter) {
  const Matrix k = mat_sub_scalar_diag(a, lambda);
  if (counter) counter->scalar_adds += a.rows();
  std::vector<Vector> basis = mat_nullspace_basis(k, counter);
  if (basis.empty()) throw Error(ErrorKind::NotInSpectrum, gq_format(lambda) + " is not an eigenvalue");
  return basis;
}

bool residual_check(const Matrix& a, const Scalar& lambda, const Vector& v, Side side) {
  if (v.is_zero()) throw Error(ErrorKind::ZeroVector, "the zero vector is not an eigenvector");
  const Matrix k = mat_sub_scalar_diag(a, lambda);
  if (side == Side::Right) {
    if (v.size() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "vector length != cols");
    const Vector col = v.orientation() == Orientation::Column ? v : v.transposed();
    return mat_vec_mul(k, col).is_zero();
  }
  if (v.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "vector length != rows");
  const Vector row = v.orientation() == Orientation::Row ? v : v.transposed();
  return mat_vec_mul(k, row).is_zero();
}

bool span_equal(const SpanBasis& b1, const SpanBasis& b2) {
  if (b1.ambient_dim != b2.ambient_dim) throw Error(ErrorKind::DimensionMismatch, "ambient dimensions differ");
  const std::size_t n = b1.ambient_dim;
  for (const auto* b : {&b1, &b2}) {
    for (const auto& v : b->vectors) {
      if (v.size() != n) throw Error(ErrorKind::DimensionMismatch, "vector length != ambient dimension");
    }
  }
  std::vector<Vector> both = b1.vectors;
  both.insert(both.end(), b2.vectors.begin(), b2.vectors.end());
  const std::size_t r1 = rank_of(b1.vectors, n);
  const std::size_t r2 = rank_of(b2.vectors, n);
  return r1 == r2 && r1 == rank_of(both, n);
}

bool span_equal(const std::vector<Vector>& b1, const std::vector<Vector>& b2, std::size_t ambient_dim) {
  return span_equal(SpanBasis{b1, ambient_dim}, SpanBasis{b2, ambient_dim});
}

bool cayley_hamilton_check(const Matrix& a, const Spectrum& s) {
  Matrix p = Matrix::identity(a.rows());
  for (const auto& e : s) {
    const Matrix k = mat_sub_scalar_diag(a, e.value);
    for (std::size_t r = 0; r < e.alg_mult; ++r) p = mat_mul(p, k);
  }
  return p.is_zero();
}

GeneratedMatrix random_spectral_matrix(const GeneratorConfig& cfg) {
  if (cfg.dim == 0 || cfg.spectrum.dimension() != cfg.dim) {
    throw Error(ErrorKind::InvalidSpectrum, "multiplicities must sum to the dimension");
  }
  if (cfg.entry_bound <= 0) throw Error(ErrorKind::GenerationFailed, "entry bound must be positive");
  const Matrix d = build_d(cfg);
  std::mt19937_64 rng(cfg.seed);
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    Matrix p(cfg.dim, cfg.dim);
    for (std::size_t r = 0; r < cfg.dim; ++r) {
      for (std::size_t c = 0; c < cfg.dim; ++c) p(r, c) = draw(rng, -cfg.entry_bound, cfg.entry_bound);
    }
    if (mat_det(p).is_zero()) continue;
    return {mat_mul(mat_mul(p, d), mat_inverse(p)), p};
  }
  throw Error(ErrorKind::GenerationFailed, "no invertible P found");
}

GeneratorConfig random_config(std::uint64_t seed, std::size_t dim, bool defective, long entry_bound) {
  if (dim == 0) throw Error(ErrorKind::GenerationFailed, "dimension must be positive");
  if (defective && dim < 2) throw Error(ErrorKind::GenerationFailed, "a defective matrix needs dimension >= 2");
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);

  const long max_distinct = static_cast<long>(std::min<std::size_t>(dim, 7));
  const long distinct = draw(rng, 1, defective ? std::min(max_distinct, static_cast<long>(dim) - 1) : max_distinct);

  std::vector<long> pool{-3, -2, -1, 0, 1, 2, 3};
  std::vector<Eigenvalue> pairs;
  for (long k = 0; k < distinct; ++k) {
    const auto idx = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(pool.size()) - 1));
    pairs.push_back({Scalar(pool[idx]), 1});
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  for (std::size_t extra = dim - static_cast<std::size_t>(distinct); extra > 0; --extra) {
    pairs[static_cast<std::size_t>(draw(rng, 0, distinct - 1))].alg_mult += 1;
  }

  GeneratorConfig cfg;
  cfg.dim = dim;
  cfg.seed = rng();
  cfg.entry_bound = entry_bound;
  if (defective) {
    bool long_block_placed = false;
    for (const auto& e : pairs) {
      const bool need = !long_block_placed && e.alg_mult >= 2;
      for (std::size_t size : random_partition(rng, e.alg_mult, need)) cfg.jordan_blocks.push_back({e.value, size});
      long_block_placed = long_block_placed || need;
    }
  }
  cfg.spectrum = Spectrum(std::move(pairs));
  return cfg;
}

bool ode_term_check(const Matrix& a, const OdeSolutionTerm& term) {
  if (term.components.empty()) return false;
  const std::size_t n = a.rows();
  const Scalar alpha = term.exponent;
  const Scalar beta(term.beta);

  // (t_power, is_sin) -> coefficient vector on t^p/p! e^{alpha t} trig(beta t)
  std::map<std::pair<std::size_t, bool>, Vector> coef;
  std::size_t top = 0;
  for (const auto& c : term.components) {
    if (c.vector.size() != n) throw Error(ErrorKind::DimensionMismatch, "term vector length != n");
    if (c.trig != Trig::None && term.beta == 0) return false;
    if (c.trig == Trig::None && term.beta != 0) return false;
    if (c.factorial != factorial_of(c.t_power)) return false;
    const auto key = std::make_pair(c.t_power, c.trig == Trig::Sin);
    auto [it, inserted] = coef.try_emplace(key, Vector(n));
    it->second = it->second + c.vector;
    top = std::max(top, c.t_power);
  }
  auto get = [&](std::size_t p, bool sin) {
    auto it = coef.find({p, sin});
    return it == coef.end() ? Vector(n) : it->second;
  };

  for (std::size_t p = 0; p <= top; ++p) {
    for (bool sin : {false, true}) {
      // d/dt: alpha*c(p) + c(p+1) + (cos: +beta*c(p,sin); sin: -beta*c(p,cos))
      Vector lhs = alpha * get(p, sin) + get(p + 1, sin);
      lhs = sin ? lhs - beta * get(p, false) : lhs + beta * get(p, true);
      if (lhs != mat_vec_mul(a, get(p, sin))) return false;
    }
  }
  return true;
}

}  // namespace eigenmatrix
