#include "cli.hpp"

#include <chrono>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "eigenmatrix/error.hpp"
#include "eigenmatrix/factor.hpp"
#include "eigenmatrix/jordan.hpp"
#include "eigenmatrix/kappa.hpp"
#include "eigenmatrix/verify.hpp"

namespace eigenmatrix::cli {

namespace {

struct Options {
  std::string input;
  std::string spectrum_path;
  std::string target;
  std::string method = "kappa";
  bool left = false;
  unsigned n = 0;
  bool n_given = false;
  bool json = false;
  bool no_roots = false;
  std::uint64_t seed = 1;
  std::size_t dim = 3;
  std::size_t count = 1;
  bool no_realify = false;
};

Matrix load_matrix(const Options& o) {
  const Matrix m = parse_matrix_json(read_file(o.input));
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "input matrix must be square");
  return m;
}

std::optional<Spectrum> load_spectrum(const Options& o) {
  if (o.spectrum_path.empty()) return std::nullopt;
  return parse_spectrum_json(read_file(o.spectrum_path));
}

Json counter_json(const OpCounter& c) {
  return {{"scalar_mults", c.scalar_mults}, {"scalar_adds", c.scalar_adds}, {"scalar_divs", c.scalar_divs}};
}

std::string matrix_text(const Matrix& m) {
  std::string s;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    s += "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) s += ", ";
      s += gq_format(m(r, c));
    }
    s += "]\n";
  }
  return s;
}

std::string spectrum_text(const Spectrum& s) {
  std::string out;
  for (const auto& e : s) {
    if (!out.empty()) out += ", ";
    out += gq_format(e.value) + " (x" + std::to_string(e.alg_mult) + ")";
  }
  return out;
}

std::vector<Vector> vectors_for(const Matrix& a, const Spectrum& s, const Scalar& target, const Options& o) {
  if (o.left) {
    if (o.method != "kappa") throw Error(ErrorKind::SchemaError, "--left supports only --method kappa");
    return left_eigenvectors_via_kappa(a, s, target);
  }
  if (!s.contains(target)) throw Error(ErrorKind::TargetNotInSpectrum, gq_format(target) + " is not in the spectrum");
  if (o.method == "kappa") return eigenvectors_via_kappa(a, s, target);
  if (o.method == "oracle") return oracle_eigenvectors(a, target);
  if (o.method == "intersect") return eigenvectors_via_intersection(a, s, target);
  if (o.method == "cross") return {cross_product_eigenvector_3x3(a, target)};
  throw Error(ErrorKind::SchemaError, "unknown method " + o.method);
}

int cmd_eigenvectors(const Options& o, std::ostream& out) {
  const Matrix a = load_matrix(o);
  const Spectrum s = resolve_spectrum(a, load_spectrum(o));
  if (!o.target.empty()) {
    const std::vector<Vector> vs = vectors_for(a, s, gq_parse(o.target), o);
    if (o.json) {
      out << vectors_to_json(vs).dump() << "\n";
    } else {
      for (const auto& v : vs) out << to_string(v) << "\n";
    }
    return exit_code::kOk;
  }
  Json list = Json::array();
  for (const auto& e : s) {
    const std::vector<Vector> vs = vectors_for(a, s, e.value, o);
    if (o.json) {
      list.push_back({{"eigenvalue", gq_format(e.value)},
                      {"algebraic_multiplicity", e.alg_mult},
                      {"geometric_multiplicity", vs.size()},
                      {"vectors", vectors_to_json(vs)}});
    } else {
      out << "eigenvalue " << gq_format(e.value) << " (algebraic " << e.alg_mult << ", geometric " << vs.size()
          << ")\n";
      for (const auto& v : vs) out << "  " << to_string(v) << "\n";
    }
  }
  if (o.json) out << list.dump() << "\n";
  return exit_code::kOk;
}

int cmd_diagonalize(const Options& o, std::ostream& out) {
  const Matrix a = load_matrix(o);
  const Diagonalization d = diagonalize(a, load_spectrum(o));
  if (o.json) {
    Json order = Json::array();
    for (const auto& x : d.eigen_order) order.push_back(gq_format(x));
    out << Json{{"P", matrix_to_json(d.P)}, {"D", matrix_to_json(d.D)}, {"P_inv", matrix_to_json(d.P_inv)},
                {"eigenvalues", order}}
               .dump()
        << "\n";
  } else {
    out << "P =\n" << matrix_text(d.P) << "D =\n" << matrix_text(d.D) << "P^-1 =\n" << matrix_text(d.P_inv);
  }
  return exit_code::kOk;
}

int cmd_jordan(const Options& o, std::ostream& out) {
  const Matrix a = load_matrix(o);
  const Spectrum s = resolve_spectrum(a, load_spectrum(o));
  const JordanForm f = jordan_form(a, s);
  if (o.json) {
    Json blocks = Json::array();
    for (const auto& b : f.blocks) blocks.push_back({{"eigenvalue", gq_format(b.eigenvalue)}, {"size", b.size}});
    out << Json{{"P", matrix_to_json(f.P)}, {"J", matrix_to_json(f.J)}, {"P_inv", matrix_to_json(f.P_inv)},
                {"blocks", blocks}}
               .dump()
        << "\n";
  } else {
    out << "blocks:";
    for (const auto& b : f.blocks) out << " J" << b.size << "(" << gq_format(b.eigenvalue) << ")";
    out << "\nP =\n" << matrix_text(f.P) << "J =\n" << matrix_text(f.J) << "P^-1 =\n" << matrix_text(f.P_inv);
  }
  return exit_code::kOk;
}

int cmd_charpoly(const Options& o, std::ostream& out) {
  const Matrix a = load_matrix(o);
  const Polynomial p = charpoly(a);
  std::optional<Spectrum> roots;
  if (!o.no_roots) roots = find_spectrum(p);
  if (o.json) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs) coeffs.push_back(gq_format(c));
    Json j{{"polynomial", format_polynomial(p)}, {"coefficients", coeffs}};
    if (roots) j["roots"] = spectrum_to_json(*roots)["eigenvalues"];
    out << j.dump() << "\n";
  } else {
    out << format_polynomial(p) << "\n";
    if (roots) out << "roots: " << spectrum_text(*roots) << "\n";
  }
  return exit_code::kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Matrix a = load_matrix(o);
  const Spectrum s = resolve_spectrum(a, load_spectrum(o));
  const DiagonalizabilityVerdict v = is_diagonalizable(a, s);
  const char* verdict = v.diagonalizable ? "diagonalizable" : "not diagonalizable";
  if (o.json) {
    out << Json{{"diagonalizable", v.diagonalizable}, {"verdict", verdict}, {"witness", matrix_to_json(v.witness)}}
               .dump()
        << "\n";
  } else {
    out << verdict << "\n";
    out << "product of kappa-matrices over distinct eigenvalues =\n" << matrix_text(v.witness);
  }
  return exit_code::kOk;
}

int cmd_power(const Options& o, std::ostream& out) {
  if (!o.n_given) throw Error(ErrorKind::SchemaError, "power requires --n");
  const Matrix a = load_matrix(o);
  const Matrix p = matrix_power(a, o.n, load_spectrum(o));
  if (o.json) {
    out << matrix_to_json(p).dump() << "\n";
  } else {
    out << matrix_text(p);
  }
  return exit_code::kOk;
}

int cmd_ode(const Options& o, std::ostream& out) {
  const Matrix a = load_matrix(o);
  std::optional<bool> realify;
  if (o.no_realify) realify = false;
  const std::vector<OdeSolutionTerm> terms = ode_general_solution(a, load_spectrum(o), realify);
  if (o.json) {
    Json list = Json::array();
    for (const auto& t : terms) {
      Json comps = Json::array();
      for (const auto& c : t.components) {
        const char* trig = c.trig == Trig::Cos ? "cos" : c.trig == Trig::Sin ? "sin" : "none";
        comps.push_back({{"vector", vector_to_json(c.vector)},
                         {"t_power", c.t_power},
                         {"factorial", c.factorial.get_str()},
                         {"trig", trig}});
      }
      list.push_back({{"label", "c" + std::to_string(t.label)},
                      {"exponent", gq_format(t.exponent)},
                      {"beta", format_rational(t.beta)},
                      {"components", comps}});
    }
    out << Json{{"text", render_ode_solution(terms)}, {"terms", list}}.dump() << "\n";
  } else {
    out << "X(t) = " << render_ode_solution(terms) << "\n";
  }
  return exit_code::kOk;
}

int cmd_bench(const Options& o, std::ostream& out) {
  Json reports = Json::array();
  if (!o.input.empty()) {
    const Matrix a = load_matrix(o);
    reports.push_back(bench_report(a, resolve_spectrum(a, load_spectrum(o))));
  } else {
    for (std::size_t k = 0; k < o.count; ++k) {
      const GeneratorConfig cfg = random_config(o.seed + k, o.dim, false);
      reports.push_back(bench_report(random_spectral_matrix(cfg).a, cfg.spectrum));
    }
  }
  if (o.json) {
    out << (reports.size() == 1 ? reports.front() : reports).dump() << "\n";
    return exit_code::kOk;
  }
  for (const auto& r : reports) {
    out << "dim " << r["input"]["dim"].get<std::size_t>() << "\n";
    for (const char* m : {"kappa", "oracle"}) {
      const Json& c = r["methods"][m];
      out << "  " << m << ": mults=" << c["scalar_mults"].get<std::uint64_t>()
          << " adds=" << c["scalar_adds"].get<std::uint64_t>() << " divs=" << c["scalar_divs"].get<std::uint64_t>()
          << " wall_time_ns=" << c["wall_time_ns"].get<std::int64_t>() << "\n";
    }
  }
  return exit_code::kOk;
}

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::SchemaError:
    case ErrorKind::DivisionByZero:
    case ErrorKind::NotSquare:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::AllRowsParallel:
    case ErrorKind::RealifyOnComplexMatrix:
    case ErrorKind::GenerationFailed:
      return exit_code::kBadInput;
    case ErrorKind::IrrationalSpectrum:
      return exit_code::kIrrationalSpectrum;
    case ErrorKind::InvalidSpectrum:
    case ErrorKind::WrongSpectrum:
    case ErrorKind::TargetNotInSpectrum:
    case ErrorKind::NotInSpectrum:
      return exit_code::kInvalidSpectrum;
    default:
      return exit_code::kInternal;
  }
}

}  // namespace

Json bench_report(const Matrix& a, const Spectrum& s) {
  using Clock = std::chrono::steady_clock;
  OpCounter kappa_total;
  OpCounter oracle_total;
  std::int64_t kappa_ns = 0;
  std::int64_t oracle_ns = 0;
  Json per = Json::array();
  for (const auto& e : s) {
    OpCounter kc;
    auto t0 = Clock::now();
    const auto kv = eigenvectors_via_kappa(a, s, e.value, &kc);
    auto t1 = Clock::now();
    OpCounter oc;
    const auto ov = oracle_eigenvectors(a, e.value, &oc);
    auto t2 = Clock::now();
    kappa_ns += std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
    oracle_ns += std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1).count();
    for (auto [total, part] : {std::pair{&kappa_total, &kc}, std::pair{&oracle_total, &oc}}) {
      total->scalar_mults += part->scalar_mults;
      total->scalar_adds += part->scalar_adds;
      total->scalar_divs += part->scalar_divs;
    }
    per.push_back({{"eigenvalue", gq_format(e.value)},
                   {"algebraic_multiplicity", e.alg_mult},
                   {"geometric_multiplicity", kv.size()},
                   {"oracle_geometric_multiplicity", ov.size()},
                   {"kappa", counter_json(kc)},
                   {"oracle", counter_json(oc)}});
  }
  Json kappa = counter_json(kappa_total);
  kappa["wall_time_ns"] = kappa_ns;
  Json oracle = counter_json(oracle_total);
  oracle["wall_time_ns"] = oracle_ns;
  return {{"input", {{"dim", a.rows()}, {"spectrum", spectrum_to_json(s)["eigenvalues"]}}},
          {"methods", {{"kappa", kappa}, {"oracle", oracle}}},
          {"per_eigenvalue", per}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact eigenvectors, diagonalization and Jordan forms over Q(i)"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool input_required = true) {
    auto* in = sub->add_option("matrix", o.input, "Matrix JSON file");
    if (input_required) in->required();
    sub->add_option("--spectrum", o.spectrum_path, "Spectrum JSON file (required when roots leave Q(i))");
    sub->add_flag("--json", o.json, "Machine-readable output");
  };

  auto* eig = app.add_subcommand("eigenvectors", "Eigenvectors per eigenvalue");
  add_common(eig);
  eig->add_option("--target", o.target, "Only this eigenvalue");
  eig->add_option("--method", o.method, "kappa | cross | oracle | intersect")
      ->check(CLI::IsMember({"kappa", "cross", "oracle", "intersect"}));
  eig->add_flag("--left", o.left, "Left (row) eigenvectors");

  auto* left = app.add_subcommand("left", "Left eigenvectors w A = l w");
  add_common(left);
  left->add_option("--target", o.target, "Only this eigenvalue");

  auto* diag = app.add_subcommand("diagonalize", "A = P D P^-1");
  add_common(diag);
  auto* jord = app.add_subcommand("jordan", "A = P J P^-1");
  add_common(jord);
  auto* cp = app.add_subcommand("charpoly", "Characteristic polynomial and exact roots");
  add_common(cp);
  cp->add_flag("--no-roots", o.no_roots, "Skip the root search");
  auto* check = app.add_subcommand("check", "Diagonalizability test with witness");
  add_common(check);
  auto* power = app.add_subcommand("power", "A^n");
  add_common(power);
  power->add_option("--n", o.n, "Exponent")->required();
  auto* ode = app.add_subcommand("ode", "General solution of X' = A X");
  add_common(ode);
  ode->add_flag("--no-realify", o.no_realify, "Keep complex exponentials");
  auto* bench = app.add_subcommand("bench", "Operation counts: kappa method vs echelon oracle");
  add_common(bench, false);
  bench->add_option("--seed", o.seed, "Seed for random matrices when no file is given");
  bench->add_option("--dim", o.dim, "Dimension of random matrices")->check(CLI::Range(1, 12));
  bench->add_option("--count", o.count, "Number of random matrices")->check(CLI::Range(1, 10000));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kBadInput;
  }
  o.n_given = power->parsed();
  if (left->parsed()) o.left = true;

  try {
    if (eig->parsed() || left->parsed()) return cmd_eigenvectors(o, out);
    if (diag->parsed()) return cmd_diagonalize(o, out);
    if (jord->parsed()) return cmd_jordan(o, out);
    if (cp->parsed()) return cmd_charpoly(o, out);
    if (check->parsed()) return cmd_check(o, out);
    if (power->parsed()) return cmd_power(o, out);
    if (ode->parsed()) return cmd_ode(o, out);
    if (bench->parsed()) return cmd_bench(o, out);
  } catch (const NotDiagonalizableError& e) {
    err << "error: " << e.what() << "\n";
    if (diag->parsed()) {
      err << "witness =\n" << matrix_text(e.witness()) << "hint: use the jordan command\n";
      return exit_code::kNotDiagonalizable;
    }
    return exit_code::kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::IrrationalSpectrum) err << "hint: supply the eigenvalues with --spectrum <file>\n";
    return exit_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::kInternal;
  }
  return exit_code::kBadInput;
}

}  // namespace eigenmatrix::cli
