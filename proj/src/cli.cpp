#include "imx/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <random>

#include "CLI11.hpp"
#include "imx/classify.hpp"
#include "imx/error.hpp"
#include "imx/linalg.hpp"
#include "imx/linsolve.hpp"
#include "imx/oracle.hpp"
#include "imx/parametric.hpp"
#include "imx/problem_io.hpp"
#include "imx/ranges.hpp"
#include "imx/report.hpp"

namespace imx {

namespace {

struct Options {
  std::string format = "json";
  std::optional<double> tolerance;
  std::uint64_t seed = 0;
  unsigned cap = kDefaultVertexCapBits;
  std::string file;
  std::string what;
  std::string norm = "inf";
  unsigned power = 2;
  std::string method = "auto";
  std::string op;
};

struct Output {
  std::ostream& out;
  std::ostream& err;
  const Options& opt;

  bool json() const { return opt.format == "json"; }

  void emit(const std::string& command, Json body, const std::string& text) const {
    if (json()) {
      Json doc;
      doc["format_version"] = kFormatVersion;
      doc["command"] = command;
      doc.update(body);
      out << doc.dump(2) << "\n";
    } else {
      out << text;
    }
  }
};

OracleConfig oracle_config(const Options& opt) {
  OracleConfig cfg;
  cfg.vertex_cap = opt.cap >= 63 ? ~std::uint64_t{0} : std::uint64_t{1} << opt.cap;
  cfg.seed = opt.seed;
  return cfg;
}

Problem load(const Options& opt, ProblemKind want) {
  Problem p = load_problem(opt.file);
  if (p.kind != want)
    throw Error(ErrorCode::ParseError, opt.file + ": kind: expected \"" + std::string(to_string(want)) + "\", got \"" +
                                           std::string(to_string(p.kind)) + "\"");
  if (want != ProblemKind::Parametric && !p.matrix.is_square())
    throw Error(ErrorCode::InvalidArgument, "matrix is not square");
  return p;
}

Norm parse_norm(const std::string& s) {
  if (s == "inf") return Norm::Inf;
  if (s == "one") return Norm::One;
  if (s == "frobenius") return Norm::Frobenius;
  if (s == "chebyshev") return Norm::Chebyshev;
  return Norm::Inf1;
}

// classify

ClassReport guarded(MatrixClass cls, const std::function<ClassReport()>& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (exit_code_for(e.code()) == 2) throw;
    ClassReport r;
    r.cls = cls;
    r.note = e.what();
    return r;
  }
}

int cmd_classify(const Output& o) {
  const Problem p = load(o.opt, ProblemKind::Matrix);
  const IntervalMatrix& a = p.matrix;
  const unsigned cap = o.opt.cap;
  std::vector<ClassReport> reports = {
      guarded(MatrixClass::M, [&] { return is_m_matrix(a); }),
      guarded(MatrixClass::H, [&] { return is_h_matrix(a); }),
      guarded(MatrixClass::InverseNonnegative, [&] { return is_inverse_nonnegative(a); }),
      guarded(MatrixClass::TotallyPositive, [&] { return is_totally_positive(a); }),
      guarded(MatrixClass::BMatrix, [&] { return is_b_matrix(a); }),
      guarded(MatrixClass::InverseM, [&] { return is_inverse_m(a, cap); }),
      guarded(MatrixClass::PMatrixSpecialCase, [&] { return p_matrix_special(a, cap); }),
      guarded(MatrixClass::Regular, [&] { return regularity_via_h(a); }),
  };
  if (p.symmetric)
    reports.push_back(guarded(MatrixClass::PositiveDefiniteSufficient,
                              [&] { return positive_definite_sufficient(SymmetricIntervalMatrix(a)); }));
  const ClassReport mid_h = is_h_matrix(a.mid());
  const StructureFlags f = classify_structure(a);

  Json body;
  body["interval"] = Json::array();
  for (const ClassReport& r : reports) body["interval"].push_back(to_json(r));
  body["midpoint"] = Json::array({to_json(mid_h)});
  body["structure"] = {{"nonnegative", f.nonnegative},
                       {"midpoint_nonnegative", f.midpoint_nonnegative},
                       {"diagonally_interval", f.diagonally_interval},
                       {"symmetric_midpoint", f.symmetric_midpoint},
                       {"symmetric_radius", f.symmetric_radius}};
  std::string text = "interval matrix:\n";
  for (const ClassReport& r : reports) text += "  " + render_text(r);
  text += "midpoint:\n  " + render_text(mid_h);
  text += "structure:";
  for (const auto& [k, v] : body["structure"].items())
    if (v.get<bool>()) text += " " + k;
  text += "\n";
  o.emit("classify", body, text);
  return 0;
}

// range

struct NamedRange {
  std::string name;
  ScalarRange range;
  std::function<double(const Matrix&)> f;
  bool symmetric = false;
};

std::vector<NamedRange> scalar_ranges(const Problem& p, const Options& opt) {
  const IntervalMatrix& a = p.matrix;
  const unsigned cap = opt.cap;
  std::vector<NamedRange> out;
  auto attempt = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      if (exit_code_for(e.code()) != 1) throw;
    }
  };
  auto sym_eig = [](std::size_t i) { return [i](const Matrix& m) { return sym_eigenvalues(symmetrize(m))[i]; }; };
  const std::string& w = opt.what;
  if (w == "det") {
    out.push_back({"det", det_range(a, cap), [](const Matrix& m) { return det(m); }});
  } else if (w == "eig") {
    if (p.symmetric && a.is_diagonally_interval()) {
      const auto r = eig_ranges_diag_interval(SymmetricIntervalMatrix(a));
      for (std::size_t i = 0; i < r.size(); ++i)
        out.push_back({"lambda_" + std::to_string(i + 1), r[i], sym_eig(i), true});
    } else {
      attempt([&] {
        const auto r = eig_ranges_tp(a);
        for (std::size_t i = 0; i < r.size(); ++i)
          out.push_back({"lambda_" + std::to_string(i + 1), r[i],
                         [i](const Matrix& m) { return real_eigenvalues(m)[i]; }});
      });
      if (out.empty() && p.symmetric) {
        attempt([&] {
          out.push_back({"lambda_min", lambda_min_inverse_nonneg(SymmetricIntervalMatrix(a)),
                         [](const Matrix& m) { return sym_eigenvalues(symmetrize(m)).back(); }, true});
        });
        attempt([&] {
          const auto r = nonneg_ranges(a);
          if (r.lambda_max)
            out.push_back({"lambda_max", *r.lambda_max, sym_eig(0), true});
        });
      }
    }
  } else if (w == "sigma") {
    attempt([&] {
      out.push_back({"sigma_max", nonneg_ranges(a).sigma_max,
                     [](const Matrix& m) { return singular_values(m).front(); }});
    });
    attempt([&] {
      out.push_back({"sigma_min", sigma_min_range(a), [](const Matrix& m) { return singular_values(m).back(); }});
    });
  } else if (w == "rho") {
    if (p.symmetric && a.is_diagonally_interval())
      out.push_back({"rho", spectral_radius_range_diag_interval(SymmetricIntervalMatrix(a)),
                     [](const Matrix& m) { return spectral_radius(symmetrize(m)); }, true});
    else
      out.push_back({"rho", nonneg_ranges(a).rho, [](const Matrix& m) { return spectral_radius(m); }});
  } else if (w == "norm") {
    const Norm which = parse_norm(opt.norm);
    out.push_back({"norm_" + opt.norm, norm_range(a, which, cap),
                   [which, cap](const Matrix& m) { return norm(m, which, cap); }});
  } else if (w == "rr") {
    out.push_back({"rr", rr_range(a, cap), [cap](const Matrix& m) { return regularity_radius(m, cap); }});
  }
  if (out.empty()) throw Error(ErrorCode::NoApplicableTheorem, "no " + w + " range theorem applies");
  return out;
}

MatrixRange matrix_range(const Problem& p, const Options& opt) {
  if (opt.what == "inverse") return inverse_bounds(p.matrix, opt.cap);
  if (opt.what == "power") return power_hull(p.matrix, opt.power);
  return cube_hull_diag_interval(p.matrix);
}

bool is_matrix_valued(const std::string& what) { return what == "inverse" || what == "power" || what == "cube"; }

int cmd_range(const Output& o) {
  const Problem p = load(o.opt, ProblemKind::Matrix);
  Json body;
  body["characteristic"] = o.opt.what;
  std::string text;
  if (is_matrix_valued(o.opt.what)) {
    const MatrixRange r = matrix_range(p, o.opt);
    body["matrix_range"] = to_json(r);
    text = render_text(r, o.opt.what == "power" ? "A^" + std::to_string(o.opt.power) : o.opt.what);
  } else {
    body["ranges"] = Json::array();
    for (const NamedRange& r : scalar_ranges(p, o.opt)) {
      Json j = to_json(r.range);
      j["name"] = r.name;
      body["ranges"].push_back(j);
      text += render_text(r.range, r.name);
    }
  }
  o.emit("range", body, text);
  return 0;
}

// solve

HullResult oracle_hull(const IntervalLinearSystem& sys, const Options& opt) {
  HullResult r;
  r.hull = oracle_solution_hull(sys, oracle_config(opt));
  r.method = SolveMethod::Oracle;
  r.label = "vertex oracle";
  r.exactness = Exactness::ExactHull;
  return r;
}

HullResult solve_auto(const IntervalLinearSystem& sys, const Options& opt, std::ostream* warn) {
  const IntervalMatrix& a = sys.a;
  auto skip_case = [](const Error& e) { return e.code() == ErrorCode::NoApplicableCase; };
  if (is_inverse_nonnegative(a).yes()) {
    try {
      return hull_inverse_nonnegative(sys);
    } catch (const Error& e) {
      if (!skip_case(e)) throw;
    }
  }
  if (is_totally_positive(a).yes()) {
    try {
      return hull_totally_positive(sys);
    } catch (const Error& e) {
      if (!skip_case(e)) throw;
    }
  }
  if (is_h_matrix(a).yes()) return hull_hbrnk(sys);
  try {
    if (is_inverse_m(a, opt.cap).yes()) return hull_bounds_inverse_m(sys, opt.cap);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
  }
  if (warn) *warn << "warning: no structured method applies; using the vertex oracle (exponential cost)\n";
  return oracle_hull(sys, opt);
}

HullResult solve_with(const IntervalLinearSystem& sys, const Options& opt, std::ostream* warn) {
  const std::string& m = opt.method;
  if (m == "invnonneg") return hull_inverse_nonnegative(sys);
  if (m == "tp") return hull_totally_positive(sys);
  if (m == "hbrnk") return hull_hbrnk(sys);
  if (m == "ge") return interval_gauss_elim(sys);
  if (m == "inversem") return hull_bounds_inverse_m(sys, opt.cap);
  if (m == "oracle") return oracle_hull(sys, opt);
  return solve_auto(sys, opt, warn);
}

int cmd_solve(const Output& o) {
  const Problem p = load(o.opt, ProblemKind::System);
  const HullResult r = solve_with(IntervalLinearSystem(p.matrix, p.rhs), o.opt, &o.err);
  o.emit("solve", {{"result", to_json(r)}}, render_text(r));
  return 0;
}

// param

HullResult param_hull(const ParametricSystem& sys, const Options& opt) {
  if (opt.method == "rank-one") return hull_rank_one(sys, opt.cap);
  if (opt.method == "popova") return popova_hull(sys, opt.cap);
  try {
    return popova_hull(sys, opt.cap);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PreconditionViolated) throw;
  }
  return hull_rank_one(sys, opt.cap);
}

int cmd_param(const Output& o) {
  const Problem p = load(o.opt, ProblemKind::Parametric);
  if (o.opt.what == "pd") {
    const ClassReport r = is_pd_parametric(*p.parametric, o.opt.cap);
    o.emit("param", {{"report", to_json(r)}}, render_text(r));
  } else {
    const HullResult r = param_hull(*p.parametric, o.opt);
    o.emit("param", {{"result", to_json(r)}}, render_text(r));
  }
  return 0;
}

// verify

struct Checks {
  Json list = Json::array();
  bool ok = true;

  void add(const std::string& name, bool pass, const std::string& detail) {
    list.push_back({{"check", name}, {"pass", pass}, {"detail", detail}});
    ok = ok && pass;
  }
};

double slack(double tol, double v) { return tol * std::max(1.0, std::abs(v)); }

bool close(double x, double y, double tol) { return std::abs(x - y) <= slack(tol, y); }

std::string pair_text(double x, double y) { return format_interval(Interval(std::min(x, y), std::max(x, y))); }

void verify_det(const Problem& p, const Options& opt, Checks& c) {
  const double tol = opt.tolerance.value_or(1e-8);
  const ScalarRange r = det_range(p.matrix, opt.cap);
  const Interval o = oracle_det_range(p.matrix, oracle_config(opt));
  c.add("det lower", close(*r.lower, o.lo(), tol), "claimed " + std::to_string(*r.lower) + ", oracle " + std::to_string(o.lo()));
  c.add("det upper", close(*r.upper, o.hi(), tol), "claimed " + std::to_string(*r.upper) + ", oracle " + std::to_string(o.hi()));
}

void verify_hull(const Problem& p, const Options& opt, Checks& c) {
  const double tol = opt.tolerance.value_or(1e-7);
  const IntervalLinearSystem sys(p.matrix, p.rhs);
  const HullResult r = solve_with(sys, opt, nullptr);
  const IntervalVector o = oracle_solution_hull(sys, oracle_config(opt));
  const bool exact = r.exactness == Exactness::ExactHull;
  for (std::size_t i = 0; i < o.size(); ++i) {
    const bool pass = exact ? close(r.hull[i].lo(), o[i].lo(), tol) && close(r.hull[i].hi(), o[i].hi(), tol)
                            : r.hull[i].lo() <= o[i].lo() + slack(tol, o[i].lo()) &&
                                  r.hull[i].hi() >= o[i].hi() - slack(tol, o[i].hi());
    c.add(std::string(exact ? "hull equals oracle" : "enclosure contains oracle") + " x" + std::to_string(i + 1), pass,
          r.label + ": " + format_interval(r.hull[i]) + " vs " + format_interval(o[i]));
  }
}

void verify_scalar(const Problem& p, const Options& opt, Checks& c) {
  const double tol = opt.tolerance.value_or(1e-8);
  const OracleConfig cfg = oracle_config(opt);
  for (const NamedRange& r : scalar_ranges(p, opt)) {
    const SampledRange s = oracle_range_sampling(r.f, p.matrix, cfg, r.symmetric);
    bool inside = true;
    if (r.range.lower) inside = inside && *r.range.lower <= s.value.lo() + slack(tol, s.value.lo());
    if (r.range.upper) inside = inside && *r.range.upper >= s.value.hi() - slack(tol, s.value.hi());
    c.add(r.name + " contains samples", inside,
          "claimed [" + (r.range.lower ? std::to_string(*r.range.lower) : "?") + ", " +
              (r.range.upper ? std::to_string(*r.range.upper) : "?") + "], sampled " + format_interval(s.value));
    if (r.range.lower && r.range.lower_attainer) {
      const Matrix& m = *r.range.lower_attainer;
      const double v = r.f(m);
      c.add(r.name + " lower attained", p.matrix.contains(m, tol) && close(v, *r.range.lower, tol),
            "f(attainer) = " + std::to_string(v));
    }
    if (r.range.upper && r.range.upper_attainer) {
      const Matrix& m = *r.range.upper_attainer;
      const double v = r.f(m);
      c.add(r.name + " upper attained", p.matrix.contains(m, tol) && close(v, *r.range.upper, tol),
            "f(attainer) = " + std::to_string(v));
    }
  }
}

Matrix matrix_power(const Matrix& m, unsigned k) {
  Matrix out = m;
  for (unsigned i = 1; i < k; ++i) out = out * m;
  return out;
}

void verify_matrix(const Problem& p, const Options& opt, Checks& c) {
  const IntervalMatrix& a = p.matrix;
  const MatrixRange r = matrix_range(p, opt);
  if (opt.what == "cube") {
    const double tol = opt.tolerance.value_or(1e-4);
    const IntervalMatrix o = oracle_cube_range(a, oracle_config(opt));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        c.add("cube entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
              close(r.value(i, j).lo(), o(i, j).lo(), tol) && close(r.value(i, j).hi(), o(i, j).hi(), tol),
              format_interval(r.value(i, j)) + " vs grid " + format_interval(o(i, j)));
    return;
  }
  const double tol = opt.tolerance.value_or(1e-8);
  std::function<Matrix(const Matrix&)> f;
  if (opt.what == "inverse")
    f = [](const Matrix& m) { return inverse(m); };
  else
    f = [k = opt.power](const Matrix& m) { return matrix_power(m, k); };
  const OracleConfig cfg = oracle_config(opt);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const SampledRange s = oracle_range_sampling([&](const Matrix& m) { return f(m)(i, j); }, a, cfg);
      const Interval& v = r.value(i, j);
      const std::string at = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      c.add("entry " + at + " contains samples",
            v.lo() <= s.value.lo() + slack(tol, s.value.lo()) && v.hi() >= s.value.hi() - slack(tol, s.value.hi()),
            format_interval(v) + " vs sampled " + format_interval(s.value));
      if (r.lower_attainers.empty()) continue;
      const double lo = f(r.lower_attainer(i, j))(i, j);
      const double hi = f(r.upper_attainer(i, j))(i, j);
      c.add("entry " + at + " attained", close(lo, v.lo(), tol) && close(hi, v.hi(), tol),
            "attainers give " + pair_text(lo, hi));
    }
}

double min_sym_eig(const Matrix& m) { return sym_eigenvalues(symmetrize(m)).back(); }

void verify_param(const Problem& p, const Options& opt, Checks& c) {
  const ParametricSystem& sys = *p.parametric;
  if (opt.op == "param-hull") {
    const double tol = opt.tolerance.value_or(1e-6);
    const HullResult r = param_hull(sys, opt);
    const IntervalVector o = oracle_parametric_grid(sys, oracle_config(opt));
    for (std::size_t i = 0; i < o.size(); ++i)
      c.add("hull equals grid x" + std::to_string(i + 1),
            close(r.hull[i].lo(), o[i].lo(), tol) && close(r.hull[i].hi(), o[i].hi(), tol),
            r.label + ": " + format_interval(r.hull[i]) + " vs grid " + format_interval(o[i]));
    return;
  }
  const double tol = opt.tolerance.value_or(1e-8);
  const ClassReport r = is_pd_parametric(sys, opt.cap);
  if (r.yes()) {
    std::mt19937_64 rng(opt.seed);
    double worst = std::numeric_limits<double>::infinity();
    Vector q(sys.parameters());
    for (std::size_t s = 0; s < 500; ++s) {
      for (std::size_t k = 0; k < q.size(); ++k)
        q[k] = std::uniform_real_distribution<double>(sys.p[k].lo(), sys.p[k].hi())(rng);
      worst = std::min(worst, min_sym_eig(eval_parametric(sys, q).first));
    }
    c.add("positive definite on samples", worst > 0, "smallest sampled eigenvalue " + std::to_string(worst));
  } else if (r.no()) {
    const double e = r.certificate.witness ? min_sym_eig(*r.certificate.witness) : 1.0;
    c.add("witness is not positive definite", e <= slack(tol, e), "witness eigenvalue " + std::to_string(e));
  }
}

int cmd_verify(const Output& o) {
  Options opt = o.opt;
  Checks c;
  const std::string& op = opt.op;
  if (op == "param-hull" || op == "param-pd") {
    verify_param(load(opt, ProblemKind::Parametric), opt, c);
  } else if (op == "hull") {
    verify_hull(load(opt, ProblemKind::System), opt, c);
  } else {
    const Problem p = load(opt, ProblemKind::Matrix);
    opt.what = op;
    if (op == "det")
      verify_det(p, opt, c);
    else if (is_matrix_valued(op))
      verify_matrix(p, opt, c);
    else
      verify_scalar(p, opt, c);
  }
  std::string text;
  for (const Json& j : c.list)
    text += std::string(j["pass"].get<bool>() ? "ok   " : "FAIL ") + j["check"].get<std::string>() + "  " +
            j["detail"].get<std::string>() + "\n";
  text += c.ok ? "verified\n" : "verification failed\n";
  o.emit("verify", {{"op", op}, {"pass", c.ok}, {"checks", c.list}}, text);
  return c.ok ? 0 : 3;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Structured interval matrix analysis", "imx"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--tolerance", opt.tolerance, "Comparison tolerance for verify");
  app.add_option("--seed", opt.seed, "Sampling seed");
  app.add_option("--cap", opt.cap, "Enumeration cap as a power of two");

  auto* classify = app.add_subcommand("classify", "Run every class test on an interval matrix");
  classify->add_option("file", opt.file)->required();

  auto* range = app.add_subcommand("range", "Exact range of a matrix characteristic");
  range->add_option("what", opt.what)
      ->required()
      ->check(CLI::IsMember({"det", "eig", "sigma", "rho", "norm", "rr", "inverse", "power", "cube"}));
  range->add_option("file", opt.file)->required();
  range->add_option("--norm", opt.norm)->check(CLI::IsMember({"inf", "one", "frobenius", "chebyshev", "inf1"}));
  range->add_option("--power", opt.power)->check(CLI::PositiveNumber);

  auto* solve = app.add_subcommand("solve", "Hull of an interval linear system");
  solve->add_option("file", opt.file)->required();
  solve->add_option("--method", opt.method)
      ->check(CLI::IsMember({"auto", "invnonneg", "tp", "hbrnk", "ge", "inversem", "oracle"}));

  auto* param = app.add_subcommand("param", "Parametric positive definiteness or hull");
  param->add_option("what", opt.what)->required()->check(CLI::IsMember({"pd", "hull"}));
  param->add_option("file", opt.file)->required();
  param->add_option("--method", opt.method)->check(CLI::IsMember({"auto", "popova", "rank-one"}));

  auto* verify = app.add_subcommand("verify", "Compare a computed result with the brute-force oracle");
  verify->add_option("file", opt.file)->required();
  verify->add_option("--op", opt.op)
      ->required()
      ->check(CLI::IsMember({"det", "hull", "eig", "sigma", "rho", "norm", "rr", "inverse", "power", "cube",
                             "param-hull", "param-pd"}));
  verify->add_option("--method", opt.method)
      ->check(CLI::IsMember({"auto", "invnonneg", "tp", "hbrnk", "ge", "inversem", "oracle", "popova", "rank-one"}));
  verify->add_option("--norm", opt.norm)->check(CLI::IsMember({"inf", "one", "frobenius", "chebyshev", "inf1"}));
  verify->add_option("--power", opt.power)->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const Output o{out, err, opt};
  try {
    if (classify->parsed()) return cmd_classify(o);
    if (range->parsed()) return cmd_range(o);
    if (solve->parsed()) return cmd_solve(o);
    if (param->parsed()) return cmd_param(o);
    return cmd_verify(o);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace imx
