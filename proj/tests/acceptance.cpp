// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failing criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "imx/classify.hpp"
#include "imx/error.hpp"
#include "imx/linalg.hpp"
#include "imx/linsolve.hpp"
#include "imx/oracle.hpp"
#include "imx/parametric.hpp"
#include "imx/problem_io.hpp"
#include "imx/ranges.hpp"
#include "support/brute.hpp"
#include "support/derivatives.hpp"
#include "support/generators.hpp"
#include "support/parametric.hpp"
#include "support/random.hpp"

using namespace imx;
using testing::Rng;

namespace {

struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  bool pass() const { return failures == 0; }
};

bool close(double x, double y, double tol) { return std::abs(x - y) <= tol * std::max(1.0, std::abs(y)); }

bool close_rel(double x, double y, double tol) { return std::abs(x - y) <= tol * std::abs(y) + 1e-300; }

std::string show(const Interval& x) {
  std::ostringstream os;
  os.precision(17);
  os << "[" << x.lo() << ", " << x.hi() << "]";
  return os.str();
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::size_t dim(Rng& rng) { return static_cast<std::size_t>(rng.integer(2, 3)); }

struct Instance {
  std::string family;
  IntervalMatrix a;
  bool symmetric = false;
};

/// 100 seeded instances per class: M, TP, inverse nonnegative, inverse M,
/// diagonally interval with positive semidefinite lower endpoint.
std::vector<Instance> class_pool() {
  Rng rng(1001);
  std::vector<Instance> pool;
  for (int t = 0; t < 100; ++t) pool.push_back({"M", testing::random_m_interval(rng, dim(rng))});
  for (int t = 0; t < 100; ++t) pool.push_back({"TP", testing::random_tp_interval(rng, dim(rng))});
  for (int t = 0; t < 100; ++t) pool.push_back({"inverse-nonnegative", testing::random_inverse_nonneg_interval(rng, dim(rng))});
  for (int t = 0; t < 100; ++t) pool.push_back({"inverse-M", testing::random_inverse_m_interval(rng, dim(rng))});
  for (int t = 0; t < 100; ++t) pool.push_back({"diagonal-PSD", testing::random_diag_psd_interval(rng, dim(rng)), true});
  return pool;
}

Tally criterion_det() {
  Tally t;
  const auto pool = class_pool();
  const auto start = std::chrono::steady_clock::now();
  for (const Instance& in : pool) {
    const ScalarRange r = det_range(in.a);
    const Interval o = oracle_det_range(in.a);
    t.expect(r.lower && r.upper && close_rel(*r.lower, o.lo(), 1e-8) && close_rel(*r.upper, o.hi(), 1e-8),
             in.family + ": det_range [" + std::to_string(r.lower.value_or(NAN)) + ", " +
                 std::to_string(r.upper.value_or(NAN)) + "] vs oracle " + show(o));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.expect(secs < 10.0, "runtime " + std::to_string(secs) + " s");
  t.summary = std::to_string(pool.size()) + " instances in " + std::to_string(secs) + " s";
  return t;
}

void compare_hull(Tally& t, const std::string& path, const IntervalLinearSystem& sys, const HullResult& r) {
  const IntervalVector o = oracle_solution_hull(sys);
  for (std::size_t i = 0; i < o.size(); ++i) {
    const bool ok = r.exactness == Exactness::ExactHull
                        ? close(r.hull[i].lo(), o[i].lo(), 1e-7) && close(r.hull[i].hi(), o[i].hi(), 1e-7)
                        : r.hull[i].lo() <= o[i].lo() + 1e-9 * std::max(1.0, std::abs(o[i].lo())) &&
                              r.hull[i].hi() >= o[i].hi() - 1e-9 * std::max(1.0, std::abs(o[i].hi()));
    t.expect(ok, path + " x" + std::to_string(i + 1) + ": " + show(r.hull[i]) + " vs oracle " + show(o[i]));
  }
}

Tally criterion_hulls() {
  Tally t;
  Rng rng(2002);
  int exact = 0, enclosures = 0;
  auto run = [&](const std::string& path, const IntervalLinearSystem& sys, auto&& method) {
    const HullResult r = method(sys);
    (r.exactness == Exactness::ExactHull ? exact : enclosures)++;
    compare_hull(t, path, sys, r);
  };
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = dim(rng);
    run("inverse-nonnegative", IntervalLinearSystem(testing::random_inverse_nonneg_interval(rng, n), testing::random_rhs(rng, n, k % 3)),
        hull_inverse_nonnegative);
  }
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = dim(rng);
    run("totally positive", IntervalLinearSystem(testing::random_tp_interval(rng, n), testing::checkerboard_rhs(rng, n, k % 3)),
        hull_totally_positive);
  }
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = dim(rng);
    run("hbrnk", IntervalLinearSystem(testing::random_h_interval(rng, n), testing::random_rhs(rng, n, 3)), hull_hbrnk);
  }
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = dim(rng);
    const IntervalLinearSystem sys(testing::random_m_interval(rng, n), testing::random_rhs(rng, n, k % 3));
    const HullResult r = interval_gauss_elim(sys);
    t.expect(r.exactness == Exactness::ExactHull, "gauss elimination on an M system reported an enclosure");
    run("gauss elimination", sys, interval_gauss_elim);
  }
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = dim(rng);
    run("inverse M", IntervalLinearSystem(testing::random_inverse_m_interval(rng, n), testing::random_rhs(rng, n, 3)),
        [](const IntervalLinearSystem& s) { return hull_bounds_inverse_m(s); });
  }
  t.summary = "500 systems, " + std::to_string(exact) + " exact hulls, " + std::to_string(enclosures) + " enclosures";
  return t;
}

using RealFn = std::function<double(const Matrix&)>;

void check_range(Tally& t, const std::string& what, const IntervalMatrix& a, const ScalarRange& r, const RealFn& f,
                 bool symmetric, std::uint64_t seed) {
  OracleConfig cfg;
  cfg.samples = 500;
  cfg.seed = seed;
  const SampledRange s = oracle_range_sampling(f, a, cfg, symmetric);
  const double tol = 1e-8;
  if (r.lower) t.expect(*r.lower <= s.value.lo() + tol * std::max(1.0, std::abs(s.value.lo())),
                        what + ": sample " + std::to_string(s.value.lo()) + " below " + std::to_string(*r.lower));
  if (r.upper) t.expect(*r.upper >= s.value.hi() - tol * std::max(1.0, std::abs(s.value.hi())),
                        what + ": sample " + std::to_string(s.value.hi()) + " above " + std::to_string(*r.upper));
  if (r.lower) {
    t.expect(r.lower_attainer && a.contains(*r.lower_attainer, 1e-12) && close(f(*r.lower_attainer), *r.lower, tol),
             what + ": lower endpoint not attained");
  }
  if (r.upper) {
    t.expect(r.upper_attainer && a.contains(*r.upper_attainer, 1e-12) && close(f(*r.upper_attainer), *r.upper, tol),
             what + ": upper endpoint not attained");
  }
}

/// Symmetric interval M-matrix: sI - B with B symmetric nonnegative.
IntervalMatrix random_symmetric_m(Rng& rng, std::size_t n) {
  Matrix lo_b(n, n), hi_b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double x = rng.uniform(0, 1), w = rng.uniform(0, 0.3);
      lo_b(i, j) = lo_b(j, i) = x;
      hi_b(i, j) = hi_b(j, i) = x + w;
    }
  const double s = spectral_radius(hi_b) + rng.uniform(0.2, 1.0);
  Matrix lower = s * Matrix::identity(n) - hi_b;
  Matrix upper = (s + rng.uniform(0, 0.5)) * Matrix::identity(n) - lo_b;
  return IntervalMatrix(lower, upper);
}

IntervalMatrix random_nonneg(Rng& rng, std::size_t n, bool symmetric) {
  const Matrix lo = symmetric ? rng.symmetric(n, 0, 1) : rng.matrix(n, n, 0, 1);
  const Matrix w = symmetric ? rng.symmetric(n, 0, 0.5) : rng.matrix(n, n, 0, 0.5);
  return IntervalMatrix(lo, lo + w);
}

double lam(const Matrix& m, std::size_t i) { return sym_eigenvalues(symmetrize(m))[i]; }

Tally criterion_spectral() {
  Tally t;
  Rng rng(3003);
  std::uint64_t seed = 0;
  long exact_checks = 0;
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = dim(rng);
    const IntervalMatrix a = testing::random_diag_interval_symmetric(rng, n);
    const SymmetricIntervalMatrix s(a);
    const auto r = eig_ranges_diag_interval(s);
    const Vector lo = sym_eigenvalues(symmetrize(a.lower())), hi = sym_eigenvalues(symmetrize(a.upper()));
    for (std::size_t i = 0; i < n; ++i) {
      ++exact_checks;
      t.expect(*r[i].lower == lo[i] && *r[i].upper == hi[i], "diagonal interval lambda_" + std::to_string(i + 1) +
                                                                 " differs from the vertex values");
      check_range(t, "diagonal interval lambda_" + std::to_string(i + 1), a, r[i],
                  [i](const Matrix& m) { return lam(m, i); }, true, ++seed);
    }
    check_range(t, "diagonal interval rho", a, spectral_radius_range_diag_interval(s),
                [](const Matrix& m) { return spectral_radius(symmetrize(m)); }, true, ++seed);
  }
  for (int k = 0; k < 20; ++k) {
    const IntervalMatrix a = testing::random_tp_interval(rng, dim(rng));
    const auto r = eig_ranges_tp(a);
    for (std::size_t i = 0; i < r.size(); ++i)
      check_range(t, "TP lambda_" + std::to_string(i + 1), a, r[i],
                  [i](const Matrix& m) { return real_eigenvalues(m)[i]; }, false, ++seed);
    check_range(t, "TP sigma_min", a, sigma_min_range(a), [](const Matrix& m) { return singular_values(m).back(); },
                false, ++seed);
    check_range(t, "TP rr", a, rr_range(a), [](const Matrix& m) { return regularity_radius(m); }, false, ++seed);
  }
  for (int k = 0; k < 20; ++k) {
    const IntervalMatrix a = testing::random_inverse_nonneg_interval(rng, dim(rng));
    check_range(t, "inverse nonnegative sigma_min", a, sigma_min_range(a),
                [](const Matrix& m) { return singular_values(m).back(); }, false, ++seed);
    check_range(t, "inverse nonnegative rr", a, rr_range(a), [](const Matrix& m) { return regularity_radius(m); }, false,
                ++seed);
    const IntervalMatrix sm = random_symmetric_m(rng, dim(rng));
    check_range(t, "inverse nonnegative lambda_min", sm, lambda_min_inverse_nonneg(SymmetricIntervalMatrix(sm)),
                [](const Matrix& m) { return sym_eigenvalues(symmetrize(m)).back(); }, true, ++seed);
  }
  for (int k = 0; k < 20; ++k) {
    const bool symmetric = k % 2 == 0;
    const IntervalMatrix a = random_nonneg(rng, dim(rng), symmetric);
    const NonnegativeRanges r = nonneg_ranges(a);
    check_range(t, "nonnegative rho", a, r.rho, [](const Matrix& m) { return spectral_radius(m); }, false, ++seed);
    check_range(t, "nonnegative sigma_max", a, r.sigma_max, [](const Matrix& m) { return singular_values(m).front(); },
                false, ++seed);
    if (symmetric) {
      t.expect(r.lambda_max.has_value(), "symmetric nonnegative instance lacks lambda_max");
      if (r.lambda_max)
        check_range(t, "nonnegative lambda_max", a, *r.lambda_max, [](const Matrix& m) { return lam(m, 0); }, true,
                    ++seed);
    }
    for (const Norm w : {Norm::Inf, Norm::One, Norm::Frobenius, Norm::Chebyshev, Norm::Inf1})
      check_range(t, "nonnegative norm", a, norm_range(a, w), [w](const Matrix& m) { return norm(m, w); }, false,
                  ++seed);
  }
  t.summary = std::to_string(t.checks) + " checks, " + std::to_string(exact_checks) + " exact vertex eigenvalue ranges";
  return t;
}

Tally criterion_counterexample() {
  Tally t;
  const IntervalMatrix a{{Interval(0, 10), 1}, {-1, 10}};
  t.expect(is_m_matrix(a).no(), "classified as M");
  t.expect(is_h_matrix(a).no(), "classified as H");
  t.expect(is_h_matrix(a.mid()).yes(), "midpoint not classified as H");
  t.expect(!regularity_via_h(a).no(), "regularity test claims singular");
  const Interval d = oracle_det_range(a);
  t.expect(!d.contains(0.0), "oracle determinant range " + show(d) + " contains 0");
  t.summary = "not M, not H, midpoint H, det range " + show(d);
  return t;
}

Tally criterion_cube() {
  Tally t;
  Rng rng(5005);
  int interior = 0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = k < 60 ? 2 : 3;
    Matrix mid = rng.matrix(n, n, -2, 2);
    Matrix rad(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (k % 3 == 0) mid(i, i) = rng.uniform(-0.2, 0.2);
      rad(i, i) = n == 2 ? rng.uniform(0.1, 1.0) : rng.uniform(0.05, 0.25);
    }
    const IntervalMatrix a = IntervalMatrix::from_mid_rad(mid, rad);
    for (std::size_t i = 0; i < n; ++i) interior += a(i, i).contains(0.0) && !a(i, i).is_degenerate();
    OracleConfig cfg;
    cfg.grid_step = n == 2 ? 2e-3 : 5e-3;
    const MatrixRange r = cube_hull_diag_interval(a);
    const IntervalMatrix o = oracle_cube_range(a, cfg);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        t.expect(close(r.value(i, j).lo(), o(i, j).lo(), 1e-4) && close(r.value(i, j).hi(), o(i, j).hi(), 1e-4),
                 "instance " + std::to_string(k) + " entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                     "): " + show(r.value(i, j)) + " vs grid " + show(o(i, j)));
  }
  const IntervalMatrix pattern{{Interval(-1, 1), 1}, {1, 0}};
  const MatrixRange r = cube_hull_diag_interval(pattern);
  t.expect(r.value(0, 1) == Interval(1, 2), "t^2 + 1 entry " + show(r.value(0, 1)));
  t.summary = "100 instances, " + std::to_string(interior) + " diagonal intervals containing 0";
  return t;
}

Matrix multiply_out(const Matrix& a, unsigned k) {
  const std::size_t n = a.rows();
  Matrix out = Matrix::identity(n);
  for (unsigned s = 0; s < k; ++s) {
    Matrix next(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) next(i, j) += out(i, l) * a(l, j);
    out = next;
  }
  return out;
}

Tally criterion_powers() {
  Tally t;
  Rng rng(6006);
  for (int k = 0; k < 30; ++k) {
    const IntervalMatrix a = random_nonneg(rng, dim(rng), k % 2 == 0);
    for (const unsigned p : {2u, 3u, 5u}) {
      const MatrixRange r = power_hull(a, p);
      const Matrix lo = multiply_out(a.lower(), p), hi = multiply_out(a.upper(), p);
      const double scale = std::max(1.0, max_abs(hi));
      t.expect(max_abs(r.value.lower() - lo) <= 1e-12 * scale && max_abs(r.value.upper() - hi) <= 1e-12 * scale,
               "A^" + std::to_string(p) + " differs from the endpoint powers");
      for (int s = 0; s < 500; ++s)
        t.expect(r.value.contains(multiply_out(rng.member(a), p), 1e-12 * scale),
                 "sampled A^" + std::to_string(p) + " escapes the hull");
    }
  }
  t.summary = "30 instances x k in {2,3,5}, 500 samples each";
  return t;
}

void compare_grid(Tally& t, const std::string& what, const ParametricSystem& sys, const HullResult& r) {
  const IntervalVector o = oracle_parametric_grid(sys);
  for (std::size_t i = 0; i < o.size(); ++i)
    t.expect(close(r.hull[i].lo(), o[i].lo(), 1e-6) && close(r.hull[i].hi(), o[i].hi(), 1e-6),
             what + " x" + std::to_string(i + 1) + ": " + show(r.hull[i]) + " vs grid " + show(o[i]));
}

Tally criterion_parametric() {
  Tally t;
  Rng rng(7007);
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = 2 + k % 2, params = 1 + k % 3;
    const ParametricSystem r1 = testing::random_rank_one(rng, n, params);
    compare_grid(t, "rank one", r1, hull_rank_one(r1));
    const ParametricSystem sr = testing::random_single_row(rng, n, params);
    compare_grid(t, "popova", sr, popova_hull(sr));
  }
  int yes = 0, no = 0;
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 2 + k % 2, params = 1 + k % 3;
    const Matrix g = rng.matrix(n, n);
    Matrix a0 = g.transpose() * g;
    for (std::size_t i = 0; i < n; ++i) a0(i, i) += rng.uniform(0.0, 1.0);
    std::vector<Matrix> a;
    IntervalVector p;
    for (std::size_t j = 0; j < params; ++j) {
      a.push_back(rng.symmetric(n));
      p.emplace_back(rng.uniform(-0.5, 0), rng.uniform(0, 0.5));
    }
    const ParametricSystem sys(a0, Vector(n, 0.0), a, std::vector<Vector>(params, Vector(n, 0.0)), p);
    const ClassReport r = is_pd_parametric(sys);
    t.expect(r.verdict != Verdict::Unknown, "parametric PD test returned unknown");
    if (r.yes()) {
      ++yes;
      for (int s = 0; s < 500; ++s)
        t.expect(lam(eval_parametric(sys, rng.member(sys.p)).first, n - 1) > 0, "interior sample is not PD");
    } else {
      ++no;
      t.expect(r.certificate.vector && lam(eval_parametric(sys, *r.certificate.vector).first, n - 1) <= 1e-9,
               "no verdict without an indefinite vertex");
      // an interior point close to the witness vertex is not PD either
      if (r.certificate.vector) {
        Vector q = *r.certificate.vector;
        const Vector c = sys.midpoint();
        for (std::size_t j = 0; j < q.size(); ++j) q[j] = c[j] + (1 - 1e-9) * (q[j] - c[j]);
        t.expect(lam(eval_parametric(sys, q).first, n - 1) <= 1e-6, "interior point near the witness is PD");
      }
    }
  }
  t.summary = "60 hulls vs step-0.01 grids, PD verdicts " + std::to_string(yes) + " yes / " + std::to_string(no) + " no";
  return t;
}

Tally criterion_derivatives() {
  Tally t;
  Rng rng(8008);
  double worst = 0;
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 4));
    Matrix a = rng.matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) += 2.0;
    const Matrix pos = rng.matrix(n, n, 0.1, 1.0);
    const double e = std::max({testing::det_gradient_error(a), testing::inverse_gradient_error(a),
                               testing::eigenvalue_gradient_error(pos)});
    worst = std::max(worst, e);
    t.expect(e <= 1e-5, "matrix " + std::to_string(k) + ": mismatch " + sci(e));
  }
  t.summary = "50 matrices, worst relative mismatch " + sci(worst);
  return t;
}

Tally criterion_conjecture() {
  Tally t;
  Rng rng(9009);
  const std::string path = "conjecture_counterexamples.json";
  int inconsistent = 0, total = 0;
  std::ofstream file;
  for (const auto& [n, count] : {std::pair<std::size_t, int>{2, 200}, {3, 50}}) {
    for (int k = 0; k < count; ++k) {
      ++total;
      const Matrix c = brute::gj_inverse(testing::random_m_interval(rng, n).lower());
      Matrix rad(n, n);
      const double r = rng.uniform(0.0, 0.2) * max_abs(c);
      for (double& x : rad.data()) x = rng.uniform(0.0, r);
      const IntervalMatrix family = IntervalMatrix::from_mid_rad(c, rad);
      const ConjectureResult res = conjecture_check_inverse_m(family);
      if (res.consistent) continue;
      ++inconsistent;
      t.expect(res.counterexample.has_value(), "inconsistent result without a counterexample");
      if (!res.counterexample) continue;
      if (!file.is_open()) file.open(path);
      file << dump_problem(matrix_problem(*res.counterexample));
      // the saved family reproduces the disagreement
      const Problem back = parse_problem(dump_problem(matrix_problem(*res.counterexample)));
      t.expect(!conjecture_check_inverse_m(back.matrix).consistent, "saved counterexample does not reproduce");
    }
  }
  t.summary = std::to_string(total) + " families, " +
              (inconsistent ? std::to_string(inconsistent) + " counterexamples written to " + path
                            : std::string("all consistent"));
  return t;
}

struct Property {
  MatrixClass cls;
  std::function<ClassReport(const IntervalMatrix&)> test;
  std::function<bool(const Matrix&)> holds;
};

bool regular_like(const Matrix& m, double sign) { return det(m) * sign > 0; }

Tally criterion_soundness() {
  Tally t;
  Rng rng(10010);
  long yes = 0, no = 0, unknown = 0;
  for (const Instance& in : class_pool()) {
    const IntervalMatrix& a = in.a;
    const double sign = det(a.mid()) >= 0 ? 1.0 : -1.0;
    std::vector<Property> props = {
        {MatrixClass::M, [](const IntervalMatrix& x) { return is_m_matrix(x); },
         [](const Matrix& m) { return brute::m_matrix(m); }},
        {MatrixClass::H, [](const IntervalMatrix& x) { return is_h_matrix(x); },
         [](const Matrix& m) { return brute::h_matrix(m); }},
        {MatrixClass::InverseNonnegative, [](const IntervalMatrix& x) { return is_inverse_nonnegative(x); },
         [](const Matrix& m) { return std::abs(det(m)) > 1e-12 && brute::inverse_nonnegative(m); }},
        {MatrixClass::TotallyPositive, [](const IntervalMatrix& x) { return is_totally_positive(x); },
         [](const Matrix& m) { return brute::all_minors_positive(m); }},
        {MatrixClass::BMatrix, [](const IntervalMatrix& x) { return is_b_matrix(x); },
         [](const Matrix& m) { return brute::b_matrix(m); }},
        {MatrixClass::InverseM, [](const IntervalMatrix& x) { return is_inverse_m(x); },
         [](const Matrix& m) { return std::abs(det(m)) > 1e-12 && brute::inverse_m(m); }},
        {MatrixClass::PMatrixSpecialCase, [](const IntervalMatrix& x) { return p_matrix_special(x); },
         [](const Matrix& m) { return brute::principal_minors_positive(m); }},
        {MatrixClass::Regular, [](const IntervalMatrix& x) { return regularity_via_h(x); },
         [sign](const Matrix& m) { return regular_like(m, sign); }},
    };
    for (const Property& p : props) {
      ClassReport r;
      try {
        r = p.test(a);
      } catch (const Error&) {
        ++unknown;
        continue;
      }
      const std::string tag = in.family + " instance, " + std::string(to_string(p.cls));
      if (r.yes()) {
        ++yes;
        for (int s = 0; s < 200; ++s) t.expect(p.holds(rng.member(a)), tag + ": yes verdict fails on a member");
      } else if (r.no()) {
        ++no;
        const bool witnessed = r.certificate.witness && a.contains(*r.certificate.witness, 1e-12) &&
                               !p.holds(*r.certificate.witness);
        t.expect(witnessed, tag + ": no verdict without a violating member");
      } else {
        ++unknown;
        t.expect(!r.certificate.witness, tag + ": unknown verdict carries a witness");
      }
    }
    if (in.symmetric) {
      const ClassReport r = positive_definite_sufficient(SymmetricIntervalMatrix(a));
      if (r.yes()) {
        ++yes;
        for (int s = 0; s < 200; ++s)
          t.expect(lam(rng.symmetric_member(a), a.rows() - 1) > 0, "positive definite verdict fails on a member");
      } else {
        ++unknown;
      }
    }
  }
  t.summary = std::to_string(yes) + " yes, " + std::to_string(no) + " no, " + std::to_string(unknown) + " unknown";
  return t;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Tally()>>> criteria = {
      {"determinant ranges equal the vertex oracle", criterion_det},
      {"system hulls equal or enclose the vertex oracle", criterion_hulls},
      {"eigenvalue, singular value, rho, norm and rr ranges", criterion_spectral},
      {"regular non-H matrix with H midpoint", criterion_counterexample},
      {"cube hull equals the dense grid", criterion_cube},
      {"power hulls", criterion_powers},
      {"parametric hulls and positive definiteness", criterion_parametric},
      {"derivative identities", criterion_derivatives},
      {"inverse M conjecture probe", criterion_conjecture},
      {"classification soundness", criterion_soundness},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    try {
      t = criteria[i].second();
    } catch (const std::exception& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    std::printf("%s %zu %s: %s", t.pass() ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), t.summary.c_str());
    if (!t.pass()) std::printf(" (%ld of %ld checks failed; first: %s)", t.failures, t.checks, t.first.c_str());
    std::printf("\n");
    std::fflush(stdout);
    failed += !t.pass();
  }
  return failed;
}
