#include "imx/linsolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "imx/classify.hpp"
#include "imx/error.hpp"
#include "imx/linalg.hpp"

namespace imx {

namespace {

[[noreturn]] void precondition(const std::string& what) {
  throw Error(ErrorCode::PreconditionViolated, what);
}

IntervalVector box(std::span<const double> lo, std::span<const double> hi) {
  IntervalVector out;
  out.reserve(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) out.emplace_back(std::min(lo[i], hi[i]), std::max(lo[i], hi[i]));
  return out;
}

bool all_of_b(std::span<const Interval> b, bool (*pred)(const Interval&)) {
  return std::all_of(b.begin(), b.end(), pred);
}

bool b_nonneg(const Interval& x) { return x.lo() >= 0.0; }
bool b_nonpos(const Interval& x) { return x.hi() <= 0.0; }
bool b_straddles(const Interval& x) { return x.contains(0.0); }

HullResult endpoint_result(SolveMethod m, std::string label, const Matrix& a_lo, const Vector& b_lo,
                           const Matrix& a_hi, const Vector& b_hi, IntervalVector hull) {
  HullResult r;
  r.method = m;
  r.label = std::move(label);
  r.exactness = Exactness::ExactHull;
  r.hull = std::move(hull);
  const std::size_t n = r.hull.size();
  r.lower_matrix.assign(n, a_lo);
  r.lower_rhs.assign(n, b_lo);
  r.upper_matrix.assign(n, a_hi);
  r.upper_rhs.assign(n, b_hi);
  return r;
}

bool is_point_system(const IntervalLinearSystem& sys) {
  return sys.a.is_point() && std::all_of(sys.b.begin(), sys.b.end(), [](const Interval& x) { return x.is_degenerate(); });
}

HullResult point_solve(SolveMethod m, const IntervalLinearSystem& sys) {
  const Matrix a = sys.a.mid();
  const Vector b = lower(sys.b);
  const Vector x = solve(a, b);
  return endpoint_result(m, "point system", a, b, a, b, box(x, x));
}

}  // namespace

IntervalLinearSystem::IntervalLinearSystem(IntervalMatrix a_, IntervalVector b_)
    : a(std::move(a_)), b(std::move(b_)) {
  if (!a.is_square()) throw Error(ErrorCode::InvalidArgument, "system matrix is not square");
  if (a.rows() != b.size())
    throw Error(ErrorCode::InvalidArgument, "matrix has " + std::to_string(a.rows()) +
                                                " rows but right-hand side has " + std::to_string(b.size()));
}

std::string_view to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::InverseNonnegative: return "invnonneg";
    case SolveMethod::TotallyPositive: return "tp";
    case SolveMethod::Hbrnk: return "hbrnk";
    case SolveMethod::GaussElimination: return "ge";
    case SolveMethod::InverseM: return "inversem";
    case SolveMethod::Oracle: return "oracle";
    case SolveMethod::RankOneVertices: return "rank-one";
    case SolveMethod::Popova: return "popova";
  }
  return "?";
}

std::string_view to_string(Exactness e) { return e == Exactness::ExactHull ? "exact-hull" : "enclosure"; }

HullResult hull_inverse_nonnegative(const IntervalLinearSystem& sys) {
  if (!is_inverse_nonnegative(sys.a).yes()) precondition("matrix is not inverse nonnegative");
  const Matrix lo = sys.a.lower();
  const Matrix hi = sys.a.upper();
  const Vector bl = lower(sys.b);
  const Vector bu = upper(sys.b);
  if (is_point_system(sys)) return point_solve(SolveMethod::InverseNonnegative, sys);
  if (all_of_b(sys.b, b_nonneg)) {
    return endpoint_result(SolveMethod::InverseNonnegative, "inverse-nonnegative, case b̲ ≥ 0", hi, bl, lo, bu,
                           box(solve(hi, bl), solve(lo, bu)));
  }
  if (all_of_b(sys.b, b_nonpos)) {
    return endpoint_result(SolveMethod::InverseNonnegative, "inverse-nonnegative, case b̄ ≤ 0", lo, bl, hi, bu,
                           box(solve(lo, bl), solve(hi, bu)));
  }
  if (all_of_b(sys.b, b_straddles)) {
    return endpoint_result(SolveMethod::InverseNonnegative, "inverse-nonnegative, case 0 ∈ b", lo, bl, lo, bu,
                           box(solve(lo, bl), solve(lo, bu)));
  }
  throw Error(ErrorCode::NoApplicableCase,
              "right-hand side is neither nonnegative, nonpositive nor zero-containing in every component");
}

HullResult hull_totally_positive(const IntervalLinearSystem& sys) {
  if (!is_totally_positive(sys.a).yes()) precondition("matrix is not totally positive");
  if (is_point_system(sys)) return point_solve(SolveMethod::TotallyPositive, sys);
  const auto [down, up] = checkerboard_vertices(sys.a);
  const Vector bd = checkerboard_down(sys.b);
  const Vector bu = checkerboard_up(sys.b);
  const Vector zero(sys.size(), 0.0);
  const double tol = 0.0;
  auto assemble = [&](std::string label, const Matrix& m1, const Vector& r1, const Matrix& m2, const Vector& r2) {
    const Vector v1 = solve(m1, r1);
    const Vector v2 = solve(m2, r2);
    const double slack = 1e-12 * std::max({1.0, max_abs(v1), max_abs(v2)});
    HullResult r = endpoint_result(SolveMethod::TotallyPositive, std::move(label), m1, r1, m2, r2,
                                   checkerboard_box(v1, v2, slack));
    // endpoint i of the box [v1, v2]* comes from v1 where s_i = +1
    for (std::size_t i = 0; i < sys.size(); ++i)
      if (i % 2 == 1) {
        std::swap(r.lower_matrix[i], r.upper_matrix[i]);
        std::swap(r.lower_rhs[i], r.upper_rhs[i]);
      }
    return r;
  };
  if (checkerboard_leq(zero, bd, tol)) return assemble("totally positive, case ↓b ≥* 0", up, bd, down, bu);
  if (checkerboard_leq(bu, zero, tol)) return assemble("totally positive, case ↑b ≤* 0", down, bd, up, bu);
  if (all_of_b(sys.b, b_straddles)) return assemble("totally positive, case 0 ∈ b", down, bd, down, bu);
  throw Error(ErrorCode::NoApplicableCase, "right-hand side matches no checkerboard sign case");
}

HullResult hull_hbrnk(const IntervalLinearSystem& sys) {
  if (!is_h_matrix(sys.a).yes()) precondition("matrix is not an H-matrix");
  const std::size_t n = sys.size();
  const Matrix c = comparison_matrix(sys.a);
  const Matrix m = inverse(c);
  const Vector mb = mag(sys.b);
  const Vector u = m * mb;
  HullResult r;
  r.method = SolveMethod::Hbrnk;
  r.label = "Hansen-Bliek-Rohn-Ning-Kearfott";
  r.exactness = is_diagonal(sys.a.mid()) ? Exactness::ExactHull : Exactness::Enclosure;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = m(i, i);
    const double alpha = c(i, i) - 1.0 / d;
    const double beta = u[i] / d - mb[i];
    const Interval num = sys.b[i] + Interval(-beta, beta);
    const Interval den = sys.a(i, i) + Interval(-alpha, alpha);
    if (den.contains(0.0))
      throw Error(ErrorCode::PivotContainsZero, "denominator of component " + std::to_string(i + 1) + " contains 0");
    r.hull.push_back(num / den);
  }
  return r;
}

namespace {

struct Elimination {
  std::vector<Interval> a;  // row-major, upper part holds U, strict lower holds L
  std::size_t n;
  Interval& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
};

Elimination eliminate(const IntervalMatrix& m, IntervalVector* rhs) {
  const std::size_t n = m.rows();
  Elimination e{std::vector<Interval>(m.entries().begin(), m.entries().end()), n};
  for (std::size_t k = 0; k < n; ++k) {
    const Interval piv = e.at(k, k);
    if (piv.contains(0.0))
      throw Error(ErrorCode::PivotContainsZero, "pivot " + std::to_string(k + 1) + " contains 0");
    for (std::size_t i = k + 1; i < n; ++i) {
      const Interval f = e.at(i, k) / piv;
      for (std::size_t j = k + 1; j < n; ++j) e.at(i, j) -= f * e.at(k, j);
      if (rhs) (*rhs)[i] -= f * (*rhs)[k];
      e.at(i, k) = f;
    }
  }
  return e;
}

}  // namespace

HullResult interval_gauss_elim(const IntervalLinearSystem& sys) {
  if (!is_h_matrix(sys.a).yes()) precondition("matrix is not an H-matrix");
  const std::size_t n = sys.size();
  IntervalVector y = sys.b;
  Elimination e = eliminate(sys.a, &y);
  IntervalVector x(n, Interval(0.0));
  for (std::size_t ii = n; ii-- > 0;) {
    Interval s = y[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= e.at(ii, j) * x[j];
    x[ii] = s / e.at(ii, ii);
  }
  HullResult r;
  r.method = SolveMethod::GaussElimination;
  r.hull = std::move(x);
  const bool sign_case = all_of_b(sys.b, b_nonneg) || all_of_b(sys.b, b_nonpos) || all_of_b(sys.b, b_straddles);
  r.exactness = (sign_case && is_m_matrix(sys.a).yes()) ? Exactness::ExactHull : Exactness::Enclosure;
  r.label = "interval Gaussian elimination";
  return r;
}

IntervalLu interval_lu(const IntervalMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::InvalidArgument, "interval matrix is not square");
  if (!is_h_matrix(a).yes()) precondition("matrix is not an H-matrix");
  const std::size_t n = a.rows();
  Elimination e = eliminate(a, nullptr);
  IntervalLu out{IntervalMatrix(Matrix::identity(n)), IntervalMatrix(n, n), 0.0};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j < i)
        out.l.set(i, j, e.at(i, j));
      else
        out.u.set(i, j, e.at(i, j));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Interval s(0.0);
      for (std::size_t k = 0; k <= std::min(i, j); ++k) s += out.l(i, k) * out.u(k, j);
      out.slack = std::max({out.slack, s.lo() - a(i, j).lo(), a(i, j).hi() - s.hi()});
    }
  return out;
}

HullResult hull_bounds_inverse_m(const IntervalLinearSystem& sys, unsigned cap_bits) {
  if (!is_inverse_m(sys.a, cap_bits).yes()) precondition("matrix is not an inverse M-matrix");
  const std::size_t n = sys.size();
  const VertexEnumerator en(sys.a, cap_bits);
  std::vector<Vector> b_lo(n), b_hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    b_lo[i] = upper(sys.b);
    b_lo[i][i] = sys.b[i].lo();
    b_hi[i] = lower(sys.b);
    b_hi[i][i] = sys.b[i].hi();
  }
  Vector lo(n, std::numeric_limits<double>::infinity()), hi(n, -std::numeric_limits<double>::infinity());
  HullResult r;
  r.lower_matrix.assign(n, Matrix());
  r.upper_matrix.assign(n, Matrix());
  en.for_each([&](const Matrix& v, std::uint64_t) {
    const LuFactorization f = lu_factor(v);
    if (f.singular) throw Error(ErrorCode::SingularVertex, "singular vertex matrix");
    const Matrix inv = inverse(v);
    for (std::size_t i = 0; i < n; ++i) {
      double xl = 0, xh = 0;
      for (std::size_t j = 0; j < n; ++j) {
        xl += inv(i, j) * b_lo[i][j];
        xh += inv(i, j) * b_hi[i][j];
      }
      if (xl < lo[i]) {
        lo[i] = xl;
        r.lower_matrix[i] = v;
      }
      if (xh > hi[i]) {
        hi[i] = xh;
        r.upper_matrix[i] = v;
      }
    }
  });
  r.method = SolveMethod::InverseM;
  r.label = "inverse M-matrix, vertex enumeration";
  r.exactness = Exactness::ExactHull;
  r.hull = box(lo, hi);
  r.lower_rhs = std::move(b_lo);
  r.upper_rhs = std::move(b_hi);
  return r;
}

}  // namespace imx
