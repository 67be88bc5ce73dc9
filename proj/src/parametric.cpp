#include "imx/parametric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "imx/error.hpp"
#include "imx/linalg.hpp"
#include "imx/lp.hpp"

namespace imx {

namespace {

void check_caps(std::size_t k, std::size_t cap) {
  if (k > cap)
    throw Error(ErrorCode::CapExceeded, std::to_string(k) + " interval parameters exceed the cap of " +
                                            std::to_string(cap));
}

/// Indices of parameters with nonzero width.
std::vector<std::size_t> free_parameters(const ParametricSystem& sys) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < sys.parameters(); ++k)
    if (!sys.p[k].is_degenerate()) out.push_back(k);
  return out;
}

Vector at_mask(const ParametricSystem& sys, const std::vector<std::size_t>& free, std::uint64_t mask) {
  Vector p = sys.midpoint();
  for (std::size_t f = 0; f < free.size(); ++f) p[free[f]] = ((mask >> f) & 1U) ? sys.p[free[f]].hi() : sys.p[free[f]].lo();
  return p;
}

bool is_zero(const Matrix& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](double x) { return x == 0.0; });
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

double symmetry_tol(const Matrix& m) { return 1e-12 * std::max(1.0, max_abs(m)); }

}  // namespace

namespace {

std::size_t order_of(const std::vector<Matrix>& a) { return a.empty() ? 0 : a.front().rows(); }

}  // namespace

ParametricSystem::ParametricSystem(std::vector<Matrix> a_, std::vector<Vector> b_, IntervalVector p_)
    : ParametricSystem(Matrix(order_of(a_), order_of(a_)), Vector(order_of(a_), 0.0), a_, b_, p_) {}

ParametricSystem::ParametricSystem(Matrix a0_, Vector b0_, std::vector<Matrix> a_, std::vector<Vector> b_,
                                   IntervalVector p_)
    : a0(std::move(a0_)), b0(std::move(b0_)), a(std::move(a_)), b(std::move(b_)), p(std::move(p_)) {
  const std::size_t n = a0.rows();
  if (a0.cols() != n) throw Error(ErrorCode::InvalidArgument, "parameter matrices must be square");
  if (b0.size() != n) throw Error(ErrorCode::InvalidArgument, "right-hand side length does not match the matrix");
  if (a.size() != p.size() || b.size() != p.size())
    throw Error(ErrorCode::InvalidArgument, "need one matrix and one vector per parameter");
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].rows() != n || a[k].cols() != n)
      throw Error(ErrorCode::InvalidArgument, "parameter matrix " + std::to_string(k + 1) + " has the wrong shape");
    if (b[k].size() != n)
      throw Error(ErrorCode::InvalidArgument, "parameter vector " + std::to_string(k + 1) + " has the wrong length");
  }
}

Vector ParametricSystem::midpoint() const {
  Vector m(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) m[k] = p[k].mid();
  return m;
}

Vector ParametricSystem::vertex(std::uint64_t mask) const {
  Vector v(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) v[k] = ((mask >> k) & 1U) ? p[k].hi() : p[k].lo();
  return v;
}

std::pair<Matrix, Vector> eval_parametric(const ParametricSystem& sys, std::span<const double> p) {
  if (p.size() != sys.parameters())
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(sys.parameters()) + " parameter values");
  Matrix a = sys.a0;
  Vector b = sys.b0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (!sys.p[k].contains(p[k]))
      throw Error(ErrorCode::OutOfBox, "parameter " + std::to_string(k + 1) + " = " + std::to_string(p[k]) +
                                           " lies outside its interval");
    if (p[k] == 0.0) continue;
    a = a + p[k] * sys.a[k];
    for (std::size_t i = 0; i < b.size(); ++i) b[i] += p[k] * sys.b[k][i];
  }
  return {std::move(a), std::move(b)};
}

ClassReport is_pd_parametric(const ParametricSystem& sys, std::size_t cap) {
  if (!is_symmetric(sys.a0, symmetry_tol(sys.a0)))
    throw Error(ErrorCode::NotSymmetric, "constant matrix is not symmetric");
  for (std::size_t k = 0; k < sys.parameters(); ++k)
    if (!is_symmetric(sys.a[k], symmetry_tol(sys.a[k])))
      throw Error(ErrorCode::NotSymmetric, "parameter matrix " + std::to_string(k + 1) + " is not symmetric");
  const auto free = free_parameters(sys);
  check_caps(free.size(), cap);

  ClassReport r;
  r.cls = MatrixClass::ParametricPositiveDefinite;
  r.verdict = Verdict::Yes;
  r.cost = CostPath::Exponential;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    const Vector p = at_mask(sys, free, mask);
    const Matrix a = symmetrize(eval_parametric(sys, p).first);
    r.certificate.checked.push_back(a);
    const double lmin = sys.size() == 0 ? 1.0 : sym_eigenvalues(a).back();
    if (!(lmin > kStrictRelTol * std::max(max_abs(a), 1e-300))) {
      r.verdict = Verdict::No;
      r.certificate.witness = a;
      r.certificate.vector = p;
      r.certificate.violated = "smallest eigenvalue " + std::to_string(lmin) + " at a parameter vertex";
      return r;
    }
  }
  r.note = "positive definite at all " + std::to_string(std::uint64_t{1} << free.size()) + " parameter vertices";
  return r;
}

HullResult hull_rank_one(const ParametricSystem& sys, std::size_t cap) {
  for (std::size_t k = 0; k < sys.parameters(); ++k) {
    if (is_zero(sys.a[k])) continue;
    const Vector sv = singular_values(sys.a[k]);
    if (sv.size() > 1 && sv[1] > 1e-10 * sv[0])
      throw Error(ErrorCode::RankTooHigh, "parameter matrix " + std::to_string(k + 1) + " has rank above one");
    if (!is_zero(sys.b[k]))
      throw Error(ErrorCode::CrossDependency,
                  "parameter " + std::to_string(k + 1) + " enters both the matrix and the right-hand side");
  }
  const auto free = free_parameters(sys);
  check_caps(free.size(), cap);
  const std::size_t n = sys.size();
  HullResult r;
  r.method = SolveMethod::RankOneVertices;
  r.label = "rank-one parameters, vertex solutions";
  r.exactness = Exactness::ExactHull;
  Vector lo(n, std::numeric_limits<double>::infinity()), hi(n, -std::numeric_limits<double>::infinity());
  r.lower_matrix.assign(n, Matrix());
  r.upper_matrix.assign(n, Matrix());
  r.lower_rhs.assign(n, Vector());
  r.upper_rhs.assign(n, Vector());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    auto [a, b] = eval_parametric(sys, at_mask(sys, free, mask));
    if (lu_factor(a).singular) throw Error(ErrorCode::SingularVertex, "parameter vertex gives a singular matrix");
    const Vector x = solve(a, b);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] < lo[i]) {
        lo[i] = x[i];
        r.lower_matrix[i] = a;
        r.lower_rhs[i] = b;
      }
      if (x[i] > hi[i]) {
        hi[i] = x[i];
        r.upper_matrix[i] = a;
        r.upper_rhs[i] = b;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) r.hull.emplace_back(lo[i], hi[i]);
  return r;
}

HullResult popova_hull(const ParametricSystem& sys, std::size_t cap) {
  const std::size_t n = sys.size();
  const auto free = free_parameters(sys);
  std::vector<std::size_t> row_of(sys.parameters(), n);
  for (std::size_t k : free) {
    for (std::size_t i = 0; i < n; ++i) {
      bool used = sys.b[k][i] != 0.0;
      for (std::size_t j = 0; j < n && !used; ++j) used = sys.a[k](i, j) != 0.0;
      if (!used) continue;
      if (row_of[k] != n)
        throw Error(ErrorCode::PreconditionViolated,
                    "parameter " + std::to_string(k + 1) + " enters more than one equation");
      row_of[k] = i;
    }
  }
  check_caps(free.size(), cap);

  const auto [amid, bmid] = eval_parametric(sys, sys.midpoint());
  HullResult r;
  r.method = SolveMethod::Popova;
  r.label = "parameters in single equations, orthant linear programs";
  r.exactness = Exactness::ExactHull;
  if (free.empty()) {
    const Vector x = solve(amid, bmid);
    for (double v : x) r.hull.emplace_back(v, v);
    return r;
  }

  Vector lo(n, std::numeric_limits<double>::infinity()), hi(n, -std::numeric_limits<double>::infinity());
  bool feasible = false;
  std::vector<VariableBound> bounds(n, VariableBound{-std::numeric_limits<double>::infinity(),
                                                     std::numeric_limits<double>::infinity()});
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    // g_k(x) = (A_k x - b_k)_{row(k)}; orthant fixes the sign of each g_k
    std::vector<Vector> slack_coef(n, Vector(n, 0.0));
    Vector slack_const(n, 0.0);
    LinearProgram lp;
    lp.bounds = bounds;
    for (std::size_t f = 0; f < free.size(); ++f) {
      const std::size_t k = free[f];
      if (row_of[k] == n) continue;
      const std::size_t row = row_of[k];
      const double z = ((mask >> f) & 1U) ? 1.0 : -1.0;
      Vector g(n);
      for (std::size_t j = 0; j < n; ++j) g[j] = z * sys.a[k](row, j);
      lp.constraints.push_back({g, Relation::GreaterEqual, z * sys.b[k][row]});
      const double w = sys.p[k].rad();
      for (std::size_t j = 0; j < n; ++j) slack_coef[row][j] += w * g[j];
      slack_const[row] -= w * z * sys.b[k][row];
    }
    for (std::size_t i = 0; i < n; ++i) {
      // |c_i(x)| <= s_i(x), c_i(x) = (A(pmid) x - b(pmid))_i
      Vector up(n), dn(n);
      for (std::size_t j = 0; j < n; ++j) {
        up[j] = amid(i, j) - slack_coef[i][j];
        dn[j] = -amid(i, j) - slack_coef[i][j];
      }
      lp.constraints.push_back({up, Relation::LessEqual, bmid[i] + slack_const[i]});
      lp.constraints.push_back({dn, Relation::LessEqual, -bmid[i] + slack_const[i]});
    }
    for (std::size_t i = 0; i < n; ++i) {
      lp.objective.assign(n, 0.0);
      lp.objective[i] = 1.0;
      for (Sense sense : {Sense::Minimize, Sense::Maximize}) {
        lp.sense = sense;
        const LpResult res = lp_solve(lp);
        if (res.status == LpStatus::Infeasible) break;
        if (res.status == LpStatus::Unbounded)
          throw Error(ErrorCode::UnboundedSolutionSet, "solution set is unbounded in component " + std::to_string(i + 1));
        feasible = true;
        if (sense == Sense::Minimize)
          lo[i] = std::min(lo[i], res.objective);
        else
          hi[i] = std::max(hi[i], res.objective);
      }
    }
  }
  if (!feasible) throw Error(ErrorCode::EmptySolutionSet, "every orthant is infeasible");
  for (std::size_t i = 0; i < n; ++i) r.hull.emplace_back(lo[i], hi[i]);
  return r;
}

}  // namespace imx
