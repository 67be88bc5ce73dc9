#include "imx/lp.hpp"

#include <algorithm>
#include <cmath>

#include "imx/error.hpp"

namespace imx {

namespace {

// x_j = offset + sum coef * y_k over nonnegative standard-form variables y.
struct VariableMap {
  double offset = 0.0;
  std::vector<std::pair<std::size_t, double>> terms;
};

struct Row {
  Vector coeffs;
  Relation relation;
  double rhs;
};

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), t_(rows, Vector(cols + 1, 0.0)) {}

  double& at(std::size_t i, std::size_t j) { return t_[i][j]; }
  double& rhs(std::size_t i) { return t_[i][cols_]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void pivot(std::size_t r, std::size_t c) {
    const double p = t_[r][c];
    for (double& v : t_[r]) v /= p;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const double f = t_[i][c];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) t_[i][j] -= f * t_[r][j];
      t_[i][c] = 0.0;
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

  // Minimizes cost . y over allowed columns. Returns false when unbounded.
  bool optimize(const Vector& cost, const std::vector<bool>& allowed, double tol, std::size_t budget,
                std::size_t& pivots) {
    while (true) {
      // Bland: lowest-index column with negative reduced cost.
      std::size_t enter = cols_;
      for (std::size_t j = 0; j < cols_ && enter == cols_; ++j) {
        if (!allowed[j]) continue;
        double d = cost[j];
        for (std::size_t i = 0; i < rows_; ++i) d -= cost[basis_[i]] * t_[i][j];
        if (d < -tol) enter = j;
      }
      if (enter == cols_) return true;
      std::size_t leave = rows_;
      double best = 0.0;
      for (std::size_t i = 0; i < rows_; ++i) {
        const double a = t_[i][enter];
        if (a <= tol) continue;
        const double ratio = t_[i][cols_] / a;
        if (leave == rows_ || ratio < best - tol ||
            (std::abs(ratio - best) <= tol && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows_) return false;
      if (++pivots > budget) throw Error(ErrorCode::CycleLimit, "simplex pivot budget exhausted");
      pivot(leave, enter);
    }
  }

  double objective(const Vector& cost) const {
    double v = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) v += cost[basis_[i]] * t_[i][cols_];
    return v;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Vector> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult lp_solve(const LinearProgram& lp, const LpOptions& options) {
  const std::size_t n = lp.objective.size();
  const double tol = options.tolerance;
  std::vector<VariableBound> bounds = lp.bounds;
  if (bounds.empty()) bounds.assign(n, VariableBound{});
  if (bounds.size() != n) throw Error(ErrorCode::InvalidArgument, "bounds size mismatch");
  for (const auto& c : lp.constraints) {
    if (c.coeffs.size() != n) throw Error(ErrorCode::InvalidArgument, "constraint size mismatch");
    if (!std::isfinite(c.rhs)) throw Error(ErrorCode::InvalidArgument, "non-finite right-hand side");
  }

  // Substitute bounded/free variables by nonnegative ones.
  std::vector<VariableMap> maps(n);
  std::size_t ny = 0;
  std::vector<Row> rows;
  for (std::size_t j = 0; j < n; ++j) {
    const auto& b = bounds[j];
    if (b.lower > b.upper) {
      return LpResult{LpStatus::Infeasible, 0.0, {}, 0};
    }
    if (std::isfinite(b.lower)) {
      maps[j].offset = b.lower;
      maps[j].terms.push_back({ny, 1.0});
      if (std::isfinite(b.upper)) {
        Row r{Vector(), Relation::LessEqual, b.upper - b.lower};
        r.coeffs.resize(ny + 1, 0.0);
        r.coeffs[ny] = 1.0;
        rows.push_back(std::move(r));
      }
      ++ny;
    } else if (std::isfinite(b.upper)) {
      maps[j].offset = b.upper;
      maps[j].terms.push_back({ny++, -1.0});
    } else {
      maps[j].terms.push_back({ny++, 1.0});
      maps[j].terms.push_back({ny++, -1.0});
    }
  }
  for (auto& r : rows) r.coeffs.resize(ny, 0.0);
  for (const auto& c : lp.constraints) {
    Row r{Vector(ny, 0.0), c.relation, c.rhs};
    for (std::size_t j = 0; j < n; ++j) {
      r.rhs -= c.coeffs[j] * maps[j].offset;
      for (const auto& [k, coef] : maps[j].terms) r.coeffs[k] += c.coeffs[j] * coef;
    }
    rows.push_back(std::move(r));
  }
  for (auto& r : rows) {
    if (r.rhs < 0.0) {
      for (double& v : r.coeffs) v = -v;
      r.rhs = -r.rhs;
      if (r.relation == Relation::LessEqual) r.relation = Relation::GreaterEqual;
      else if (r.relation == Relation::GreaterEqual) r.relation = Relation::LessEqual;
    }
  }

  const std::size_t m = rows.size();
  std::size_t n_slack = 0, n_art = 0;
  for (const auto& r : rows) {
    if (r.relation != Relation::Equal) ++n_slack;
    if (r.relation != Relation::LessEqual) ++n_art;
  }
  const std::size_t n_cols = ny + n_slack + n_art;
  const std::size_t art_begin = ny + n_slack;
  Tableau tab(m, n_cols);
  tab.basis().assign(m, 0);
  std::size_t slack = ny, art = art_begin;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < ny; ++k) tab.at(i, k) = rows[i].coeffs[k];
    tab.rhs(i) = rows[i].rhs;
    switch (rows[i].relation) {
      case Relation::LessEqual:
        tab.at(i, slack) = 1.0;
        tab.basis()[i] = slack++;
        break;
      case Relation::GreaterEqual:
        tab.at(i, slack++) = -1.0;
        tab.at(i, art) = 1.0;
        tab.basis()[i] = art++;
        break;
      case Relation::Equal:
        tab.at(i, art) = 1.0;
        tab.basis()[i] = art++;
        break;
    }
  }

  const std::size_t budget =
      options.max_pivots ? options.max_pivots : 50 * (m + n_cols) + 1000;
  std::size_t pivots = 0;

  if (n_art > 0) {
    Vector phase1(n_cols, 0.0);
    for (std::size_t k = art_begin; k < n_cols; ++k) phase1[k] = 1.0;
    const std::vector<bool> all(n_cols, true);
    tab.optimize(phase1, all, tol, budget, pivots);
    double scale = 1.0;
    for (const auto& r : rows) scale = std::max(scale, std::abs(r.rhs));
    if (tab.objective(phase1) > tol * scale) return LpResult{LpStatus::Infeasible, 0.0, {}, pivots};
    // Drive remaining artificials out of the basis.
    for (std::size_t i = 0; i < tab.rows();) {
      if (tab.basis()[i] < art_begin) {
        ++i;
        continue;
      }
      std::size_t col = art_begin;
      for (std::size_t k = 0; k < art_begin; ++k)
        if (std::abs(tab.at(i, k)) > tol) {
          col = k;
          break;
        }
      if (col == art_begin) {
        tab.drop_row(i);
      } else {
        tab.pivot(i, col);
        ++i;
      }
    }
  }

  Vector cost(n_cols, 0.0);
  double cost_offset = 0.0;
  const double sgn = lp.sense == Sense::Maximize ? -1.0 : 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    cost_offset += sgn * lp.objective[j] * maps[j].offset;
    for (const auto& [k, coef] : maps[j].terms) cost[k] += sgn * lp.objective[j] * coef;
  }
  std::vector<bool> allowed(n_cols, true);
  for (std::size_t k = art_begin; k < n_cols; ++k) allowed[k] = false;
  if (!tab.optimize(cost, allowed, tol, budget, pivots)) {
    return LpResult{LpStatus::Unbounded, 0.0, {}, pivots};
  }

  Vector y(n_cols, 0.0);
  for (std::size_t i = 0; i < tab.rows(); ++i) y[tab.basis()[i]] = tab.rhs(i);
  LpResult result{LpStatus::Optimal, 0.0, Vector(n, 0.0), pivots};
  for (std::size_t j = 0; j < n; ++j) {
    double v = maps[j].offset;
    for (const auto& [k, coef] : maps[j].terms) v += coef * y[k];
    result.x[j] = v;
  }
  result.objective = sgn * (tab.objective(cost) + cost_offset);
  return result;
}

}  // namespace imx
