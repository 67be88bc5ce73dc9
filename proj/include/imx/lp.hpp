#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "imx/matrix.hpp"

namespace imx {

enum class Sense { Minimize, Maximize };
enum class Relation { LessEqual, GreaterEqual, Equal };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LinearConstraint {
  Vector coeffs;
  Relation relation = Relation::LessEqual;
  double rhs = 0.0;
};

/// lower may be -inf and upper +inf (free variable).
struct VariableBound {
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
};

struct LinearProgram {
  Sense sense = Sense::Maximize;
  Vector objective;
  std::vector<LinearConstraint> constraints;
  /// Empty means every variable is >= 0.
  std::vector<VariableBound> bounds;
};

struct LpOptions {
  double tolerance = 1e-9;
  /// 0 selects 50 * (rows + columns) + 1000 pivots.
  std::size_t max_pivots = 0;
};

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  double objective = 0.0;
  Vector x;
  std::size_t pivots = 0;
};

/// Two-phase dense tableau simplex with Bland's anti-cycling rule.
/// Throws CycleLimit when the pivot budget is exhausted.
LpResult lp_solve(const LinearProgram& lp, const LpOptions& options = {});

}  // namespace imx
