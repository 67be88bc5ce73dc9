#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "imx/interval_matrix.hpp"

namespace imx {

/// Ax = b with A square and b of matching length.
struct IntervalLinearSystem {
  IntervalMatrix a;
  IntervalVector b;

  IntervalLinearSystem(IntervalMatrix a, IntervalVector b);
  std::size_t size() const { return b.size(); }
};

enum class SolveMethod {
  InverseNonnegative,
  TotallyPositive,
  Hbrnk,
  GaussElimination,
  InverseM,
  Oracle,
  RankOneVertices,
  Popova,
};
enum class Exactness { ExactHull, Enclosure };

std::string_view to_string(SolveMethod m);
std::string_view to_string(Exactness e);

struct HullResult {
  IntervalVector hull;
  SolveMethod method{};
  /// Method plus the case that applied, e.g. "inverse-nonnegative, case b̲ ≥ 0".
  std::string label;
  Exactness exactness = Exactness::Enclosure;
  /// Per coordinate, the member (A, b) attaining each hull endpoint, when known.
  std::vector<Matrix> lower_matrix;
  std::vector<Vector> lower_rhs;
  std::vector<Matrix> upper_matrix;
  std::vector<Vector> upper_rhs;
};

/// Three sign cases of b; throws NoApplicableCase otherwise and
/// PreconditionViolated when A is not inverse nonnegative.
HullResult hull_inverse_nonnegative(const IntervalLinearSystem& sys);
/// Three checkerboard cases of b for totally positive A.
HullResult hull_totally_positive(const IntervalLinearSystem& sys);
/// Comparison-matrix bound for H-matrices. Exact hull when the midpoint of A
/// is diagonal, an enclosure otherwise.
HullResult hull_hbrnk(const IntervalLinearSystem& sys);
/// Interval Gaussian elimination without pivoting (A must be an H-matrix).
/// Exact hull for M-matrices with 0 in b, b >= 0 or b <= 0.
HullResult interval_gauss_elim(const IntervalLinearSystem& sys);

struct IntervalLu {
  IntervalMatrix l;
  IntervalMatrix u;
  /// Largest amount by which an entry of A sticks out of the interval
  /// product L U (0 when A is contained).
  double slack = 0.0;
};

IntervalLu interval_lu(const IntervalMatrix& a);

/// Inverse M-matrix A: exact hull at desk scale by fixing the attaining
/// right-hand side per coordinate and enumerating the vertices of A.
HullResult hull_bounds_inverse_m(const IntervalLinearSystem& sys, unsigned cap_bits = kDefaultVertexCapBits);

}  // namespace imx
