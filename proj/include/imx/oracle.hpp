#pragma once

#include <cstdint>
#include <functional>

#include "imx/interval_matrix.hpp"
#include "imx/linsolve.hpp"
#include "imx/parametric.hpp"

namespace imx {

struct OracleConfig {
  /// Maximum number of vertex (or grid) evaluations.
  std::uint64_t vertex_cap = std::uint64_t{1} << 24;
  std::size_t samples = 500;
  double grid_step = 1e-2;
  std::uint64_t seed = 0;
};

/// Exact: det is affine in each entry, so its extrema sit at vertices.
Interval oracle_det_range(const IntervalMatrix& a, const OracleConfig& cfg = {});

/// Exact hull of a regular system from the vertex matrices of A (the
/// right-hand side is optimized in closed form per vertex). Throws
/// SingularInside when the vertex determinant range contains 0.
IntervalVector oracle_solution_hull(const IntervalLinearSystem& sys, const OracleConfig& cfg = {});

struct SampledRange {
  Interval value;
  Matrix argmin;
  Matrix argmax;
};

/// Inner approximation of the range of f: all vertices plus cfg.samples
/// uniform members. A fixed seed gives identical sample prefixes, so the
/// result widens monotonically with cfg.samples. With symmetric set, members
/// and vertices are symmetric.
SampledRange oracle_range_sampling(const std::function<double(const Matrix&)>& f, const IntervalMatrix& a,
                                   const OracleConfig& cfg = {}, bool symmetric = false);

struct MinorSigns {
  bool all_minors_positive = false;
  bool principal_minors_positive = false;
};

/// Exhaustive minor enumeration for n <= 6.
MinorSigns oracle_minors(const Matrix& a);

/// Entrywise range of A^3 over a grid of the diagonal box (at most three
/// interval diagonal entries).
IntervalMatrix oracle_cube_range(const IntervalMatrix& a, const OracleConfig& cfg = {});

/// Hull of the parametric solution set over a grid of the parameter box.
IntervalVector oracle_parametric_grid(const ParametricSystem& sys, const OracleConfig& cfg = {});

}  // namespace imx
