#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "imx/interval_matrix.hpp"
#include "imx/linalg.hpp"
#include "imx/matrix.hpp"

namespace imx {

enum class Strategy {
  MMatrixEndpoints,
  TotallyPositiveCheckerboard,
  InverseNonnegativeEndpoints,
  InverseMEndpoints,
  DiagonallyIntervalPsd,
  SignStable,
  SignStableMidpointCertified,
  DiagonallyIntervalEigenvalues,
  TotallyPositiveEigenvalues,
  NonnegativeEndpoints,
  NonnegativeMidpointUpper,
  InverseMTestMatrices,
  PowerEndpoints,
  DiagonallyIntervalCube,
};

std::string_view to_string(Strategy s);

/// Range of a real characteristic. One side may be absent when only the
/// other endpoint is known exactly.
struct ScalarRange {
  std::optional<double> lower;
  std::optional<double> upper;
  Strategy strategy{};
  std::optional<Matrix> lower_attainer;
  std::optional<Matrix> upper_attainer;

  /// Throws PreconditionViolated unless both endpoints are present.
  Interval value() const;
};

/// Entrywise range of a matrix-valued characteristic. Attainer lists hold
/// either one matrix (valid for every entry) or one per entry, row-major.
struct MatrixRange {
  IntervalMatrix value;
  Strategy strategy{};
  std::vector<Matrix> lower_attainers;
  std::vector<Matrix> upper_attainers;

  const Matrix& lower_attainer(std::size_t i, std::size_t j) const;
  const Matrix& upper_attainer(std::size_t i, std::size_t j) const;
};

/// Dispatch order: M, TP, inverse nonnegative, inverse M, diagonally
/// interval with positive semidefinite lower endpoint, sign-stable.
/// Throws NoApplicableTheorem when none applies.
ScalarRange det_range(const IntervalMatrix& a, unsigned cap_bits = kDefaultVertexCapBits);

/// [lambda_i(lower), lambda_i(upper)] for i = 1..n (descending order).
std::vector<ScalarRange> eig_ranges_diag_interval(const SymmetricIntervalMatrix& a);
/// Upper endpoint only: max over members of the spectral radius.
ScalarRange spectral_radius_range_diag_interval(const SymmetricIntervalMatrix& a);
ScalarRange lambda_min_inverse_nonneg(const SymmetricIntervalMatrix& a);
/// All n eigenvalue ranges of a totally positive interval matrix.
std::vector<ScalarRange> eig_ranges_tp(const IntervalMatrix& a);

struct NonnegativeRanges {
  ScalarRange rho;
  ScalarRange sigma_max;
  /// Present when midpoint and radius are symmetric (symmetric members).
  std::optional<ScalarRange> lambda_max;
};

/// Full ranges when the lower endpoint is nonnegative; upper endpoints only
/// when just the midpoint is.
NonnegativeRanges nonneg_ranges(const IntervalMatrix& a);

/// Inverse nonnegative (endpoints) or totally positive (checkerboard).
ScalarRange sigma_min_range(const IntervalMatrix& a);
ScalarRange norm_range(const IntervalMatrix& a, Norm which, unsigned cap_bits = kDefaultVertexCapBits);
ScalarRange rr_range(const IntervalMatrix& a, unsigned cap_bits = kDefaultVertexCapBits);
MatrixRange inverse_bounds(const IntervalMatrix& a, unsigned cap_bits = kDefaultVertexCapBits);
MatrixRange power_hull(const IntervalMatrix& a, unsigned k);
MatrixRange cube_hull_diag_interval(const IntervalMatrix& a);

}  // namespace imx
