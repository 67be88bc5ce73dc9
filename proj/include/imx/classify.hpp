#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "imx/interval_matrix.hpp"
#include "imx/matrix.hpp"

namespace imx {

/// "Positive" means > kStrictRelTol * scale and "nonnegative" means
/// >= -kStrictRelTol * scale, with scale the largest entry magnitude of the
/// quantity being tested (scale^k for a k x k minor).
inline constexpr double kStrictRelTol = 1e-10;

enum class MatrixClass {
  M,
  H,
  InverseNonnegative,
  TotallyPositive,
  BMatrix,
  Nonnegative,
  DiagonallyInterval,
  InverseM,
  PMatrixSpecialCase,
  PositiveDefiniteSufficient,
  Regular,
  ParametricPositiveDefinite,
};

enum class Verdict { Yes, No, Unknown };
enum class CostPath { Polynomial, Exponential };

std::string_view to_string(MatrixClass c);
std::string_view to_string(Verdict v);
std::string_view to_string(CostPath c);

struct Certificate {
  /// Positive vector v with Mv > 0 for the M/H tests.
  std::optional<Vector> vector;
  /// Endpoint or vertex matrices whose real property was checked.
  std::vector<Matrix> checked;
  /// A member (or, for H, the comparison matrix's realization) that violates
  /// the defining property.
  std::optional<Matrix> witness;
  std::optional<SignVector> signs;
  std::string violated;
};

struct ClassReport {
  MatrixClass cls;
  Verdict verdict = Verdict::Unknown;
  Certificate certificate;
  CostPath cost = CostPath::Polynomial;
  std::string note;

  bool yes() const { return verdict == Verdict::Yes; }
  bool no() const { return verdict == Verdict::No; }
};

// Real-matrix tests.
ClassReport is_m_matrix(const Matrix& a);
ClassReport is_h_matrix(const Matrix& a);
/// Fekete: all minors on contiguous rows and contiguous columns positive.
ClassReport is_totally_positive(const Matrix& a);
/// Principal-minor enumeration; throws CapExceeded for n > cap_bits.
ClassReport is_p_matrix(const Matrix& a, unsigned cap_bits = kDefaultVertexCapBits);
ClassReport is_b_matrix(const Matrix& a);
ClassReport is_inverse_nonnegative(const Matrix& a);
ClassReport is_inverse_m(const Matrix& a);
ClassReport is_positive_definite(const Matrix& a);

// Interval tests.
ClassReport is_m_matrix(const IntervalMatrix& a);
ClassReport is_h_matrix(const IntervalMatrix& a);
ClassReport is_inverse_nonnegative(const IntervalMatrix& a);
ClassReport is_totally_positive(const IntervalMatrix& a);
ClassReport is_b_matrix(const IntervalMatrix& a);
/// Every vertex matrix is inverse-M. Throws CapExceeded.
ClassReport is_inverse_m(const IntervalMatrix& a, unsigned cap_bits = kDefaultVertexCapBits);
ClassReport p_matrix_special(const IntervalMatrix& a, unsigned cap_bits = kDefaultVertexCapBits);
ClassReport positive_definite_sufficient(const SymmetricIntervalMatrix& a);
ClassReport regularity_via_h(const IntervalMatrix& a);

struct StructureFlags {
  bool nonnegative = false;
  bool midpoint_nonnegative = false;
  bool diagonally_interval = false;
  bool symmetric_midpoint = false;
  bool symmetric_radius = false;
};

StructureFlags classify_structure(const IntervalMatrix& a);

/// The member taking mig-realizing diagonal and mag-realizing off-diagonal
/// endpoints; its real comparison matrix equals comparison_matrix(a).
Matrix comparison_realization(const IntervalMatrix& a);

/// The 2n^2 matrices Amid +- diag(z^i) Arad diag(z^j).
std::vector<Matrix> inverse_m_test_matrices(const IntervalMatrix& a);

struct ConjectureResult {
  bool consistent = true;
  Verdict conjectured = Verdict::Unknown;
  Verdict exhaustive = Verdict::Unknown;
  /// Set when the verdicts differ: the input family and the first matrix
  /// where the two criteria part ways.
  std::optional<IntervalMatrix> counterexample;
  std::optional<Matrix> distinguishing_matrix;
};

/// Compares the 2n^2-matrix criterion with the vertex criterion.
ConjectureResult conjecture_check_inverse_m(const IntervalMatrix& a,
                                            unsigned cap_bits = kDefaultVertexCapBits);

}  // namespace imx
