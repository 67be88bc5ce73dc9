#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "imx/matrix.hpp"

namespace imx {

/// Pivot magnitudes at or below pivot_tolerance(A) = 1e-12 * ||A||_inf mark
/// A as numerically singular throughout the library.
inline constexpr double kPivotRelTol = 1e-12;
double pivot_tolerance(const Matrix& a);

/// PA = LU with partial pivoting; L unit lower and U stored together.
struct LuFactorization {
  Matrix lu;
  std::vector<std::size_t> perm;
  int sign = 1;
  /// Smallest pivot magnitude encountered.
  double min_pivot = 0.0;
  bool singular = false;
};

LuFactorization lu_factor(const Matrix& a);

/// Determinant via pivoted LU; the sign from row swaps is tracked exactly.
double det(const Matrix& a);
/// Throws SingularMatrix when a pivot falls below pivot_tolerance.
Matrix inverse(const Matrix& a);
Vector solve(const Matrix& a, std::span<const double> b);

struct SymmetricEigen {
  Vector values;   // descending
  Matrix vectors;  // column k is the unit eigenvector of values[k]
};

/// Cyclic Jacobi rotations. Throws NotSymmetric when |a_ij - a_ji| exceeds
/// 1e-12 * max(1, max|a|).
SymmetricEigen sym_eigen(const Matrix& a);
Vector sym_eigenvalues(const Matrix& a);

/// Eigenvalues of a general square matrix (balancing, Hessenberg reduction,
/// Francis double-shift QR). Throws NonConvergence after the iteration cap.
std::vector<std::complex<double>> eigenvalues(const Matrix& a);

/// Real eigenvalues sorted descending; throws NonConvergence if any
/// eigenvalue has |imag| > tol * max(1, |lambda|).
Vector real_eigenvalues(const Matrix& a, double tol = 1e-8);

/// Unit vector spanning the numerical null space of a - lambda I, for a
/// simple eigenvalue lambda (complete-pivoting elimination).
Vector eigenvector(const Matrix& a, double lambda);

/// Descending singular values by one-sided Jacobi.
Vector singular_values(const Matrix& a);

double spectral_radius(const Matrix& a);

enum class Norm { Inf, One, Frobenius, Chebyshev, Inf1 };

/// ||.||_{inf,1} = max over z in {+-1}^n of ||Mz||_1 is evaluated exactly by
/// enumeration; throws CapExceeded when the column count exceeds cap_bits.
double norm(const Matrix& a, Norm which, unsigned cap_bits = 24);

/// rr(A) = 1 / ||A^{-1}||_{inf,1}. Throws SingularMatrix.
double regularity_radius(const Matrix& a, unsigned cap_bits = 24);

}  // namespace imx
