#pragma once

// Central-difference checks of the closed-form first derivatives of det,
// inverse entries and simple eigenvalues. Each returns the worst relative
// mismatch max |fd - exact| / max(1, |exact|) over all entry directions.

#include <algorithm>
#include <cmath>

#include "imx/linalg.hpp"
#include "imx/matrix.hpp"

namespace imx::testing {

inline constexpr double kFdStep = 1e-6;

inline double mismatch(double fd, double exact) { return std::abs(fd - exact) / std::max(1.0, std::abs(exact)); }

template <class F>
double central_difference(Matrix a, std::size_t k, std::size_t l, F&& f) {
  const double h = kFdStep * std::max(1.0, std::abs(a(k, l)));
  const double x = a(k, l);
  a(k, l) = x + h;
  const double up = f(a);
  a(k, l) = x - h;
  const double dn = f(a);
  return (up - dn) / (2 * h);
}

/// d det / d a_kl = det(A) (A^{-T})_kl
inline double det_gradient_error(const Matrix& a) {
  const std::size_t n = a.rows();
  const Matrix inv_t = inverse(a).transpose();
  const double d = det(a);
  double worst = 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      worst = std::max(worst, mismatch(central_difference(a, k, l, [](const Matrix& m) { return det(m); }),
                                       d * inv_t(k, l)));
  return worst;
}

/// d (A^{-1})_ij / d a_kl = -(A^{-1})_ik (A^{-1})_lj
inline double inverse_gradient_error(const Matrix& a) {
  const std::size_t n = a.rows();
  const Matrix inv = inverse(a);
  double worst = 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      const double h = kFdStep * std::max(1.0, std::abs(a(k, l)));
      Matrix up = a, dn = a;
      up(k, l) += h;
      dn(k, l) -= h;
      const Matrix iu = inverse(up), id = inverse(dn);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          worst = std::max(worst, mismatch((iu(i, j) - id(i, j)) / (2 * h), -inv(i, k) * inv(l, j)));
    }
  return worst;
}

/// Eigenvalue of largest real part (assumed real and simple, e.g. the Perron
/// root of a positive matrix).
inline double top_eigenvalue(const Matrix& a) {
  double best = -1e300;
  for (const auto& z : eigenvalues(a)) best = std::max(best, z.real());
  return best;
}

/// For that eigenvalue with right eigenvector x and left eigenvector y:
/// d lambda / d a_kl = y_k x_l / (y^T x).
inline double eigenvalue_gradient_error(const Matrix& a) {
  const std::size_t n = a.rows();
  const double lambda = top_eigenvalue(a);
  const Vector x = eigenvector(a, lambda);
  const Vector y = eigenvector(a.transpose(), lambda);
  double yx = 0;
  for (std::size_t i = 0; i < n; ++i) yx += y[i] * x[i];
  double worst = 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      worst = std::max(worst, mismatch(central_difference(a, k, l,
                                                          [](const Matrix& m) { return top_eigenvalue(m); }),
                                       y[k] * x[l] / yx));
  return worst;
}

}  // namespace imx::testing
