#include <algorithm>
#include <cmath>

#include "imx/kernels.hpp"

namespace imx::kernels {

namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

double abs_sum_scalar(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::abs(x[i]);
  return s;
}

double abs_max_scalar(const double* x, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

void gemm_scalar(const double* a, const double* b, double* c, std::size_t m, std::size_t k,
                 std::size_t n) {
  std::fill(c, c + m * n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    double* ci = c + i * n;
    for (std::size_t p = 0; p < k; ++p) axpy_scalar(a[i * k + p], b + p * n, ci, n);
  }
}

void mid_rad_scalar(const double* lo, const double* hi, double* mid, double* rad, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    mid[i] = 0.5 * (lo[i] + hi[i]);
    rad[i] = 0.5 * (hi[i] - lo[i]);
  }
}

void mig_mag_scalar(const double* lo, const double* hi, double* mig, double* mag, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double a = std::abs(lo[i]);
    const double b = std::abs(hi[i]);
    mig[i] = (lo[i] <= 0.0 && hi[i] >= 0.0) ? 0.0 : std::min(a, b);
    mag[i] = std::max(a, b);
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::Scalar,   dot_scalar,  axpy_scalar,    abs_sum_scalar,
                                 abs_max_scalar, gemm_scalar, mid_rad_scalar, mig_mag_scalar};
  return table;
}

}  // namespace imx::kernels
