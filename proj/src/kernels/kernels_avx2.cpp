#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "imx/kernels.hpp"

namespace imx::kernels {

namespace {

inline __m256d abs_pd(__m256d v) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v); }

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline double hmax(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_max_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_max_sd(m, _mm_unpackhi_pd(m, m)));
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d a = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(a, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] = std::fma(alpha, x[i], y[i]);
}

double abs_sum_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, abs_pd(_mm256_loadu_pd(x + i)));
  double s = hsum(acc);
  for (; i < n; ++i) s += std::abs(x[i]);
  return s;
}

double abs_max_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_max_pd(acc, abs_pd(_mm256_loadu_pd(x + i)));
  double m = hmax(acc);
  for (; i < n; ++i) m = std::max(m, std::abs(x[i]));
  return m;
}

void gemm_avx2(const double* a, const double* b, double* c, std::size_t m, std::size_t k,
               std::size_t n) {
  std::fill(c, c + m * n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    double* ci = c + i * n;
    for (std::size_t p = 0; p < k; ++p) axpy_avx2(a[i * k + p], b + p * n, ci, n);
  }
}

void mid_rad_avx2(const double* lo, const double* hi, double* mid, double* rad, std::size_t n) {
  const __m256d half = _mm256_set1_pd(0.5);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d l = _mm256_loadu_pd(lo + i);
    const __m256d h = _mm256_loadu_pd(hi + i);
    _mm256_storeu_pd(mid + i, _mm256_mul_pd(half, _mm256_add_pd(l, h)));
    _mm256_storeu_pd(rad + i, _mm256_mul_pd(half, _mm256_sub_pd(h, l)));
  }
  for (; i < n; ++i) {
    mid[i] = 0.5 * (lo[i] + hi[i]);
    rad[i] = 0.5 * (hi[i] - lo[i]);
  }
}

void mig_mag_avx2(const double* lo, const double* hi, double* mig, double* mag, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d l = _mm256_loadu_pd(lo + i);
    const __m256d h = _mm256_loadu_pd(hi + i);
    const __m256d al = abs_pd(l);
    const __m256d ah = abs_pd(h);
    const __m256d straddles =
        _mm256_and_pd(_mm256_cmp_pd(l, zero, _CMP_LE_OQ), _mm256_cmp_pd(h, zero, _CMP_GE_OQ));
    _mm256_storeu_pd(mig + i, _mm256_blendv_pd(_mm256_min_pd(al, ah), zero, straddles));
    _mm256_storeu_pd(mag + i, _mm256_max_pd(al, ah));
  }
  for (; i < n; ++i) {
    const double a = std::abs(lo[i]);
    const double b = std::abs(hi[i]);
    mig[i] = (lo[i] <= 0.0 && hi[i] >= 0.0) ? 0.0 : std::min(a, b);
    mag[i] = std::max(a, b);
  }
}

}  // namespace

const KernelTable* avx2_table() {
  static const KernelTable table{Isa::Avx2,   dot_avx2,  axpy_avx2,    abs_sum_avx2,
                                 abs_max_avx2, gemm_avx2, mid_rad_avx2, mig_mag_avx2};
  return &table;
}

}  // namespace imx::kernels
