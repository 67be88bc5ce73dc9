#pragma once

// Dense arithmetic inner loops. Every kernel has a portable scalar reference
// implementation and, on x86-64, an AVX2+FMA variant. The variant is chosen
// once at runtime from CPUID; setting IMX_ISA=scalar in the environment forces
// the reference path.
//
// Results of the two variants agree bit-for-bit for the elementwise kernels
// (mid_rad, mig_mag) and to within summation-order rounding for reductions.

#include <cstddef>
#include <span>
#include <string_view>

namespace imx::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

struct KernelTable {
  Isa isa;
  double (*dot)(const double* x, const double* y, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  double (*abs_sum)(const double* x, std::size_t n);
  double (*abs_max)(const double* x, std::size_t n);
  // row-major C(m x n) = A(m x k) * B(k x n)
  void (*gemm)(const double* a, const double* b, double* c, std::size_t m, std::size_t k,
               std::size_t n);
  void (*mid_rad)(const double* lo, const double* hi, double* mid, double* rad, std::size_t n);
  void (*mig_mag)(const double* lo, const double* hi, double* mig, double* mag, std::size_t n);
};

const KernelTable& scalar_table();
/// nullptr when the variant was not compiled in.
const KernelTable* avx2_table();

bool cpu_supports(Isa isa);

/// Table in use by the library.
const KernelTable& active();
/// Force a variant (tests, benchmarks). Throws InvalidArgument if unsupported.
void select(Isa isa);
/// Re-run detection (honours IMX_ISA).
void reset();

inline double dot(std::span<const double> x, std::span<const double> y) {
  return active().dot(x.data(), y.data(), x.size());
}
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  active().axpy(alpha, x.data(), y.data(), x.size());
}
inline double abs_sum(std::span<const double> x) { return active().abs_sum(x.data(), x.size()); }
inline double abs_max(std::span<const double> x) { return active().abs_max(x.data(), x.size()); }

}  // namespace imx::kernels
