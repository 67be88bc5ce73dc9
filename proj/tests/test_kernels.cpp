#include <cmath>
#include <cstring>
#include <vector>

#include "doctest.h"
#include "imx/error.hpp"
#include "imx/kernels.hpp"
#include "support/random.hpp"

using namespace imx;
namespace k = imx::kernels;

namespace {

std::vector<double> random_vec(testing::Rng& rng, std::size_t n, double lo = -10, double hi = 10) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.uniform(lo, hi);
  return v;
}

double abs_sum_ref(const std::vector<double>& x) {
  double s = 0;
  for (double v : x) s += std::abs(v);
  return s;
}

bool bit_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("scalar table is always available") {
  CHECK(k::scalar_table().isa == k::Isa::Scalar);
  CHECK(k::cpu_supports(k::Isa::Scalar));
  k::select(k::Isa::Scalar);
  CHECK(k::active().isa == k::Isa::Scalar);
  k::reset();
}

TEST_CASE("scalar kernels on small inputs") {
  const auto& s = k::scalar_table();
  const double x[] = {1, -2, 3};
  const double y[] = {4, 5, -6};
  CHECK(s.dot(x, y, 3) == -24.0);
  CHECK(s.abs_sum(x, 3) == 6.0);
  CHECK(s.abs_max(y, 3) == 6.0);
  CHECK(s.dot(x, y, 0) == 0.0);
  CHECK(s.abs_max(x, 0) == 0.0);
  double z[] = {1, 1, 1};
  s.axpy(2.0, x, z, 3);
  CHECK(z[0] == 3.0);
  CHECK(z[1] == -3.0);
  CHECK(z[2] == 7.0);
  const double a[] = {1, 2, 3, 4, 5, 6};  // 2x3
  const double b[] = {1, 0, 0, 1, 1, 1};  // 3x2
  double c[4];
  s.gemm(a, b, c, 2, 3, 2);
  CHECK(c[0] == 4.0);
  CHECK(c[1] == 5.0);
  CHECK(c[2] == 10.0);
  CHECK(c[3] == 11.0);
  const double lo[] = {-1, 2, -5};
  const double hi[] = {3, 4, -1};
  double m1[3], m2[3];
  s.mig_mag(lo, hi, m1, m2, 3);
  CHECK(m1[0] == 0.0);
  CHECK(m1[1] == 2.0);
  CHECK(m1[2] == 1.0);
  CHECK(m2[0] == 3.0);
  CHECK(m2[1] == 4.0);
  CHECK(m2[2] == 5.0);
  s.mid_rad(lo, hi, m1, m2, 3);
  CHECK(m1[0] == 1.0);
  CHECK(m2[0] == 2.0);
}

TEST_CASE("avx2 kernels match the scalar reference") {
  const k::KernelTable* v = k::avx2_table();
  if (v == nullptr || !k::cpu_supports(k::Isa::Avx2)) {
    MESSAGE("AVX2 variant unavailable; skipping equivalence checks");
    return;
  }
  const auto& s = k::scalar_table();
  testing::Rng rng(101);
  for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 15u, 16u, 17u, 31u, 64u, 100u, 1001u}) {
    const auto x = random_vec(rng, n);
    const auto y = random_vec(rng, n);
    const double ref = abs_sum_ref(x) * 10.0 * static_cast<double>(n + 1);
    const double eps = 1e-15 * ref + 1e-300;
    CHECK(std::abs(v->dot(x.data(), y.data(), n) - s.dot(x.data(), y.data(), n)) <= eps);
    CHECK(std::abs(v->abs_sum(x.data(), n) - s.abs_sum(x.data(), n)) <= eps);
    CHECK(v->abs_max(x.data(), n) == s.abs_max(x.data(), n));

    auto y1 = y, y2 = y;
    s.axpy(0.75, x.data(), y1.data(), n);
    v->axpy(0.75, x.data(), y2.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(y1[i] - y2[i]) <= 1e-14 * (std::abs(y1[i]) + 10));

    std::vector<double> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(x[i], y[i]);
      hi[i] = std::max(x[i], y[i]);
    }
    std::vector<double> a1(n), b1(n), a2(n), b2(n);
    s.mid_rad(lo.data(), hi.data(), a1.data(), b1.data(), n);
    v->mid_rad(lo.data(), hi.data(), a2.data(), b2.data(), n);
    CHECK(bit_equal(a1, a2));
    CHECK(bit_equal(b1, b2));
    s.mig_mag(lo.data(), hi.data(), a1.data(), b1.data(), n);
    v->mig_mag(lo.data(), hi.data(), a2.data(), b2.data(), n);
    CHECK(bit_equal(a1, a2));
    CHECK(bit_equal(b1, b2));
  }
  for (auto [m, kk, n] : {std::array<std::size_t, 3>{1, 1, 1}, {3, 5, 7}, {8, 8, 8}, {13, 6, 17}}) {
    const auto a = random_vec(rng, m * kk);
    const auto b = random_vec(rng, kk * n);
    std::vector<double> c1(m * n), c2(m * n);
    s.gemm(a.data(), b.data(), c1.data(), m, kk, n);
    v->gemm(a.data(), b.data(), c2.data(), m, kk, n);
    for (std::size_t i = 0; i < m * n; ++i) CHECK(std::abs(c1[i] - c2[i]) <= 1e-12 * (std::abs(c1[i]) + 100));
  }
}

TEST_CASE("select rejects an unsupported variant") {
  if (k::avx2_table() == nullptr || !k::cpu_supports(k::Isa::Avx2)) {
    CHECK_THROWS_AS(k::select(k::Isa::Avx2), Error);
  } else {
    k::select(k::Isa::Avx2);
    CHECK(k::active().isa == k::Isa::Avx2);
    k::reset();
  }
}
