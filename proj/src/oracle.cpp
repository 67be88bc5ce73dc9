#include "imx/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>

#include "imx/error.hpp"
#include "imx/linalg.hpp"

namespace imx {

namespace {

unsigned cap_bits(const OracleConfig& cfg) {
  if (cfg.vertex_cap == 0) throw Error(ErrorCode::InvalidArgument, "vertex cap must be positive");
  return static_cast<unsigned>(std::bit_width(cfg.vertex_cap) - 1);
}

void check_count(double count, const OracleConfig& cfg, const char* what) {
  if (count > static_cast<double>(cfg.vertex_cap))
    throw Error(ErrorCode::CapExceeded, std::string(what) + " needs " + std::to_string(count) +
                                            " evaluations, above the cap of " + std::to_string(cfg.vertex_cap));
}

/// Grid points lo, lo + h, ..., hi with h <= step.
std::vector<double> grid(const Interval& x, double step) {
  if (x.is_degenerate()) return {x.lo()};
  const auto m = static_cast<std::size_t>(std::ceil(x.rad() * 2.0 / step - 1e-9));
  std::vector<double> pts(m + 1);
  for (std::size_t k = 0; k <= m; ++k) pts[k] = k == m ? x.hi() : x.lo() + (x.hi() - x.lo()) * k / m;
  return pts;
}

/// Calls f with every point of the product grid.
template <class F>
void each_grid_point(const std::vector<std::vector<double>>& axes, F&& f) {
  std::vector<std::size_t> idx(axes.size(), 0);
  std::vector<double> pt(axes.size());
  for (;;) {
    for (std::size_t k = 0; k < axes.size(); ++k) pt[k] = axes[k][idx[k]];
    f(static_cast<const std::vector<double>&>(pt));
    std::size_t k = 0;
    for (; k < axes.size(); ++k) {
      if (++idx[k] < axes[k].size()) break;
      idx[k] = 0;
    }
    if (k == axes.size()) return;
  }
}

double grid_count(const std::vector<std::vector<double>>& axes) {
  double c = 1.0;
  for (const auto& a : axes) c *= static_cast<double>(a.size());
  return c;
}

}  // namespace

Interval oracle_det_range(const IntervalMatrix& a, const OracleConfig& cfg) {
  if (!a.is_square()) throw Error(ErrorCode::InvalidArgument, "interval matrix is not square");
  const VertexEnumerator en(a, cap_bits(cfg));
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  en.for_each([&](const Matrix& m, std::uint64_t) {
    const double d = det(m);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  });
  return Interval(lo, hi);
}

IntervalVector oracle_solution_hull(const IntervalLinearSystem& sys, const OracleConfig& cfg) {
  const Interval d = oracle_det_range(sys.a, cfg);
  if (d.contains(0.0)) throw Error(ErrorCode::SingularInside, "determinant range contains 0");
  const std::size_t n = sys.size();
  const VertexEnumerator en(sys.a, cap_bits(cfg));
  Vector lo(n, std::numeric_limits<double>::infinity()), hi(n, -std::numeric_limits<double>::infinity());
  en.for_each([&](const Matrix& m, std::uint64_t) {
    const Matrix inv = inverse(m);
    for (std::size_t i = 0; i < n; ++i) {
      double xl = 0.0, xh = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double u = inv(i, j) * sys.b[j].lo(), v = inv(i, j) * sys.b[j].hi();
        xl += std::min(u, v);
        xh += std::max(u, v);
      }
      lo[i] = std::min(lo[i], xl);
      hi[i] = std::max(hi[i], xh);
    }
  });
  IntervalVector out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(lo[i], hi[i]);
  return out;
}

SampledRange oracle_range_sampling(const std::function<double(const Matrix&)>& f, const IntervalMatrix& a,
                                   const OracleConfig& cfg, bool symmetric) {
  IntervalMatrix base = a;
  if (symmetric) {
    if (!a.is_square()) throw Error(ErrorCode::InvalidArgument, "interval matrix is not square");
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < i; ++j) base.set(i, j, Interval(a(i, j).lo()));
  }
  auto mirror = [&](Matrix& m) {
    if (symmetric)
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j) m(i, j) = m(j, i);
  };
  SampledRange r{Interval(0.0), Matrix(), Matrix()};
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  auto visit = [&](Matrix& m) {
    mirror(m);
    const double v = f(m);
    if (v < lo) {
      lo = v;
      r.argmin = m;
    }
    if (v > hi) {
      hi = v;
      r.argmax = m;
    }
  };
  const VertexEnumerator en(base, cap_bits(cfg));
  en.for_each([&](const Matrix& m, std::uint64_t) {
    Matrix copy = m;
    visit(copy);
  });
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Matrix m(a.rows(), a.cols());
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const Interval& x = base(i, j);
        m(i, j) = x.lo() + (x.hi() - x.lo()) * unit(rng);
      }
    visit(m);
  }
  r.value = Interval(lo, hi);
  return r;
}

MinorSigns oracle_minors(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::InvalidArgument, "matrix is not square");
  const std::size_t n = a.rows();
  if (n > 6) throw Error(ErrorCode::CapExceeded, "exhaustive minors are limited to n <= 6");
  const double scale = std::max(max_abs(a), 1e-300);
  MinorSigns out{true, true};
  const std::uint32_t full = (1U << n) - 1;
  for (std::uint32_t rmask = 1; rmask <= full; ++rmask)
    for (std::uint32_t cmask = 1; cmask <= full; ++cmask) {
      const int k = std::popcount(rmask);
      if (k != std::popcount(cmask)) continue;
      Matrix sub(k, k);
      std::size_t r = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (!((rmask >> i) & 1U)) continue;
        std::size_t c = 0;
        for (std::size_t j = 0; j < n; ++j)
          if ((cmask >> j) & 1U) sub(r, c++) = a(i, j);
        ++r;
      }
      const bool pos = det(sub) > 1e-10 * std::pow(scale, k);
      if (!pos) {
        out.all_minors_positive = false;
        if (rmask == cmask) out.principal_minors_positive = false;
      }
    }
  return out;
}

IntervalMatrix oracle_cube_range(const IntervalMatrix& a, const OracleConfig& cfg) {
  if (!a.is_square()) throw Error(ErrorCode::InvalidArgument, "interval matrix is not square");
  if (!a.is_diagonally_interval()) throw Error(ErrorCode::PreconditionViolated, "radius is not diagonal");
  const std::size_t n = a.rows();
  std::vector<std::size_t> free;
  std::vector<std::vector<double>> axes;
  for (std::size_t k = 0; k < n; ++k)
    if (!a(k, k).is_degenerate()) {
      free.push_back(k);
      axes.push_back(grid(a(k, k), cfg.grid_step));
    }
  if (free.size() > 3) throw Error(ErrorCode::CapExceeded, "cube grid is limited to three interval diagonal entries");
  check_count(grid_count(axes), cfg, "cube grid");
  Matrix m = a.mid();
  Matrix lo(n, n, std::numeric_limits<double>::infinity()), hi(n, n, -std::numeric_limits<double>::infinity());
  each_grid_point(axes, [&](const std::vector<double>& pt) {
    for (std::size_t f = 0; f < free.size(); ++f) m(free[f], free[f]) = pt[f];
    const Matrix c = m * m * m;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        lo(i, j) = std::min(lo(i, j), c(i, j));
        hi(i, j) = std::max(hi(i, j), c(i, j));
      }
  });
  return IntervalMatrix(lo, hi);
}

IntervalVector oracle_parametric_grid(const ParametricSystem& sys, const OracleConfig& cfg) {
  std::vector<std::vector<double>> axes;
  for (const Interval& p : sys.p) axes.push_back(grid(p, cfg.grid_step));
  check_count(grid_count(axes), cfg, "parameter grid");
  const std::size_t n = sys.size();
  Vector lo(n, std::numeric_limits<double>::infinity()), hi(n, -std::numeric_limits<double>::infinity());
  each_grid_point(axes, [&](const std::vector<double>& pt) {
    const auto [a, b] = eval_parametric(sys, pt);
    if (lu_factor(a).singular) throw Error(ErrorCode::SingularInside, "singular matrix inside the parameter box");
    const Vector x = solve(a, b);
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], x[i]);
      hi[i] = std::max(hi[i], x[i]);
    }
  });
  IntervalVector out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(lo[i], hi[i]);
  return out;
}

}  // namespace imx
