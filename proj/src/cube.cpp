#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "imx/error.hpp"
#include "imx/ranges.hpp"

namespace imx {

namespace {

// p(x, y) = sum c[a][b] x^a y^b with a + b <= 3.
struct Poly2 {
  std::array<std::array<double, 4>, 4> c{};

  double operator()(double x, double y) const {
    double s = 0;
    double xa = 1;
    for (int a = 0; a < 4; ++a, xa *= x) {
      double yb = 1;
      for (int b = 0; a + b < 4; ++b, yb *= y) s += c[a][b] * xa * yb;
    }
    return s;
  }
};

struct Candidate {
  double value;
  double x;
  double y;
};

void consider(std::vector<std::array<double, 2>>& pts, double x, double y, const Interval& bx,
              const Interval& by) {
  if (std::isfinite(x) && std::isfinite(y) && bx.contains(x) && by.contains(y)) pts.push_back({x, y});
}

/// Candidate points for a quadratic in (x, y) over a box: corners, edge
/// stationary points, interior stationary point.
std::vector<std::array<double, 2>> quadratic_candidates(const Poly2& p, const Interval& bx,
                                                        const Interval& by) {
  const double a = p.c[2][0], b = p.c[1][1], c = p.c[0][2], d = p.c[1][0], e = p.c[0][1];
  std::vector<std::array<double, 2>> pts;
  for (double x : {bx.lo(), bx.hi()})
    for (double y : {by.lo(), by.hi()}) pts.push_back({x, y});
  if (c != 0.0)
    for (double x : {bx.lo(), bx.hi()}) consider(pts, x, -(b * x + e) / (2 * c), bx, by);
  if (a != 0.0)
    for (double y : {by.lo(), by.hi()}) consider(pts, -(b * y + d) / (2 * a), y, bx, by);
  const double det = 4 * a * c - b * b;
  if (det != 0.0) consider(pts, (b * e - 2 * c * d) / det, (b * d - 2 * a * e) / det, bx, by);
  return pts;
}

/// Candidates for a cubic in x: endpoints and critical points.
std::vector<std::array<double, 2>> cubic_candidates(const Poly2& p, const Interval& bx) {
  const double c3 = p.c[3][0], c2 = p.c[2][0], c1 = p.c[1][0];
  std::vector<std::array<double, 2>> pts{{bx.lo(), 0.0}, {bx.hi(), 0.0}};
  const Interval none(0.0);
  // p'(x) = 3 c3 x^2 + 2 c2 x + c1
  const double qa = 3 * c3, qb = 2 * c2, qc = c1;
  if (qa == 0.0) {
    if (qb != 0.0) consider(pts, -qc / qb, 0.0, bx, none);
  } else {
    const double disc = qb * qb - 4 * qa * qc;
    if (disc >= 0) {
      const double r = std::sqrt(disc);
      const double q = -0.5 * (qb + std::copysign(r, qb));
      if (q != 0.0) consider(pts, qc / q, 0.0, bx, none);
      consider(pts, q / qa, 0.0, bx, none);
    }
  }
  return pts;
}

}  // namespace

MatrixRange cube_hull_diag_interval(const IntervalMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::InvalidArgument, "interval matrix is not square");
  if (!a.is_diagonally_interval())
    throw Error(ErrorCode::PreconditionViolated, "radius is not diagonal");
  const std::size_t n = a.rows();
  std::vector<Interval> diag(n);
  for (std::size_t k = 0; k < n; ++k) diag[k] = a(k, k);
  const Matrix off = [&] {
    Matrix m = a.mid();
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 0.0;
    return m;
  }();

  MatrixRange r;
  r.strategy = Strategy::DiagonallyIntervalCube;
  Matrix lo(n, n), hi(n, n);
  r.lower_attainers.reserve(n * n);
  r.upper_attainers.reserve(n * n);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // Expand sum_{k,l} a_ik a_kl a_lj with diagonal entries symbolic.
      Poly2 p;
      std::vector<double> linear(n, 0.0);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const std::array<std::pair<std::size_t, std::size_t>, 3> f{{{i, k}, {k, l}, {l, j}}};
          double coef = 1.0;
          int dx = 0, dy = 0;
          std::size_t other = n;
          for (const auto& [r0, c0] : f) {
            if (r0 != c0) {
              coef *= off(r0, c0);
            } else if (r0 == i) {
              ++dx;
            } else if (r0 == j) {
              ++dy;
            } else {
              other = r0;
            }
          }
          if (coef == 0.0) continue;
          if (other != n)
            linear[other] += coef;  // only arises as c_im d_m c_mj
          else
            p.c[dx][dy] += coef;
        }

      double base_lo = 0, base_hi = 0;
      Matrix at_lo = a.mid(), at_hi = a.mid();
      for (std::size_t m = 0; m < n; ++m) {
        if (m == i || m == j) continue;
        const bool up = linear[m] > 0;
        at_lo(m, m) = up ? diag[m].lo() : diag[m].hi();
        at_hi(m, m) = up ? diag[m].hi() : diag[m].lo();
        base_lo += linear[m] * at_lo(m, m);
        base_hi += linear[m] * at_hi(m, m);
      }

      const auto pts = i == j ? cubic_candidates(p, diag[i]) : quadratic_candidates(p, diag[i], diag[j]);
      Candidate best_lo{std::numeric_limits<double>::infinity(), 0, 0};
      Candidate best_hi{-std::numeric_limits<double>::infinity(), 0, 0};
      for (const auto& [x, y] : pts) {
        const double v = p(x, y);
        if (v < best_lo.value) best_lo = {v, x, y};
        if (v > best_hi.value) best_hi = {v, x, y};
      }
      at_lo(i, i) = best_lo.x;
      at_hi(i, i) = best_hi.x;
      if (i != j) {
        at_lo(j, j) = best_lo.y;
        at_hi(j, j) = best_hi.y;
      }
      lo(i, j) = base_lo + best_lo.value;
      hi(i, j) = base_hi + best_hi.value;
      r.lower_attainers.push_back(std::move(at_lo));
      r.upper_attainers.push_back(std::move(at_hi));
    }
  r.value = IntervalMatrix(lo, hi);
  return r;
}

}  // namespace imx
