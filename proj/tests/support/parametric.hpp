#pragma once

#include "imx/parametric.hpp"
#include "support/random.hpp"

namespace imx::testing {

/// Each parameter sits in one random row of a diagonally dominant system.
inline ParametricSystem random_single_row(Rng& rng, std::size_t n, std::size_t k) {
  Matrix a0 = rng.matrix(n, n, -0.5, 0.5);
  for (std::size_t i = 0; i < n; ++i) a0(i, i) = 3.0 + rng.uniform(0, 1);
  std::vector<Matrix> a;
  std::vector<Vector> b;
  IntervalVector p;
  for (std::size_t j = 0; j < k; ++j) {
    const auto row = static_cast<std::size_t>(rng.integer(0, static_cast<int>(n) - 1));
    Matrix m(n, n);
    Vector v(n, 0.0);
    for (std::size_t c = 0; c < n; ++c) m(row, c) = rng.uniform(-0.4, 0.4);
    v[row] = rng.uniform(-1, 1);
    a.push_back(m);
    b.push_back(v);
    const double c = rng.uniform(-1, 1);
    p.emplace_back(c - rng.uniform(0.05, 0.5), c + rng.uniform(0.05, 0.5));
  }
  return ParametricSystem(a0, rng.vector(n), a, b, p);
}

inline ParametricSystem random_rank_one(Rng& rng, std::size_t n, std::size_t k) {
  Matrix a0 = rng.matrix(n, n, -0.5, 0.5);
  for (std::size_t i = 0; i < n; ++i) a0(i, i) = 3.0 + rng.uniform(0, 1);
  std::vector<Matrix> a;
  std::vector<Vector> b;
  IntervalVector p;
  for (std::size_t j = 0; j < k; ++j) {
    const Vector u = rng.vector(n, -0.6, 0.6), v = rng.vector(n, -0.6, 0.6);
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = u[r] * v[c];
    a.push_back(m);
    b.emplace_back(n, 0.0);
    p.emplace_back(rng.uniform(-1, 0), rng.uniform(0, 1));
  }
  return ParametricSystem(a0, rng.vector(n), a, b, p);
}

}  // namespace imx::testing
