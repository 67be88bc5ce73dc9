#pragma once

#include <utility>
#include <vector>

#include "imx/classify.hpp"
#include "imx/interval.hpp"
#include "imx/linsolve.hpp"
#include "imx/matrix.hpp"

namespace imx {

inline constexpr std::size_t kDefaultParameterCap = 20;

/// A(p) = A0 + sum_k A_k p_k and b(p) = b0 + sum_k b_k p_k over the box p.
struct ParametricSystem {
  Matrix a0;
  Vector b0;
  std::vector<Matrix> a;
  std::vector<Vector> b;
  IntervalVector p;

  /// Zero constant term. Throws InvalidArgument on any size mismatch.
  ParametricSystem(std::vector<Matrix> a, std::vector<Vector> b, IntervalVector p);
  ParametricSystem(Matrix a0, Vector b0, std::vector<Matrix> a, std::vector<Vector> b, IntervalVector p);

  std::size_t size() const { return a0.rows(); }
  std::size_t parameters() const { return p.size(); }
  Vector midpoint() const;
  /// Parameter vector at the box vertex given by the bits of mask (bit k set: upper endpoint).
  Vector vertex(std::uint64_t mask) const;
};

/// (A(p), b(p)); throws OutOfBox when p leaves the parameter box.
std::pair<Matrix, Vector> eval_parametric(const ParametricSystem& sys, std::span<const double> p);

/// Positive definiteness of every A(p): checked at the 2^K vertices.
ClassReport is_pd_parametric(const ParametricSystem& sys, std::size_t cap = kDefaultParameterCap);

/// Rank-one parameter matrices without cross dependencies: hull from the
/// 2^K vertex solutions.
HullResult hull_rank_one(const ParametricSystem& sys, std::size_t cap = kDefaultParameterCap);

/// Each parameter confined to one equation: exact hull by one linear
/// program per orthant of the parameter signs and per coordinate bound.
HullResult popova_hull(const ParametricSystem& sys, std::size_t cap = kDefaultParameterCap);

}  // namespace imx
