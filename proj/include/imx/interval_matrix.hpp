#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <vector>

#include "imx/interval.hpp"
#include "imx/matrix.hpp"

namespace imx {

/// Default cap on the number of non-degenerate entries a vertex enumeration
/// may branch on (2^24 vertices).
inline constexpr unsigned kDefaultVertexCapBits = 24;

/// Rectangular array of intervals: the set {A : lower <= A <= upper}.
class IntervalMatrix {
 public:
  IntervalMatrix() = default;
  IntervalMatrix(std::size_t rows, std::size_t cols);
  IntervalMatrix(const Matrix& lower, const Matrix& upper);
  explicit IntervalMatrix(const Matrix& point);
  IntervalMatrix(std::initializer_list<std::initializer_list<Interval>> rows);

  static IntervalMatrix from_mid_rad(const Matrix& mid, const Matrix& rad);
  /// n x 1 interval matrix holding a vector.
  static IntervalMatrix column(std::span<const Interval> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Interval& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, const Interval& a) { entries_[i * cols_ + j] = a; }
  std::span<const Interval> entries() const { return entries_; }

  Matrix lower() const;
  Matrix upper() const;
  Matrix mid() const;
  Matrix rad() const;

  bool is_point() const;
  /// Number of entries with lo < hi.
  std::size_t nondegenerate_count() const;
  /// Radius vanishes off the diagonal.
  bool is_diagonally_interval() const;
  bool contains(const Matrix& a, double slack = 0.0) const;
  bool contains(const IntervalMatrix& inner, double slack = 0.0) const;

  IntervalMatrix transpose() const;

  friend bool operator==(const IntervalMatrix&, const IntervalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Interval> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntervalMatrix& a);

/// Interval matrix with symmetric midpoint and radius, standing for its
/// symmetric members {A in base : A = A^T}.
class SymmetricIntervalMatrix {
 public:
  /// Throws NotSymmetric unless base is square with symmetric mid and rad.
  explicit SymmetricIntervalMatrix(IntervalMatrix base);

  const IntervalMatrix& base() const { return base_; }
  std::size_t size() const { return base_.rows(); }
  bool contains(const Matrix& a, double slack = 0.0) const;

 private:
  IntervalMatrix base_;
};

/// Vector of +1/-1 entries.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::vector<int> entries);

  /// s = (1, -1, 1, -1, ...).
  static SignVector checkerboard(std::size_t n);
  /// -1 in entry i (0-based), +1 elsewhere.
  static SignVector flip_one(std::size_t n, std::size_t i);
  static SignVector ones(std::size_t n);
  /// Bit b of mask set gives -1 in entry b.
  static SignVector from_mask(std::size_t n, std::uint64_t mask);
  /// Signs of v; zero entries map to +1.
  static SignVector signs_of(std::span<const double> v);

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  std::span<const int> entries() const { return entries_; }

  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  std::vector<int> entries_;
};

/// The member Amid + direction * diag(left) * Arad * diag(right), built by
/// endpoint selection so the result is an exact vertex of `a`.
Matrix signed_vertex(const IntervalMatrix& a, const SignVector& left, const SignVector& right,
                     int direction);

/// Real comparison matrix: |a_ii| on the diagonal, -|a_ij| off it.
Matrix comparison_matrix(const Matrix& a);
/// Interval comparison matrix: mig(a_ii) on the diagonal, -mag(a_ij) off it.
Matrix comparison_matrix(const IntervalMatrix& a);

struct CheckerboardPair {
  Matrix down;  // Amid - diag(s) Arad diag(s)
  Matrix up;    // Amid + diag(s) Arad diag(s)
};

CheckerboardPair checkerboard_vertices(const IntervalMatrix& a);

/// bmid - diag(s) brad and bmid + diag(s) brad for an interval vector.
Vector checkerboard_down(std::span<const Interval> b);
Vector checkerboard_up(std::span<const Interval> b);

/// u <=* v in the checkerboard order, i.e. diag(s) u <= diag(s) v (+ tol).
bool checkerboard_leq(std::span<const double> u, std::span<const double> v, double tol = 0.0);

/// The box [v1, v2]* = diag(s) [diag(s) v1, diag(s) v2]. Requires v1 <=* v2
/// up to `tol`; throws InvalidArgument otherwise.
IntervalVector checkerboard_box(std::span<const double> v1, std::span<const double> v2,
                                double tol = 0.0);

/// Lower/upper choice per entry of an interval matrix.
class VertexSelector {
 public:
  VertexSelector(std::size_t rows, std::size_t cols, std::vector<bool> upper);
  bool takes_upper(std::size_t i, std::size_t j) const { return upper_[i * cols_ + j]; }
  Matrix apply(const IntervalMatrix& a) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<bool> upper_;
};

/// Enumerates every vertex matrix of an interval matrix exactly once.
/// Degenerate entries (lo == hi) do not branch, so there are 2^k vertices
/// for k non-degenerate entries. Vertex `index` takes the upper endpoint of
/// the b-th non-degenerate entry (row-major order) iff bit b of index is set.
class VertexEnumerator {
 public:
  /// Throws CapExceeded when more than cap_bits entries are non-degenerate.
  explicit VertexEnumerator(const IntervalMatrix& a, unsigned cap_bits = kDefaultVertexCapBits);

  std::uint64_t size() const { return std::uint64_t{1} << free_.size(); }
  unsigned branching_entries() const { return static_cast<unsigned>(free_.size()); }

  Matrix vertex(std::uint64_t index) const;
  VertexSelector selector(std::uint64_t index) const;
  /// Overwrite the free entries of `out` (which must hold the base vertex).
  void assign(std::uint64_t index, Matrix& out) const;

  /// Calls f(const Matrix&, index) for indices in [first, last).
  template <class F>
  void for_each(F&& f, std::uint64_t first = 0, std::uint64_t last = ~std::uint64_t{0}) const {
    last = std::min(last, size());
    Matrix m = base_;
    for (std::uint64_t idx = first; idx < last; ++idx) {
      assign(idx, m);
      f(static_cast<const Matrix&>(m), idx);
    }
  }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Matrix;
    using difference_type = std::ptrdiff_t;
    using pointer = const Matrix*;
    using reference = const Matrix&;

    iterator() = default;
    iterator(const VertexEnumerator* owner, std::uint64_t index);
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    const VertexEnumerator* owner_ = nullptr;
    std::uint64_t index_ = 0;
    Matrix current_;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, size()); }

 private:
  struct FreeEntry {
    std::size_t offset;
    double lo;
    double hi;
  };
  std::size_t rows_;
  std::size_t cols_;
  Matrix base_;
  std::vector<FreeEntry> free_;
};

}  // namespace imx
