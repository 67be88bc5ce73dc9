#include "imx/interval_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "imx/error.hpp"
#include "imx/kernels.hpp"

namespace imx {

IntervalMatrix::IntervalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntervalMatrix::IntervalMatrix(const Matrix& lower, const Matrix& upper)
    : rows_(lower.rows()), cols_(lower.cols()) {
  if (upper.rows() != rows_ || upper.cols() != cols_)
    throw Error(ErrorCode::InvalidArgument, "endpoint matrices differ in shape");
  entries_.reserve(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (lower(i, j) > upper(i, j)) {
        std::ostringstream msg;
        msg << "entry (" << i << ", " << j << "): lower bound " << lower(i, j)
            << " exceeds upper bound " << upper(i, j);
        throw Error(ErrorCode::InvalidArgument, msg.str());
      }
      entries_.emplace_back(lower(i, j), upper(i, j));
    }
  }
}

IntervalMatrix::IntervalMatrix(const Matrix& point) : IntervalMatrix(point, point) {}

IntervalMatrix::IntervalMatrix(std::initializer_list<std::initializer_list<Interval>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged interval matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

IntervalMatrix IntervalMatrix::from_mid_rad(const Matrix& mid, const Matrix& rad) {
  if (mid.rows() != rad.rows() || mid.cols() != rad.cols())
    throw Error(ErrorCode::InvalidArgument, "midpoint and radius differ in shape");
  IntervalMatrix a(mid.rows(), mid.cols());
  for (std::size_t k = 0; k < mid.size(); ++k)
    a.entries_[k] = Interval::from_mid_rad(mid.data()[k], rad.data()[k]);
  return a;
}

IntervalMatrix IntervalMatrix::column(std::span<const Interval> v) {
  IntervalMatrix a(v.size(), 1);
  std::copy(v.begin(), v.end(), a.entries_.begin());
  return a;
}

Matrix IntervalMatrix::lower() const {
  Matrix m(rows_, cols_);
  std::transform(entries_.begin(), entries_.end(), m.data().begin(),
                 [](const Interval& a) { return a.lo(); });
  return m;
}

Matrix IntervalMatrix::upper() const {
  Matrix m(rows_, cols_);
  std::transform(entries_.begin(), entries_.end(), m.data().begin(),
                 [](const Interval& a) { return a.hi(); });
  return m;
}

Matrix IntervalMatrix::mid() const {
  const Matrix lo = lower();
  const Matrix hi = upper();
  Matrix mid(rows_, cols_);
  Matrix rad(rows_, cols_);
  kernels::active().mid_rad(lo.data().data(), hi.data().data(), mid.data().data(),
                            rad.data().data(), lo.size());
  return mid;
}

Matrix IntervalMatrix::rad() const {
  const Matrix lo = lower();
  const Matrix hi = upper();
  Matrix mid(rows_, cols_);
  Matrix rad(rows_, cols_);
  kernels::active().mid_rad(lo.data().data(), hi.data().data(), mid.data().data(),
                            rad.data().data(), lo.size());
  return rad;
}

bool IntervalMatrix::is_point() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Interval& a) { return a.is_degenerate(); });
}

std::size_t IntervalMatrix::nondegenerate_count() const {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(), [](const Interval& a) { return !a.is_degenerate(); }));
}

bool IntervalMatrix::is_diagonally_interval() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_degenerate()) return false;
  return true;
}

bool IntervalMatrix::contains(const Matrix& a, double slack) const {
  if (a.rows() != rows_ || a.cols() != cols_) return false;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    const double x = a.data()[k];
    if (x < entries_[k].lo() - slack || x > entries_[k].hi() + slack) return false;
  }
  return true;
}

bool IntervalMatrix::contains(const IntervalMatrix& inner, double slack) const {
  if (inner.rows_ != rows_ || inner.cols_ != cols_) return false;
  return imx::contains(entries_, inner.entries_, slack);
}

IntervalMatrix IntervalMatrix::transpose() const {
  IntervalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, (*this)(i, j));
  return t;
}

std::ostream& operator<<(std::ostream& os, const IntervalMatrix& a) {
  os << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << a(i, j);
  }
  return os << ']';
}

SymmetricIntervalMatrix::SymmetricIntervalMatrix(IntervalMatrix base) : base_(std::move(base)) {
  if (!base_.is_square()) throw Error(ErrorCode::NotSymmetric, "symmetric interval matrix must be square");
  for (std::size_t i = 0; i < base_.rows(); ++i)
    for (std::size_t j = i + 1; j < base_.cols(); ++j)
      if (base_(i, j) != base_(j, i))
        throw Error(ErrorCode::NotSymmetric, "midpoint or radius is not symmetric");
}

bool SymmetricIntervalMatrix::contains(const Matrix& a, double slack) const {
  return is_symmetric(a) && base_.contains(a, slack);
}

SignVector::SignVector(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_)
    if (e != 1 && e != -1) throw Error(ErrorCode::InvalidArgument, "sign vector entries must be +1 or -1");
}

SignVector SignVector::checkerboard(std::size_t n) {
  std::vector<int> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = (i % 2 == 0) ? 1 : -1;
  return SignVector(std::move(e));
}

SignVector SignVector::flip_one(std::size_t n, std::size_t i) {
  std::vector<int> e(n, 1);
  e.at(i) = -1;
  return SignVector(std::move(e));
}

SignVector SignVector::ones(std::size_t n) { return SignVector(std::vector<int>(n, 1)); }

SignVector SignVector::from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<int> e(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1U) e[i] = -1;
  return SignVector(std::move(e));
}

SignVector SignVector::signs_of(std::span<const double> v) {
  std::vector<int> e(v.size());
  std::transform(v.begin(), v.end(), e.begin(), [](double x) { return x < 0.0 ? -1 : 1; });
  return SignVector(std::move(e));
}

Matrix signed_vertex(const IntervalMatrix& a, const SignVector& left, const SignVector& right,
                     int direction) {
  if (left.size() != a.rows() || right.size() != a.cols())
    throw Error(ErrorCode::InvalidArgument, "sign vector length mismatch");
  Matrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m(i, j) = direction * left[i] * right[j] > 0 ? a(i, j).hi() : a(i, j).lo();
  return m;
}

Matrix comparison_matrix(const Matrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::InvalidArgument, "comparison matrix needs a square matrix");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c(i, j) = i == j ? std::abs(a(i, j)) : -std::abs(a(i, j));
  return c;
}

Matrix comparison_matrix(const IntervalMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::InvalidArgument, "comparison matrix needs a square matrix");
  const Matrix lo = a.lower();
  const Matrix hi = a.upper();
  Matrix mig(a.rows(), a.cols());
  Matrix mag(a.rows(), a.cols());
  kernels::active().mig_mag(lo.data().data(), hi.data().data(), mig.data().data(),
                            mag.data().data(), lo.size());
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = i == j ? mig(i, j) : -mag(i, j);
  return c;
}

CheckerboardPair checkerboard_vertices(const IntervalMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::InvalidArgument, "checkerboard vertices need a square matrix");
  const SignVector s = SignVector::checkerboard(a.rows());
  return {signed_vertex(a, s, s, -1), signed_vertex(a, s, s, +1)};
}

Vector checkerboard_down(std::span<const Interval> b) {
  Vector v(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) v[i] = (i % 2 == 0) ? b[i].lo() : b[i].hi();
  return v;
}

Vector checkerboard_up(std::span<const Interval> b) {
  Vector v(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) v[i] = (i % 2 == 0) ? b[i].hi() : b[i].lo();
  return v;
}

bool checkerboard_leq(std::span<const double> u, std::span<const double> v, double tol) {
  if (u.size() != v.size()) throw Error(ErrorCode::InvalidArgument, "vector size mismatch");
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double s = (i % 2 == 0) ? 1.0 : -1.0;
    if (s * u[i] > s * v[i] + tol) return false;
  }
  return true;
}

IntervalVector checkerboard_box(std::span<const double> v1, std::span<const double> v2, double tol) {
  if (!checkerboard_leq(v1, v2, tol))
    throw Error(ErrorCode::InvalidArgument, "checkerboard box requires v1 <=* v2");
  IntervalVector box;
  box.reserve(v1.size());
  for (std::size_t i = 0; i < v1.size(); ++i)
    box.emplace_back(std::min(v1[i], v2[i]), std::max(v1[i], v2[i]));
  return box;
}

VertexSelector::VertexSelector(std::size_t rows, std::size_t cols, std::vector<bool> upper)
    : rows_(rows), cols_(cols), upper_(std::move(upper)) {
  if (upper_.size() != rows_ * cols_) throw Error(ErrorCode::InvalidArgument, "selector size mismatch");
}

Matrix VertexSelector::apply(const IntervalMatrix& a) const {
  if (a.rows() != rows_ || a.cols() != cols_)
    throw Error(ErrorCode::InvalidArgument, "selector shape mismatch");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = takes_upper(i, j) ? a(i, j).hi() : a(i, j).lo();
  return m;
}

VertexEnumerator::VertexEnumerator(const IntervalMatrix& a, unsigned cap_bits)
    : rows_(a.rows()), cols_(a.cols()), base_(a.lower()) {
  const auto entries = a.entries();
  for (std::size_t k = 0; k < entries.size(); ++k)
    if (!entries[k].is_degenerate()) free_.push_back({k, entries[k].lo(), entries[k].hi()});
  if (free_.size() > cap_bits || free_.size() >= 63) {
    throw Error(ErrorCode::CapExceeded, std::to_string(free_.size()) +
                                            " non-degenerate entries exceed the vertex cap of " +
                                            std::to_string(cap_bits));
  }
}

void VertexEnumerator::assign(std::uint64_t index, Matrix& out) const {
  auto data = out.data();
  for (std::size_t b = 0; b < free_.size(); ++b)
    data[free_[b].offset] = ((index >> b) & 1U) ? free_[b].hi : free_[b].lo;
}

Matrix VertexEnumerator::vertex(std::uint64_t index) const {
  if (index >= size()) throw Error(ErrorCode::InvalidArgument, "vertex index out of range");
  Matrix m = base_;
  assign(index, m);
  return m;
}

VertexSelector VertexEnumerator::selector(std::uint64_t index) const {
  std::vector<bool> upper(rows_ * cols_, false);
  for (std::size_t b = 0; b < free_.size(); ++b) upper[free_[b].offset] = (index >> b) & 1U;
  return VertexSelector(rows_, cols_, std::move(upper));
}

VertexEnumerator::iterator::iterator(const VertexEnumerator* owner, std::uint64_t index)
    : owner_(owner), index_(index) {
  if (index_ < owner_->size()) current_ = owner_->vertex(index_);
}

VertexEnumerator::iterator& VertexEnumerator::iterator::operator++() {
  ++index_;
  if (index_ < owner_->size()) owner_->assign(index_, current_);
  return *this;
}

}  // namespace imx
