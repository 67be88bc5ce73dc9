#pragma once

#include <iosfwd>
#include <span>
#include <vector>

namespace imx {

/// Closed, bounded real interval [lo, hi].
///
/// Endpoint arithmetic is exact-formula floating point; no directed rounding
/// is applied, so results are accurate to a few ulps rather than rigorous.
class Interval {
 public:
  constexpr Interval() = default;
  /// Degenerate interval [x, x].
  Interval(double x);  // NOLINT(google-explicit-constructor)
  Interval(double lo, double hi);

  static Interval from_mid_rad(double mid, double rad);

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double mid() const { return 0.5 * (lo_ + hi_); }
  double rad() const { return 0.5 * (hi_ - lo_); }
  double width() const { return hi_ - lo_; }

  bool is_degenerate() const { return lo_ == hi_; }
  bool contains(double x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

using IntervalVector = std::vector<Interval>;

/// Mignitude: min{|x| : x in a}.
double mig(const Interval& a);
/// Magnitude: max{|x| : x in a}.
double mag(const Interval& a);

Interval operator-(const Interval& a);
Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
/// Throws InvalidArgument if b contains zero.
Interval operator/(const Interval& a, const Interval& b);

Interval& operator+=(Interval& a, const Interval& b);
Interval& operator-=(Interval& a, const Interval& b);

/// Smallest interval containing both operands.
Interval hull(const Interval& a, const Interval& b);
/// Widen `a` to include x.
Interval hull(const Interval& a, double x);

std::vector<double> lower(std::span<const Interval> v);
std::vector<double> upper(std::span<const Interval> v);
std::vector<double> mid(std::span<const Interval> v);
std::vector<double> rad(std::span<const Interval> v);
std::vector<double> mag(std::span<const Interval> v);

/// True if every component of `outer` contains the matching component of
/// `inner`, with an absolute slack.
bool contains(std::span<const Interval> outer, std::span<const Interval> inner, double slack = 0.0);
bool contains(std::span<const Interval> outer, std::span<const double> x, double slack = 0.0);

std::ostream& operator<<(std::ostream& os, const Interval& a);

}  // namespace imx
