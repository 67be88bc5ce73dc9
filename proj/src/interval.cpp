#include "imx/interval.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "imx/error.hpp"

namespace imx {

namespace {

void require_finite(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(ErrorCode::InvalidArgument, "interval endpoints must be finite");
  }
}

}  // namespace

Interval::Interval(double x) : lo_(x), hi_(x) { require_finite(x, x); }

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  require_finite(lo, hi);
  if (lo > hi) {
    std::ostringstream msg;
    msg << "lower bound " << lo << " exceeds upper bound " << hi;
    throw Error(ErrorCode::InvalidArgument, msg.str());
  }
}

Interval Interval::from_mid_rad(double mid, double rad) {
  if (rad < 0.0) throw Error(ErrorCode::InvalidArgument, "negative radius");
  return Interval(mid - rad, mid + rad);
}

double mig(const Interval& a) {
  if (a.lo() <= 0.0 && 0.0 <= a.hi()) return 0.0;
  return std::min(std::abs(a.lo()), std::abs(a.hi()));
}

double mag(const Interval& a) { return std::max(std::abs(a.lo()), std::abs(a.hi())); }

Interval operator-(const Interval& a) { return Interval(-a.hi(), -a.lo()); }

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(a.lo() + b.lo(), a.hi() + b.hi());
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval(a.lo() - b.hi(), a.hi() - b.lo());
}

Interval operator*(const Interval& a, const Interval& b) {
  const double p1 = a.lo() * b.lo();
  const double p2 = a.lo() * b.hi();
  const double p3 = a.hi() * b.lo();
  const double p4 = a.hi() * b.hi();
  return Interval(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains(0.0)) throw Error(ErrorCode::InvalidArgument, "interval divisor contains zero");
  const double q1 = a.lo() / b.lo();
  const double q2 = a.lo() / b.hi();
  const double q3 = a.hi() / b.lo();
  const double q4 = a.hi() / b.hi();
  return Interval(std::min({q1, q2, q3, q4}), std::max({q1, q2, q3, q4}));
}

Interval& operator+=(Interval& a, const Interval& b) { return a = a + b; }
Interval& operator-=(Interval& a, const Interval& b) { return a = a - b; }

Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval hull(const Interval& a, double x) {
  return Interval(std::min(a.lo(), x), std::max(a.hi(), x));
}

std::vector<double> lower(std::span<const Interval> v) {
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](const Interval& a) { return a.lo(); });
  return out;
}

std::vector<double> upper(std::span<const Interval> v) {
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](const Interval& a) { return a.hi(); });
  return out;
}

std::vector<double> mid(std::span<const Interval> v) {
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](const Interval& a) { return a.mid(); });
  return out;
}

std::vector<double> rad(std::span<const Interval> v) {
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](const Interval& a) { return a.rad(); });
  return out;
}

std::vector<double> mag(std::span<const Interval> v) {
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](const Interval& a) { return mag(a); });
  return out;
}

bool contains(std::span<const Interval> outer, std::span<const Interval> inner, double slack) {
  if (outer.size() != inner.size()) return false;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    if (inner[i].lo() < outer[i].lo() - slack || inner[i].hi() > outer[i].hi() + slack) return false;
  }
  return true;
}

bool contains(std::span<const Interval> outer, std::span<const double> x, double slack) {
  if (outer.size() != x.size()) return false;
  for (std::size_t i = 0; i < outer.size(); ++i) {
    if (x[i] < outer[i].lo() - slack || x[i] > outer[i].hi() + slack) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Interval& a) {
  return os << '[' << a.lo() << ", " << a.hi() << ']';
}

}  // namespace imx
