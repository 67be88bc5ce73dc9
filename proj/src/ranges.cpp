#include "imx/ranges.hpp"

#include <algorithm>
#include <cmath>

#include "imx/classify.hpp"
#include "imx/error.hpp"

namespace imx {

namespace {

ScalarRange make_range(Strategy s, double lo, const Matrix& lo_at, double hi, const Matrix& hi_at) {
  ScalarRange r;
  r.strategy = s;
  r.lower = lo;
  r.upper = hi;
  r.lower_attainer = lo_at;
  r.upper_attainer = hi_at;
  return r;
}

/// Range over a two-element set {f(m1), f(m2)}.
ScalarRange from_pair(Strategy s, double v1, const Matrix& m1, double v2, const Matrix& m2) {
  return v1 <= v2 ? make_range(s, v1, m1, v2, m2) : make_range(s, v2, m2, v1, m1);
}

ScalarRange upper_only(Strategy s, double hi, const Matrix& hi_at) {
  ScalarRange r;
  r.strategy = s;
  r.upper = hi;
  r.upper_attainer = hi_at;
  return r;
}

[[noreturn]] void precondition(const std::string& what) {
  throw Error(ErrorCode::PreconditionViolated, what);
}

void require_square(const IntervalMatrix& a) {
  if (!a.is_square()) throw Error(ErrorCode::InvalidArgument, "interval matrix is not square");
}

double sym_tol(const Matrix& a) { return 1e-12 * std::max(1.0, max_abs(a)); }

double lambda_min(const Matrix& a) { return sym_eigenvalues(symmetrize(a)).back(); }
double lambda_max(const Matrix& a) { return sym_eigenvalues(symmetrize(a)).front(); }
double sigma_min(const Matrix& a) { return singular_values(a).back(); }
double sigma_max(const Matrix& a) { return singular_values(a).front(); }

/// Cofactor matrix C with C(i, j) = (-1)^(i+j) det(minor(i, j)); the
/// gradient of det at A.
Matrix cofactors(const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix c(n, n);
  if (n == 1) {
    c(0, 0) = 1.0;
    return c;
  }
  Matrix minor(n - 1, n - 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t q = 0, qq = 0; q < n; ++q) {
          if (q == j) continue;
          minor(rr, qq++) = a(r, q);
        }
        ++rr;
      }
      c(i, j) = (((i + j) % 2) ? -1.0 : 1.0) * det(minor);
    }
  return c;
}

bool strictly_signed(const Matrix& c, const Matrix& reference, double tol) {
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double x = c.data()[k];
    if (!(std::abs(x) > tol) || (x > 0) != (reference.data()[k] > 0)) return false;
  }
  return true;
}

std::optional<ScalarRange> det_sign_stable(const IntervalMatrix& a, unsigned cap_bits) {
  const std::size_t n = a.rows();
  const Matrix mid = a.mid();
  const double s = std::max(max_abs(a.lower()), max_abs(a.upper()));
  const double tol = kStrictRelTol * std::pow(s, static_cast<double>(n - 1));
  const Matrix ref = cofactors(mid);
  if (!strictly_signed(ref, ref, tol)) return std::nullopt;
  Strategy strategy = Strategy::SignStable;
  try {
    const VertexEnumerator en(a, cap_bits);
    bool ok = true;
    en.for_each([&](const Matrix& v, std::uint64_t) {
      if (ok) ok = strictly_signed(cofactors(v), ref, tol);
    });
    if (!ok) return std::nullopt;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
    strategy = Strategy::SignStableMidpointCertified;
  }
  Matrix lo_at(n, n), hi_at(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool increasing = ref(i, j) > 0;
      lo_at(i, j) = increasing ? a(i, j).lo() : a(i, j).hi();
      hi_at(i, j) = increasing ? a(i, j).hi() : a(i, j).lo();
    }
  return make_range(strategy, det(lo_at), lo_at, det(hi_at), hi_at);
}

bool lower_psd_diag_interval(const IntervalMatrix& a) {
  const Matrix mid = a.mid();
  const Matrix lo = a.lower();
  if (!is_diagonal(a.rad()) || !is_symmetric(mid, sym_tol(mid))) return false;
  return lambda_min(lo) >= -kStrictRelTol * std::max(max_abs(lo), max_abs(a.upper()));
}

Matrix inverse_m_endpoint(const IntervalMatrix& a, bool low_diagonal) {
  Matrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m(i, j) = ((i == j) == low_diagonal) ? a(i, j).lo() : a(i, j).hi();
  return m;
}

bool inverse_m_verified(const IntervalMatrix& a, unsigned cap_bits) {
  try {
    return is_inverse_m(a, cap_bits).yes();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CapExceeded) throw;
    return false;
  }
}

std::optional<SymmetricIntervalMatrix> as_symmetric(const IntervalMatrix& a) {
  try {
    return SymmetricIntervalMatrix(a);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotSymmetric) throw;
    return std::nullopt;
  }
}

}  // namespace

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::MMatrixEndpoints: return "M-matrix endpoints";
    case Strategy::TotallyPositiveCheckerboard: return "totally positive checkerboard vertices";
    case Strategy::InverseNonnegativeEndpoints: return "inverse-nonnegative endpoints";
    case Strategy::InverseMEndpoints: return "inverse M-matrix endpoints";
    case Strategy::DiagonallyIntervalPsd: return "diagonally interval, positive semidefinite";
    case Strategy::SignStable: return "sign-stable";
    case Strategy::SignStableMidpointCertified: return "sign-stable (midpoint-certified)";
    case Strategy::DiagonallyIntervalEigenvalues: return "diagonally interval eigenvalues";
    case Strategy::TotallyPositiveEigenvalues: return "totally positive eigenvalues";
    case Strategy::NonnegativeEndpoints: return "nonnegative endpoints";
    case Strategy::NonnegativeMidpointUpper: return "nonnegative midpoint, upper endpoint";
    case Strategy::InverseMTestMatrices: return "inverse M-matrix test matrices";
    case Strategy::PowerEndpoints: return "power endpoints";
    case Strategy::DiagonallyIntervalCube: return "diagonally interval cube";
  }
  return "?";
}

Interval ScalarRange::value() const {
  if (!lower || !upper) precondition("range has only one exact endpoint");
  return Interval(std::min(*lower, *upper), std::max(*lower, *upper));
}

const Matrix& MatrixRange::lower_attainer(std::size_t i, std::size_t j) const {
  return lower_attainers.size() == 1 ? lower_attainers[0] : lower_attainers.at(i * value.cols() + j);
}

const Matrix& MatrixRange::upper_attainer(std::size_t i, std::size_t j) const {
  return upper_attainers.size() == 1 ? upper_attainers[0] : upper_attainers.at(i * value.cols() + j);
}

ScalarRange det_range(const IntervalMatrix& a, unsigned cap_bits) {
  require_square(a);
  const Matrix lo = a.lower();
  const Matrix hi = a.upper();
  if (is_m_matrix(a).yes()) return make_range(Strategy::MMatrixEndpoints, det(lo), lo, det(hi), hi);
  if (is_totally_positive(a).yes()) {
    const auto [down, up] = checkerboard_vertices(a);
    return from_pair(Strategy::TotallyPositiveCheckerboard, det(down), down, det(up), up);
  }
  if (is_inverse_nonnegative(a).yes())
    return from_pair(Strategy::InverseNonnegativeEndpoints, det(lo), lo, det(hi), hi);
  if (inverse_m_verified(a, cap_bits)) {
    const Matrix a1 = inverse_m_endpoint(a, true);
    const Matrix a2 = inverse_m_endpoint(a, false);
    return from_pair(Strategy::InverseMEndpoints, det(a1), a1, det(a2), a2);
  }
  if (lower_psd_diag_interval(a))
    return make_range(Strategy::DiagonallyIntervalPsd, det(lo), lo, det(hi), hi);
  if (auto r = det_sign_stable(a, cap_bits)) return *r;
  throw Error(ErrorCode::NoApplicableTheorem, "no determinant range theorem applies");
}

std::vector<ScalarRange> eig_ranges_diag_interval(const SymmetricIntervalMatrix& s) {
  const IntervalMatrix& a = s.base();
  if (!is_diagonal(a.rad())) precondition("radius is not diagonal");
  const Matrix lo = a.lower();
  const Matrix hi = a.upper();
  const Vector l = sym_eigenvalues(symmetrize(lo));
  const Vector h = sym_eigenvalues(symmetrize(hi));
  std::vector<ScalarRange> out;
  for (std::size_t i = 0; i < l.size(); ++i)
    out.push_back(make_range(Strategy::DiagonallyIntervalEigenvalues, l[i], lo, h[i], hi));
  return out;
}

ScalarRange spectral_radius_range_diag_interval(const SymmetricIntervalMatrix& s) {
  const auto ranges = eig_ranges_diag_interval(s);
  const double top = *ranges.front().upper;
  const double bottom = -*ranges.back().lower;
  return top >= bottom
             ? upper_only(Strategy::DiagonallyIntervalEigenvalues, top, *ranges.front().upper_attainer)
             : upper_only(Strategy::DiagonallyIntervalEigenvalues, bottom, *ranges.back().lower_attainer);
}

ScalarRange lambda_min_inverse_nonneg(const SymmetricIntervalMatrix& s) {
  const IntervalMatrix& a = s.base();
  if (!is_inverse_nonnegative(a).yes()) precondition("interval matrix is not inverse nonnegative");
  const Matrix lo = a.lower();
  const Matrix hi = a.upper();
  return make_range(Strategy::InverseNonnegativeEndpoints, lambda_min(lo), lo, lambda_min(hi), hi);
}

std::vector<ScalarRange> eig_ranges_tp(const IntervalMatrix& a) {
  require_square(a);
  if (!is_totally_positive(a).yes()) precondition("interval matrix is not totally positive");
  const std::size_t n = a.rows();
  const Matrix lo = a.lower();
  const Matrix hi = a.upper();
  const auto [down, up] = checkerboard_vertices(a);
  const Matrix mid = a.mid();
  const Vector mid_ev = real_eigenvalues(mid);
  std::vector<ScalarRange> out;
  for (std::size_t i = 0; i < n; ++i) {
    const Strategy s = Strategy::TotallyPositiveEigenvalues;
    if (i == 0) {
      out.push_back(make_range(s, real_eigenvalues(lo)[0], lo, real_eigenvalues(hi)[0], hi));
    } else if (i + 1 == n) {
      out.push_back(make_range(s, real_eigenvalues(down)[i], down, real_eigenvalues(up)[i], up));
    } else {
      const Vector x = eigenvector(mid, mid_ev[i]);
      Vector y = eigenvector(mid.transpose(), mid_ev[i]);
      double yx = 0;
      for (std::size_t k = 0; k < n; ++k) yx += y[k] * x[k];
      if (yx < 0)
        for (double& v : y) v = -v;
      const double tol = 1e-10 * std::max(max_abs(x), max_abs(y));
      for (std::size_t k = 0; k < n; ++k)
        if (std::abs(x[k]) < tol || std::abs(y[k]) < tol)
          throw Error(ErrorCode::EigenvectorSignAmbiguity,
                      "midpoint eigenvector " + std::to_string(i + 1) + " has a vanishing entry");
      const SignVector sy = SignVector::signs_of(y);
      const SignVector sx = SignVector::signs_of(x);
      const Matrix a1 = signed_vertex(a, sy, sx, -1);
      const Matrix a2 = signed_vertex(a, sy, sx, +1);
      out.push_back(make_range(s, real_eigenvalues(a1)[i], a1, real_eigenvalues(a2)[i], a2));
    }
  }
  return out;
}

NonnegativeRanges nonneg_ranges(const IntervalMatrix& a) {
  require_square(a);
  const Matrix lo = a.lower();
  const Matrix hi = a.upper();
  const bool symmetric = as_symmetric(a).has_value();
  NonnegativeRanges r;
  if (is_nonnegative(lo)) {
    const Strategy s = Strategy::NonnegativeEndpoints;
    r.rho = make_range(s, spectral_radius(lo), lo, spectral_radius(hi), hi);
    r.sigma_max = make_range(s, sigma_max(lo), lo, sigma_max(hi), hi);
    if (symmetric) r.lambda_max = make_range(s, lambda_max(lo), lo, lambda_max(hi), hi);
    return r;
  }
  if (is_nonnegative(a.mid())) {
    const Strategy s = Strategy::NonnegativeMidpointUpper;
    r.rho = upper_only(s, spectral_radius(hi), hi);
    r.sigma_max = upper_only(s, sigma_max(hi), hi);
    if (symmetric) r.lambda_max = upper_only(s, lambda_max(hi), hi);
    return r;
  }
  precondition("midpoint is not nonnegative");
}

ScalarRange sigma_min_range(const IntervalMatrix& a) {
  require_square(a);
  if (is_inverse_nonnegative(a).yes()) {
    const Matrix lo = a.lower();
    const Matrix hi = a.upper();
    return from_pair(Strategy::InverseNonnegativeEndpoints, sigma_min(lo), lo, sigma_min(hi), hi);
  }
  if (is_totally_positive(a).yes()) {
    const auto [down, up] = checkerboard_vertices(a);
    return from_pair(Strategy::TotallyPositiveCheckerboard, sigma_min(down), down, sigma_min(up), up);
  }
  precondition("interval matrix is neither inverse nonnegative nor totally positive");
}

ScalarRange norm_range(const IntervalMatrix& a, Norm which, unsigned cap_bits) {
  const Matrix lo = a.lower();
  const Matrix hi = a.upper();
  if (is_nonnegative(lo))
    return make_range(Strategy::NonnegativeEndpoints, norm(lo, which, cap_bits), lo,
                      norm(hi, which, cap_bits), hi);
  if (is_nonnegative(a.mid()))
    return upper_only(Strategy::NonnegativeMidpointUpper, norm(hi, which, cap_bits), hi);
  precondition("midpoint is not nonnegative");
}

ScalarRange rr_range(const IntervalMatrix& a, unsigned cap_bits) {
  require_square(a);
  if (is_inverse_nonnegative(a).yes()) {
    const Matrix lo = a.lower();
    const Matrix hi = a.upper();
    return from_pair(Strategy::InverseNonnegativeEndpoints, regularity_radius(lo, cap_bits), lo,
                     regularity_radius(hi, cap_bits), hi);
  }
  if (is_totally_positive(a).yes()) {
    const auto [down, up] = checkerboard_vertices(a);
    return from_pair(Strategy::TotallyPositiveCheckerboard, regularity_radius(down, cap_bits), down,
                     regularity_radius(up, cap_bits), up);
  }
  precondition("interval matrix is neither inverse nonnegative nor totally positive");
}

MatrixRange inverse_bounds(const IntervalMatrix& a, unsigned cap_bits) {
  require_square(a);
  const std::size_t n = a.rows();
  MatrixRange r;
  if (is_inverse_nonnegative(a).yes()) {
    const Matrix lo = a.lower();
    const Matrix hi = a.upper();
    const Matrix a1 = inverse(hi);
    const Matrix a2 = inverse(lo);
    Matrix l(n, n), u(n, n);
    for (std::size_t k = 0; k < l.size(); ++k) {
      l.data()[k] = std::min(a1.data()[k], a2.data()[k]);
      u.data()[k] = std::max(a1.data()[k], a2.data()[k]);
    }
    r.value = IntervalMatrix(l, u);
    r.strategy = Strategy::InverseNonnegativeEndpoints;
    r.lower_attainers = {hi};
    r.upper_attainers = {lo};
    return r;
  }
  if (!inverse_m_verified(a, cap_bits)) precondition("interval matrix is neither inverse nonnegative nor inverse M");
  const std::vector<Matrix> tests = inverse_m_test_matrices(a);
  std::vector<Matrix> inverses;
  for (const Matrix& m : tests) inverses.push_back(inverse(m));
  Matrix lo(n, n), hi(n, n);
  r.lower_attainers.assign(n * n, tests[0]);
  r.upper_attainers.assign(n * n, tests[0]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t kmin = 0, kmax = 0;
      for (std::size_t k = 1; k < tests.size(); ++k) {
        if (inverses[k](i, j) < inverses[kmin](i, j)) kmin = k;
        if (inverses[k](i, j) > inverses[kmax](i, j)) kmax = k;
      }
      lo(i, j) = inverses[kmin](i, j);
      hi(i, j) = inverses[kmax](i, j);
      r.lower_attainers[i * n + j] = tests[kmin];
      r.upper_attainers[i * n + j] = tests[kmax];
    }
  r.value = IntervalMatrix(lo, hi);
  r.strategy = Strategy::InverseMTestMatrices;
  return r;
}

MatrixRange power_hull(const IntervalMatrix& a, unsigned k) {
  require_square(a);
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "power must be positive");
  const Matrix lo = a.lower();
  const Matrix hi = a.upper();
  if (!is_nonnegative(lo)) precondition("lower endpoint is not nonnegative");
  MatrixRange r;
  r.value = IntervalMatrix(power(lo, k), power(hi, k));
  r.strategy = Strategy::PowerEndpoints;
  r.lower_attainers = {lo};
  r.upper_attainers = {hi};
  return r;
}

}  // namespace imx
