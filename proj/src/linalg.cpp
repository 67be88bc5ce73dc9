#include "imx/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "imx/error.hpp"
#include "imx/kernels.hpp"

namespace imx {

namespace {

void require_square(const Matrix& a, const char* what) {
  if (!a.is_square()) throw Error(ErrorCode::InvalidArgument, std::string(what) + " needs a square matrix");
}

double inf_norm(const Matrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) m = std::max(m, kernels::abs_sum(a.row(i)));
  return m;
}

// Column-major copy so column operations hit contiguous memory.
std::vector<Vector> columns_of(const Matrix& a) {
  std::vector<Vector> cols(a.cols(), Vector(a.rows()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) cols[j][i] = a(i, j);
  return cols;
}

}  // namespace

double pivot_tolerance(const Matrix& a) { return kPivotRelTol * inf_norm(a); }

LuFactorization lu_factor(const Matrix& a) {
  require_square(a, "LU factorization");
  const std::size_t n = a.rows();
  LuFactorization f{a, std::vector<std::size_t>(n), 1, std::numeric_limits<double>::infinity(), false};
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
  const double tol = pivot_tolerance(a);
  Matrix& lu = f.lu;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(p, k))) p = i;
    if (p != k) {
      std::swap_ranges(lu.row(k).begin(), lu.row(k).end(), lu.row(p).begin());
      std::swap(f.perm[k], f.perm[p]);
      f.sign = -f.sign;
    }
    const double pivot = lu(k, k);
    f.min_pivot = std::min(f.min_pivot, std::abs(pivot));
    if (std::abs(pivot) <= tol) {
      f.singular = true;
      if (pivot == 0.0) continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double l = lu(i, k) / pivot;
      lu(i, k) = l;
      if (l != 0.0) {
        kernels::axpy(-l, lu.row(k).subspan(k + 1), lu.row(i).subspan(k + 1));
      }
    }
  }
  if (n == 0) f.min_pivot = 0.0;
  return f;
}

double det(const Matrix& a) {
  require_square(a, "determinant");
  const LuFactorization f = lu_factor(a);
  double d = f.sign;
  for (std::size_t i = 0; i < a.rows(); ++i) d *= f.lu(i, i);
  return d;
}

namespace {

Vector lu_solve(const LuFactorization& f, std::span<const double> b) {
  const std::size_t n = f.lu.rows();
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[f.perm[i]];
  for (std::size_t i = 0; i < n; ++i) {
    x[i] -= kernels::dot(f.lu.row(i).first(i), std::span<const double>(x).first(i));
  }
  for (std::size_t i = n; i-- > 0;) {
    const auto tail = f.lu.row(i).subspan(i + 1);
    x[i] = (x[i] - kernels::dot(tail, std::span<const double>(x).subspan(i + 1))) / f.lu(i, i);
  }
  return x;
}

}  // namespace

Vector solve(const Matrix& a, std::span<const double> b) {
  require_square(a, "solve");
  if (b.size() != a.rows()) throw Error(ErrorCode::InvalidArgument, "right-hand side size mismatch");
  const LuFactorization f = lu_factor(a);
  if (f.singular) throw Error(ErrorCode::SingularMatrix, "pivot below tolerance in solve");
  return lu_solve(f, b);
}

Matrix inverse(const Matrix& a) {
  require_square(a, "inverse");
  const std::size_t n = a.rows();
  const LuFactorization f = lu_factor(a);
  if (f.singular) throw Error(ErrorCode::SingularMatrix, "pivot below tolerance in inverse");
  Matrix inv(n, n);
  Vector e(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(e.begin(), e.end(), 0.0);
    e[j] = 1.0;
    const Vector col = lu_solve(f, e);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

SymmetricEigen sym_eigen(const Matrix& a) {
  require_square(a, "symmetric eigensolver");
  const std::size_t n = a.rows();
  const double scale = std::max(1.0, max_abs(a));
  if (!is_symmetric(a, 1e-12 * scale)) throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric");

  Matrix w = symmetrize(a);
  Matrix v = Matrix::identity(n);
  const double eps = std::numeric_limits<double>::epsilon();
  double frob = 0.0;
  for (double x : w.data()) frob += x * x;
  frob = std::sqrt(frob);

  constexpr int kMaxSweeps = 100;
  bool converged = n <= 1;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += w(p, q) * w(p, q);
    if (std::sqrt(off) <= eps * frob * 1e-2 || off == 0.0) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = w(p, q);
        if (apq == 0.0) continue;
        const double theta = (w(q, q) - w(p, p)) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t r = 0; r < n; ++r) {
          const double wrp = w(r, p);
          const double wrq = w(r, q);
          w(r, p) = c * wrp - s * wrq;
          w(r, q) = s * wrp + c * wrq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double wpr = w(p, r);
          const double wqr = w(q, r);
          w(p, r) = c * wpr - s * wqr;
          w(q, r) = s * wpr + c * wqr;
        }
        w(p, q) = 0.0;
        w(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }
  if (!converged) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += w(p, q) * w(p, q);
    if (std::sqrt(off) > 1e-12 * frob) throw Error(ErrorCode::NonConvergence, "Jacobi sweeps exhausted");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&w](std::size_t i, std::size_t j) { return w(i, i) > w(j, j); });
  SymmetricEigen out{Vector(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = w(order[k], order[k]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

Vector sym_eigenvalues(const Matrix& a) { return sym_eigen(a).values; }

Vector singular_values(const Matrix& a) {
  const Matrix& src = a;
  const bool wide = a.rows() < a.cols();
  std::vector<Vector> cols = columns_of(wide ? src.transpose() : src);
  const std::size_t n = cols.size();
  const double eps = std::numeric_limits<double>::epsilon();

  constexpr int kMaxSweeps = 80;
  bool rotated = true;
  for (int sweep = 0; sweep < kMaxSweeps && rotated; ++sweep) {
    rotated = false;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double alpha = kernels::dot(cols[p], cols[p]);
        const double beta = kernels::dot(cols[q], cols[q]);
        const double gamma = kernels::dot(cols[p], cols[q]);
        if (gamma == 0.0 || std::abs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        double t = 1.0 / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        if (zeta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        Vector& cp = cols[p];
        Vector& cq = cols[q];
        for (std::size_t i = 0; i < cp.size(); ++i) {
          const double x = cp[i];
          const double y = cq[i];
          cp[i] = c * x - s * y;
          cq[i] = s * x + c * y;
        }
      }
    }
  }
  if (rotated) throw Error(ErrorCode::NonConvergence, "one-sided Jacobi SVD sweeps exhausted");

  Vector sigma(n);
  for (std::size_t j = 0; j < n; ++j) sigma[j] = std::sqrt(kernels::dot(cols[j], cols[j]));
  std::sort(sigma.begin(), sigma.end(), std::greater<>());
  return sigma;
}

double norm(const Matrix& a, Norm which, unsigned cap_bits) {
  switch (which) {
    case Norm::Inf:
      return inf_norm(a);
    case Norm::One: {
      double m = 0.0;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
        m = std::max(m, s);
      }
      return m;
    }
    case Norm::Frobenius:
      return std::sqrt(kernels::dot(a.data(), a.data()));
    case Norm::Chebyshev:
      return max_abs(a);
    case Norm::Inf1: {
      const std::size_t n = a.cols();
      if (n == 0 || a.rows() == 0) return 0.0;
      if (n > cap_bits || n >= 63) {
        throw Error(ErrorCode::CapExceeded, "inf,1-norm enumeration over " + std::to_string(n) +
                                                " sign bits exceeds cap " + std::to_string(cap_bits));
      }
      // ||M(-z)||_1 = ||Mz||_1, so z_0 = +1 is fixed and a Gray code walks the
      // remaining n-1 signs; each step is one column update of y = Mz.
      const std::vector<Vector> cols = columns_of(a);
      std::vector<int> z(n, 1);
      auto fresh = [&]() {
        Vector y(a.rows(), 0.0);
        for (std::size_t j = 0; j < n; ++j) kernels::axpy(static_cast<double>(z[j]), cols[j], y);
        return y;
      };
      Vector y = fresh();
      double best = kernels::abs_sum(y);
      const std::uint64_t steps = std::uint64_t{1} << (n - 1);
      for (std::uint64_t g = 1; g < steps; ++g) {
        const unsigned bit = static_cast<unsigned>(__builtin_ctzll(g));
        const std::size_t j = bit + 1;
        kernels::axpy(-2.0 * z[j], cols[j], y);
        z[j] = -z[j];
        if ((g & 63U) == 0) y = fresh();
        best = std::max(best, kernels::abs_sum(y));
      }
      return best;
    }
  }
  return 0.0;
}

double regularity_radius(const Matrix& a, unsigned cap_bits) {
  return 1.0 / norm(inverse(a), Norm::Inf1, cap_bits);
}

}  // namespace imx
