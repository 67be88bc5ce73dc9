#include <cmath>

#include "doctest.h"
#include "imx/classify.hpp"
#include "imx/error.hpp"
#include "imx/linalg.hpp"
#include "imx/linsolve.hpp"
#include "support/brute.hpp"
#include "support/generators.hpp"
#include "support/random.hpp"

using namespace imx;

namespace {

const IntervalMatrix kInvNonneg(Matrix{{2, -1}, {-1, 2}}, Matrix{{3, 0}, {0, 3}});
const IntervalMatrix kTpExample{{Interval(0.9, 1.1), Interval(0.1, 0.2)},
                                {Interval(0.1, 0.2), Interval(0.9, 1.1)}};
const IntervalMatrix kHExample{{Interval(2, 4), Interval(-1, 0)}, {Interval(-1, 0), Interval(2, 4)}};

IntervalVector ivec(std::initializer_list<Interval> xs) { return IntervalVector(xs); }

void check_hull(const IntervalVector& got, const IntervalVector& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) {
    CHECK(std::abs(got[i].lo() - want[i].lo()) <= tol * std::max(1.0, std::abs(want[i].lo())));
    CHECK(std::abs(got[i].hi() - want[i].hi()) <= tol * std::max(1.0, std::abs(want[i].hi())));
  }
}

bool encloses(const IntervalVector& outer, const IntervalVector& inner, double tol = 1e-9) {
  for (std::size_t i = 0; i < outer.size(); ++i)
    if (outer[i].lo() > inner[i].lo() + tol || outer[i].hi() < inner[i].hi() - tol) return false;
  return true;
}

void check_samples(const IntervalLinearSystem& sys, const HullResult& r, testing::Rng& rng, int samples = 500) {
  for (int k = 0; k < samples; ++k) {
    const Vector x = solve(rng.member(sys.a), rng.member(sys.b));
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double slack = 1e-9 * std::max(1.0, std::abs(x[i]));
      CHECK(r.hull[i].lo() <= x[i] + slack);
      CHECK(x[i] <= r.hull[i].hi() + slack);
    }
  }
}

void check_against_oracle(const IntervalLinearSystem& sys, const HullResult& r) {
  const IntervalVector o = brute::solution_hull(sys.a, sys.b);
  if (r.exactness == Exactness::ExactHull)
    check_hull(r.hull, o, 1e-7);
  else
    CHECK(encloses(r.hull, o));
}

/// Attainer pairs reproduce the hull endpoints.
void check_attainers(const IntervalLinearSystem& sys, const HullResult& r) {
  REQUIRE(r.lower_matrix.size() == sys.size());
  for (std::size_t i = 0; i < sys.size(); ++i) {
    CHECK(sys.a.contains(r.lower_matrix[i], 1e-12));
    CHECK(sys.a.contains(r.upper_matrix[i], 1e-12));
    const double lo = solve(r.lower_matrix[i], r.lower_rhs[i])[i];
    const double hi = solve(r.upper_matrix[i], r.upper_rhs[i])[i];
    CHECK(lo == doctest::Approx(r.hull[i].lo()).epsilon(1e-9).scale(1));
    CHECK(hi == doctest::Approx(r.hull[i].hi()).epsilon(1e-9).scale(1));
  }
}

}  // namespace

TEST_CASE("system dimensions are validated") {
  CHECK_THROWS_AS(IntervalLinearSystem(kInvNonneg, ivec({Interval(1)})), Error);
  CHECK_THROWS_AS(IntervalLinearSystem(IntervalMatrix(2, 3), ivec({Interval(1), Interval(1)})), Error);
}

TEST_CASE("inverse nonnegative hull examples") {
  const IntervalLinearSystem pos(kInvNonneg, ivec({Interval(3, 6), Interval(0, 3)}));
  const HullResult r = hull_inverse_nonnegative(pos);
  check_hull(r.hull, ivec({Interval(1, 5), Interval(0, 4)}), 1e-12);
  CHECK(r.label == "inverse-nonnegative, case b̲ ≥ 0");
  CHECK(r.exactness == Exactness::ExactHull);
  check_against_oracle(pos, r);
  check_attainers(pos, r);

  const IntervalLinearSystem zero(kInvNonneg, ivec({Interval(-1, 1), Interval(-1, 1)}));
  const HullResult z = hull_inverse_nonnegative(zero);
  check_hull(z.hull, ivec({Interval(-1, 1), Interval(-1, 1)}), 1e-12);
  CHECK(z.label == "inverse-nonnegative, case 0 ∈ b");
  check_against_oracle(zero, z);

  const IntervalLinearSystem neg(kInvNonneg, ivec({Interval(-6, -3), Interval(-3, 0)}));
  const HullResult ng = hull_inverse_nonnegative(neg);
  check_hull(ng.hull, ivec({Interval(-5, -1), Interval(-4, 0)}), 1e-12);
  CHECK(ng.label == "inverse-nonnegative, case b̄ ≤ 0");

  const HullResult id = hull_inverse_nonnegative({IntervalMatrix(Matrix::identity(2)), ivec({Interval(1, 2), Interval(0, 3)})});
  check_hull(id.hull, ivec({Interval(1, 2), Interval(0, 3)}), 0);

  const IntervalLinearSystem mixed(kInvNonneg, ivec({Interval(1, 2), Interval(-2, -1)}));
  CHECK_THROWS_AS(hull_inverse_nonnegative(mixed), Error);
  try {
    hull_inverse_nonnegative(mixed);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoApplicableCase);
  }
  CHECK_THROWS_AS(hull_inverse_nonnegative({kTpExample, ivec({Interval(1), Interval(1)})}), Error);
}

TEST_CASE("inverse nonnegative hulls equal the oracle on random systems") {
  testing::Rng rng(101);
  for (int t = 0; t < 90; ++t) {
    const std::size_t n = 2 + t % 2;
    const IntervalLinearSystem sys(testing::random_inverse_nonneg_interval(rng, n), testing::random_rhs(rng, n, t % 3));
    const HullResult r = hull_inverse_nonnegative(sys);
    CHECK(r.exactness == Exactness::ExactHull);
    check_against_oracle(sys, r);
    check_attainers(sys, r);
    if (t < 10) check_samples(sys, r, rng);
  }
}

TEST_CASE("totally positive hull examples") {
  const IntervalLinearSystem point_b(kTpExample, ivec({Interval(1), Interval(0)}));
  const HullResult r = hull_totally_positive(point_b);
  CHECK(r.label == "totally positive, case ↓b ≥* 0");
  const auto [down, up] = checkerboard_vertices(kTpExample);
  const Vector v1 = solve(up, Vector{1.0, 0.0});
  const Vector v2 = solve(down, Vector{1.0, 0.0});
  CHECK(r.hull[0].lo() == doctest::Approx(v1[0]));
  CHECK(r.hull[0].hi() == doctest::Approx(v2[0]));
  CHECK(r.hull[1].lo() == doctest::Approx(v2[1]));
  CHECK(r.hull[1].hi() == doctest::Approx(v1[1]));
  check_against_oracle(point_b, r);
  check_attainers(point_b, r);

  const Matrix p{{2, 1}, {1, 2}};
  const HullResult pt = hull_totally_positive({IntervalMatrix(p), ivec({Interval(1), Interval(4)})});
  const Vector x = solve(p, Vector{1.0, 4.0});
  CHECK(pt.hull[0].lo() == doctest::Approx(x[0]));
  CHECK(pt.hull[1].hi() == doctest::Approx(x[1]));
  CHECK(pt.hull[0].rad() < 1e-12);
  CHECK(pt.label == "point system");

  const IntervalLinearSystem zero(kTpExample, ivec({Interval(-1, 1), Interval(-1, 1)}));
  const HullResult z = hull_totally_positive(zero);
  CHECK(z.label == "totally positive, case 0 ∈ b");
  check_against_oracle(zero, z);
  check_attainers(zero, z);

  CHECK_THROWS_AS(hull_totally_positive({kTpExample, ivec({Interval(1, 2), Interval(1, 2)})}), Error);
}

TEST_CASE("totally positive hulls equal the oracle on random systems") {
  testing::Rng rng(202);
  for (int t = 0; t < 90; ++t) {
    const std::size_t n = 2 + t % 2;
    const IntervalLinearSystem sys(testing::random_tp_interval(rng, n), testing::checkerboard_rhs(rng, n, t % 3));
    const HullResult r = hull_totally_positive(sys);
    check_against_oracle(sys, r);
    check_attainers(sys, r);
    if (t < 10) check_samples(sys, r, rng);
  }
}

TEST_CASE("hbrnk examples") {
  const IntervalVector b{Interval(1, 2), Interval(-1, 1)};
  const HullResult id = hull_hbrnk({IntervalMatrix(Matrix::identity(2)), b});
  check_hull(id.hull, b, 0);
  CHECK(id.exactness == Exactness::ExactHull);

  // midpoint not diagonal: an enclosure strictly wider than the hull
  const IntervalLinearSystem h(kHExample, ivec({Interval(0, 2), Interval(0, 2)}));
  const HullResult r = hull_hbrnk(h);
  CHECK(r.exactness == Exactness::Enclosure);
  const IntervalVector o = brute::solution_hull(h.a, h.b);
  check_hull(o, ivec({Interval(0, 2), Interval(0, 2)}), 1e-12);
  CHECK(encloses(r.hull, o));
  CHECK(r.hull[0].lo() == doctest::Approx(-2.0 / 3.0));

  const IntervalLinearSystem m(kInvNonneg, ivec({Interval(3, 6), Interval(0, 3)}));
  const HullResult mr = hull_hbrnk(m);
  CHECK(encloses(mr.hull, hull_inverse_nonnegative(m).hull));

  CHECK_THROWS_AS(hull_hbrnk({IntervalMatrix(Matrix{{1, 2}, {2, 1}}), b}), Error);
}

TEST_CASE("hbrnk is exact for diagonal midpoints and encloses otherwise") {
  testing::Rng rng(303);
  int exact = 0;
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 2 + t % 2;
    IntervalMatrix a = testing::random_h_interval(rng, n);
    if (t % 2 == 0) {
      Matrix mid = a.mid(), rad = a.rad();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) {
            rad(i, j) += std::abs(mid(i, j));
            mid(i, j) = 0.0;
          }
      a = IntervalMatrix::from_mid_rad(mid, rad);
      if (!is_h_matrix(a).yes()) continue;
    }
    const IntervalLinearSystem sys(a, testing::random_rhs(rng, n, 3));
    const HullResult r = hull_hbrnk(sys);
    exact += r.exactness == Exactness::ExactHull;
    check_against_oracle(sys, r);
    if (t < 10) check_samples(sys, r, rng);
  }
  CHECK(exact > 20);
}

TEST_CASE("gauss elimination") {
  const IntervalLinearSystem m(kInvNonneg, ivec({Interval(3, 6), Interval(0, 3)}));
  const HullResult g = interval_gauss_elim(m);
  CHECK(g.exactness == Exactness::ExactHull);
  check_hull(g.hull, ivec({Interval(1, 5), Interval(0, 4)}), 1e-12);

  const Matrix p{{4, 1, 0}, {1, 5, 2}, {0, 2, 6}};
  const Vector rhs{1, 2, 3};
  const HullResult pt = interval_gauss_elim({IntervalMatrix(p), ivec({Interval(1), Interval(2), Interval(3)})});
  const Vector x = solve(p, rhs);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(pt.hull[i].mid() == doctest::Approx(x[i]));
    CHECK(pt.hull[i].rad() < 1e-12);
  }

  const IntervalLinearSystem h(kHExample, ivec({Interval(0, 2), Interval(-1, 2)}));
  const HullResult hr = interval_gauss_elim(h);
  CHECK(encloses(hr.hull, brute::solution_hull(h.a, h.b)));

  CHECK_THROWS_AS(interval_gauss_elim({IntervalMatrix(Matrix{{1, 2}, {2, 1}}), ivec({Interval(1), Interval(1)})}),
                  Error);
}

TEST_CASE("gauss elimination on random M and H systems") {
  testing::Rng rng(404);
  for (int t = 0; t < 120; ++t) {
    const std::size_t n = 2 + t % 2;
    const IntervalLinearSystem m(testing::random_m_interval(rng, n), testing::random_rhs(rng, n, t % 3));
    const HullResult g = interval_gauss_elim(m);
    CHECK(g.exactness == Exactness::ExactHull);
    check_against_oracle(m, g);

    const IntervalLinearSystem h(testing::random_h_interval(rng, n), testing::random_rhs(rng, n, 3));
    const HullResult gh = interval_gauss_elim(h);
    check_against_oracle(h, gh);
    if (t < 10) check_samples(h, gh, rng);
  }
}

TEST_CASE("interval lu") {
  const IntervalLu id = interval_lu(IntervalMatrix(Matrix::identity(3)));
  CHECK(id.l == IntervalMatrix(Matrix::identity(3)));
  CHECK(id.u == IntervalMatrix(Matrix::identity(3)));

  const Matrix p{{4, 1, 0}, {1, 5, 2}, {0, 2, 6}};
  const IntervalLu pl = interval_lu(IntervalMatrix(p));
  CHECK(pl.l.is_point());
  CHECK(pl.u.is_point());
  const Matrix prod = pl.l.mid() * pl.u.mid();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(prod(i, j) == doctest::Approx(p(i, j)));
  CHECK(pl.slack <= 1e-14);

  const IntervalLu h = interval_lu(kHExample);
  CHECK(h.slack <= 0.0);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(h.l(i, i) == Interval(1.0));
    for (std::size_t j = i + 1; j < 2; ++j) CHECK(h.l(i, j) == Interval(0.0));
  }

  testing::Rng rng(505);
  for (int t = 0; t < 50; ++t) {
    const IntervalMatrix a = testing::random_h_interval(rng, 2 + t % 3);
    CHECK(interval_lu(a).slack <= 1e-12);
  }
}

TEST_CASE("inverse M hull examples") {
  const Matrix p = (1.0 / 3.0) * Matrix{{2, 1}, {1, 2}};
  const IntervalLinearSystem sys(IntervalMatrix(p), ivec({Interval(-1, 1), Interval(-1, 1)}));
  const HullResult r = hull_bounds_inverse_m(sys);
  check_hull(r.hull, ivec({Interval(-3, 3), Interval(-3, 3)}), 1e-12);
  CHECK(r.lower_rhs[0] == Vector{-1, 1});
  CHECK(r.upper_rhs[0] == Vector{1, -1});
  check_attainers(sys, r);

  const HullResult pt = hull_bounds_inverse_m({IntervalMatrix(p), ivec({Interval(1), Interval(2)})});
  CHECK(pt.hull[0].lo() == doctest::Approx(0.0).scale(1));
  CHECK(pt.hull[1].hi() == doctest::Approx(3.0));

  const IntervalMatrix fam = IntervalMatrix::from_mid_rad(p, Matrix(2, 2, 0.02));
  const IntervalLinearSystem f(fam, ivec({Interval(-1, 2), Interval(0.5, 1)}));
  const HullResult fr = hull_bounds_inverse_m(f);
  check_against_oracle(f, fr);
  check_attainers(f, fr);

  CHECK_THROWS_AS(hull_bounds_inverse_m({kInvNonneg, ivec({Interval(1), Interval(1)})}), Error);
}

TEST_CASE("inverse M hulls equal the oracle on random systems") {
  testing::Rng rng(606);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + t % 2;
    const IntervalLinearSystem sys(testing::random_inverse_m_interval(rng, n), testing::random_rhs(rng, n, 3));
    const HullResult r = hull_bounds_inverse_m(sys);
    check_against_oracle(sys, r);
    check_attainers(sys, r);
    if (t < 5) check_samples(sys, r, rng);
  }
}

TEST_CASE("methods agree where they all apply") {
  testing::Rng rng(707);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + t % 2;
    const IntervalLinearSystem sys(testing::random_m_interval(rng, n), testing::random_rhs(rng, n, t % 3));
    const HullResult inn = hull_inverse_nonnegative(sys);
    const HullResult ge = interval_gauss_elim(sys);
    check_hull(ge.hull, inn.hull, 1e-7);
    const HullResult hb = hull_hbrnk(sys);
    if (hb.exactness == Exactness::ExactHull)
      check_hull(hb.hull, inn.hull, 1e-7);
    else
      CHECK(encloses(hb.hull, inn.hull));
  }
}
