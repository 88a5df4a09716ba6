#include <doctest.h>

#include <cmath>
#include <random>

#include "psos/law.hpp"
#include "psos/thresholds.hpp"
#include "psos/xi.hpp"
#include "test_support.hpp"

using psos::ModelParams;

TEST_CASE("xi quadratic requires theta < 1") {
  CHECK_THROWS_AS(psos::xi_analysis(ModelParams::make(1.0, 0.5)),
                  psos::DomainError);
  CHECK_THROWS_AS(psos::xi_analysis(ModelParams::make(1.7, 0.5)),
                  psos::DomainError);
}

TEST_CASE("discriminant sign: outside the D>0 region no roots") {
  // p = 0.05 < M(0.9) ~ 1.083, so (0.9, 0.05) lies outside the region
  auto xi = psos::xi_analysis(ModelParams::make(0.9, 0.05));
  CHECK(xi.bigD < 0.0);
  CHECK(!xi.xi1.has_value());
}

TEST_CASE("inside the region: two roots beyond 2") {
  auto xi = psos::xi_analysis(ModelParams::make(0.1, 0.1));
  CHECK(xi.bigD > 0.0);
  REQUIRE(xi.xi1.has_value());
  CHECK(*xi.xi1 > 2.0);
  CHECK(*xi.xi2 > *xi.xi1);
  CHECK(xi.c1_satisfied);
  // roots satisfy the quadratic
  for (double v : {*xi.xi1, *xi.xi2}) {
    double res = xi.a * v * v + xi.b * v + xi.c;
    double scale = std::max({1.0, std::abs(xi.a * v * v), std::abs(xi.b * v),
                             std::abs(xi.c)});
    CHECK(std::abs(res) / scale < 1e-12);
  }
}

TEST_CASE("b^2-4ac matches the factored discriminant form") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> th(0.0, 1.0), pp(0.05, 12.0);
  for (int i = 0; i < 4000; ++i) {
    auto mp = ModelParams::make(1e-3 + 0.996 * th(rng), pp(rng));
    auto xi = psos::xi_analysis(mp);
    double fact = psos::xi_discriminant_factored(mp);
    double scale = std::max({1.0, xi.b * xi.b, std::abs(4.0 * xi.a * xi.c)});
    CHECK(std::abs(xi.bigD - fact) <= 1e-9 * scale);
  }
}

TEST_CASE("factored form vanishes on l = 0, so bigD sits in the band") {
  // l(theta,p) = 0 at p = M(theta)
  double theta = 0.75;
  double Mv = *psos::curve_M(theta);
  auto xi = psos::xi_analysis(ModelParams::make(theta, Mv));
  double scale = std::max({1.0, xi.b * xi.b, std::abs(4.0 * xi.a * xi.c)});
  CHECK(std::abs(xi.bigD) < 1e-9 * scale);
}

TEST_CASE("radical root expressions agree with the stable quadratic") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> th(0.0, 1.0), pp(0.05, 12.0);
  int checked = 0;
  for (int i = 0; i < 4000; ++i) {
    auto mp = ModelParams::make(1e-3 + 0.996 * th(rng), pp(rng));
    auto xi = psos::xi_analysis(mp);
    if (!xi.xi1 || xi.boundary) continue;
    auto [ra, rb] = psos::xi_roots_radical_form(mp);
    double lo = std::min(ra, rb), hi = std::max(ra, rb);
    CHECK(psos_test::close_rel(lo, *xi.xi1, 1e-9));
    CHECK(psos_test::close_rel(hi, *xi.xi2, 1e-9));
    ++checked;
  }
  CHECK(checked > 500);
}

TEST_CASE("branch points: reciprocal pairs, ordering, residuals") {
  auto mp = ModelParams::make(0.1, 0.1);
  auto xi = psos::xi_analysis(mp);
  auto pts = psos::branch_points_4to7(mp, xi);
  REQUIRE(pts.size() == 4);
  CHECK(pts[0].branch == 4);
  CHECK(pts[3].branch == 7);
  double x4 = pts[0].x, x5 = pts[1].x, x6 = pts[2].x, x7 = pts[3].x;
  CHECK(std::abs(x4 * x7 - 1.0) < 1e-12);
  CHECK(std::abs(x5 * x6 - 1.0) < 1e-12);
  CHECK(x4 <= x5);
  CHECK(x5 < 1.0);
  CHECK(1.0 < x6);
  CHECK(x6 <= x7);
  for (const auto& pt : pts) CHECK(pt.residual < 1e-10);
}

TEST_CASE("no quartet when D < 0") {
  auto mp = ModelParams::make(0.7, 0.1);
  auto xi = psos::xi_analysis(mp);
  CHECK(xi.bigD < 0.0);
  auto pts = psos::branch_points_4to7(mp, xi);
  CHECK(pts.empty());
}

TEST_CASE("region curves") {
  // l vanishes on p = M(theta); q(theta,0) vanishes at (2 sqrt2 - 1)/7
  CHECK(psos::curve_l(0.75, *psos::curve_M(0.75)) ==
        doctest::Approx(0.0).epsilon(1e-10));
  double root = (2.0 * std::sqrt(2.0) - 1.0) / 7.0;
  CHECK(std::abs(psos::curve_q(root, 0.0)) < 1e-12);

  CHECK(psos::curve_m(0.3).has_value());
  CHECK(*psos::curve_m(0.3) > 0.0);
  CHECK(psos::curve_m(0.2).has_value());
  CHECK(std::isfinite(*psos::curve_m(0.2)));  // finite but negative here
  CHECK(!psos::curve_m(0.32).has_value());
  CHECK(!psos::curve_M(0.49).has_value());
  CHECK(!psos::curve_M(1.0).has_value());
  // M diverges toward theta = 1/2 from above
  CHECK(*psos::curve_M(0.500001) > *psos::curve_M(0.51));
  CHECK(*psos::curve_M(0.500001) > 4.0);
}
