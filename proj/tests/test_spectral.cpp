#include <doctest.h>

#include <cmath>
#include <random>

#include "psos/spectral.hpp"
#include "test_support.hpp"

using psos::ModelParams;

TEST_CASE("uniform kernel at the free-field point") {
  auto mp = ModelParams::make(1.0, 2.0);
  auto kern = psos::build_kernel({1.0, 1.0, 1, 0.0}, mp);
  for (const auto& row : kern.P)
    for (double v : row) CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(kern.lambda1 == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(kern.lambda2 == doctest::Approx(0.0).epsilon(1e-14));
  auto ks = psos::kesten_stigum(kern, 2);
  CHECK(ks.eta == doctest::Approx(-1.0));
  CHECK(!ks.ks_nonextremal);
}

TEST_CASE("rows are stochastic and strictly positive at a solved point") {
  auto mp = ModelParams::make(0.5, 1.0);
  auto pt = psos::branch_point(mp, 1);
  auto kern = psos::build_kernel(pt, mp);
  for (const auto& row : kern.P) {
    double s = row[0] + row[1] + row[2];
    CHECK(std::abs(s - 1.0) < 1e-12);
    for (double v : row) CHECK(v > 0.0);
  }
}

TEST_CASE("a non-solution input trips the compact-form cross-check") {
  auto mp = ModelParams::make(0.5, 1.0);
  CHECK_THROWS_AS(psos::build_kernel({2.0, 3.0, 1, 1.0}, mp),
                  psos::StochasticityViolation);
}

TEST_CASE("deflated eigenvalues match the x=1 closed forms") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> th(0.0, 2.0), pp(0.05, 12.0);
  int checked = 0;
  for (int i = 0; i < 1500; ++i) {
    auto mp = ModelParams::make(0.02 + 1.96 * th(rng) / 2.0, pp(rng));
    auto cub = psos::solve_cubic_x1(mp);
    for (double y : cub.roots) {
      if (y <= 0.0) continue;
      psos::LawPoint pt{1.0, y, 1, 0.0};
      auto kern = psos::build_kernel(pt, mp);
      double l1 = psos::lambda1_x1(y, mp);
      double l2 = psos::lambda2_x1(y, mp);
      // deflation orders by modulus; compare as a pair
      double a1 = kern.lambda1, a2 = kern.lambda2;
      if (std::abs(l1) < std::abs(l2)) std::swap(l1, l2);
      CHECK(std::abs(a1 - l1) <= 1e-10 * std::max({1.0, std::abs(a1), std::abs(l1)}));
      CHECK(std::abs(a2 - l2) <= 1e-10 * std::max({1.0, std::abs(a2), std::abs(l2)}));
      ++checked;
    }
  }
  CHECK(checked >= 1000);
}

TEST_CASE("characteristic polynomial vanishes at {1, lambda1, lambda2}") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> th(0.02, 1.9), pp(0.05, 10.0);
  for (int i = 0; i < 300; ++i) {
    auto mp = ModelParams::make(th(rng), pp(rng));
    auto set = psos::classify(mp);
    for (const auto& pt : set.points) {
      auto kern = psos::build_kernel(pt, mp);
      CHECK(psos::char_poly_abs(kern, 1.0) < 1e-9);
      if (!kern.complex_pair) {
        CHECK(psos::char_poly_abs(kern, kern.lambda1) < 1e-9);
        CHECK(psos::char_poly_abs(kern, kern.lambda2) < 1e-9);
      }
      CHECK(kern.lambda_max <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("lambda2 closed form at theta=0.5, p=1 equals (1-theta^2)/Z1") {
  auto mp = ModelParams::make(0.5, 1.0);
  auto pt = psos::branch_point(mp, 1);
  double expect = (1.0 - 0.25) / (0.25 + 0.5 * pt.y * pt.y + 1.0);
  CHECK(psos::lambda2_x1(pt.y, mp) == doctest::Approx(expect).epsilon(1e-14));
  auto kern = psos::build_kernel(pt, mp);
  double got = (std::abs(kern.lambda1 - expect) < std::abs(kern.lambda2 - expect))
                   ? kern.lambda1
                   : kern.lambda2;
  CHECK(got == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("both eigenvalues vanish at theta=1") {
  auto mp = ModelParams::make(1.0, 4.0);
  CHECK(psos::lambda1_x1(1.0, mp) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(psos::lambda2_x1(1.0, mp) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("Kesten-Stigum fires on the paper's nonextremal cases") {
  {
    auto mp = ModelParams::make(1.2, 10.0);
    auto pt = psos::branch_point(mp, 1);
    auto ks = psos::kesten_stigum(psos::build_kernel(pt, mp), 2);
    CHECK(ks.eta > 0.0);
  }
  {
    auto mp = ModelParams::make(0.1, 10.0);
    auto pt = psos::branch_point(mp, 2);
    auto ks = psos::kesten_stigum(psos::build_kernel(pt, mp), 2);
    CHECK(ks.eta > 0.0);
  }
}

TEST_CASE("far antiferromagnetic kernel stays finite: eta -> 1") {
  auto mp = ModelParams::make(5.0, 10.0);  // theta_pow overflows to inf
  auto set = psos::classify(mp);
  REQUIRE(set.count == 1);
  auto kern = psos::build_kernel(set.points[0], mp);
  for (const auto& row : kern.P) {
    double s = row[0] + row[1] + row[2];
    CHECK(std::abs(s - 1.0) < 1e-12);
  }
  auto ks = psos::kesten_stigum(kern, 2);
  CHECK(ks.eta == doctest::Approx(1.0).epsilon(1e-9));
}
