#include <doctest.h>

#include <algorithm>
#include <random>

#include "psos/cubic.hpp"
#include "test_support.hpp"

using psos::ModelParams;

TEST_CASE("discriminant at theta=1 is -72 for any p") {
  // hand evaluation: (1/27)(4*(-5)^3 - 38^2)
  CHECK(psos::cubic_discriminant(ModelParams::make(1.0, 0.5)) ==
        doctest::Approx(-72.0).epsilon(1e-12));
  CHECK(psos::cubic_discriminant(ModelParams::make(1.0, 7.3)) ==
        doctest::Approx(-72.0).epsilon(1e-12));
}

TEST_CASE("discriminant sign picks the root count") {
  CHECK(psos::cubic_discriminant(ModelParams::make(0.15, 0.1)) > 0.0);
  CHECK(psos::cubic_discriminant(ModelParams::make(0.1, 0.1)) > 0.0);
  CHECK(psos::cubic_discriminant(ModelParams::make(0.3, 0.1)) < 0.0);

  CHECK(psos::solve_cubic_x1(ModelParams::make(0.1, 0.1)).roots.size() == 3);
  CHECK(psos::solve_cubic_x1(ModelParams::make(0.3, 0.1)).roots.size() == 1);
}

TEST_CASE("theta=1 cubic factors as (y-1)(y^2+2)") {
  for (double p : {0.1, 1.0, 5.0}) {
    auto an = psos::solve_cubic_x1(ModelParams::make(1.0, p));
    REQUIRE(an.roots.size() == 1);
    CHECK(an.roots[0] == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("roots are positive, descending, and satisfy the cubic") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> th(0.0, 2.0), pp(0.05, 12.0);
  int three = 0;
  for (int i = 0; i < 2000; ++i) {
    auto mp = ModelParams::make(1e-3 + th(rng), pp(rng));
    auto an = psos::solve_cubic_x1(mp);
    REQUIRE(!an.roots.empty());
    double prev = 1e308;
    for (double r : an.roots) {
      // y may round to a subnormal/0 only in the extreme overflow regime
      if (std::log(2.0 * mp.theta) - mp.log_theta_pow > -744.0) CHECK(r > 0.0);
      CHECK(r <= prev);
      prev = r;
      CHECK(psos::cubic_residual(r, mp) < 1e-10);
    }
    if (an.roots.size() == 3) ++three;
  }
  CHECK(three > 0);
}

TEST_CASE("root count matches sign(delta) against the oracle") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> th(0.0, 2.0), pp(0.05, 12.0);
  for (int i = 0; i < 3000; ++i) {
    auto mp = ModelParams::make(1e-3 + th(rng), pp(rng));
    auto an = psos::solve_cubic_x1(mp);
    double band = 1e-12 * std::max(1.0, std::abs(an.delta));
    if (std::abs(an.delta) < band || an.boundary) continue;  // boundary sliver
    if (an.delta > 0.0)
      CHECK(an.roots.size() == 3);
    else
      CHECK(an.roots.size() == 1);
  }
}

TEST_CASE("Cardano agrees with the Durand-Kerner oracle") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> th(0.0, 2.0), pp(0.05, 12.0);
  int compared = 0;
  for (int i = 0; i < 3000; ++i) {
    auto mp = ModelParams::make(1e-3 + th(rng), pp(rng));
    if (std::abs(mp.log_theta_pow) > 500.0) continue;  // oracle needs plain doubles
    auto an = psos::solve_cubic_x1(mp);
    auto oracle = psos_test::cubic_roots_oracle(mp);
    REQUIRE(an.roots.size() == oracle.size());
    for (std::size_t k = 0; k < oracle.size(); ++k)
      CHECK(psos_test::close_rel(an.roots[k], oracle[k], 1e-10));
    ++compared;
  }
  CHECK(compared > 1000);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(ModelParams::make(-1.0, 0.5), psos::DomainError);
  CHECK_THROWS_AS(ModelParams::make(0.0, 0.5), psos::DomainError);
  CHECK_THROWS_AS(ModelParams::make(0.5, 0.0), psos::DomainError);
}

TEST_CASE("far antiferromagnetic root: y1 ~ 2 theta / (T+1)") {
  auto mp = ModelParams::make(1.9, 10.0);  // T ~ 3e285
  auto an = psos::solve_cubic_x1(mp);
  REQUIRE(an.roots.size() == 1);
  CHECK(psos_test::close_rel(an.roots[0], 2.0 * mp.theta / (mp.theta_pow + 1.0),
                             1e-12));
  CHECK(psos::cubic_residual(an.roots[0], mp) < 1e-12);
}
