#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "psos/law.hpp"
#include "psos/thresholds.hpp"
#include "test_support.hpp"

using psos::ModelParams;
using psos::Region;

namespace {

std::set<int> branches_of(const psos::SolutionSet& s) {
  std::set<int> b;
  for (const auto& pt : s.points) b.insert(pt.branch);
  return b;
}

}  // namespace

TEST_CASE("antiferromagnetic side is always unique") {
  auto s = psos::classify(ModelParams::make(1.5, 2.0));
  CHECK(s.count == 1);
  CHECK(s.region == Region::UNIQUE);
  CHECK(branches_of(s) == std::set<int>{1});
}

TEST_CASE("theta = 1: the single solution is (1,1)") {
  auto s = psos::classify(ModelParams::make(1.0, 5.0));
  REQUIRE(s.count == 1);
  CHECK(s.points[0].x == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(s.points[0].y == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("seven measures deep in the ferromagnetic region") {
  auto s = psos::classify(ModelParams::make(0.15, 0.1));
  CHECK(s.count == 7);
  CHECK(s.region == Region::Q_PLUS);
  CHECK(branches_of(s) == std::set<int>{1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("five measures where the cubic has one root but the quartet lives") {
  auto s = psos::classify(ModelParams::make(0.25, 2.0));
  CHECK(s.count == 5);
  CHECK(s.region == Region::Q_MINUS_CAP_P);
  CHECK(branches_of(s) == std::set<int>{1, 4, 5, 6, 7});
}

TEST_CASE("condition C1 can fail inside the nominal D>0 region") {
  // (0.6, 2.0): D > 0 yet both xi roots < 2; multi-start iteration confirms
  // a single fixed point there, so UNIQUE with the flag down is correct.
  auto s = psos::classify(ModelParams::make(0.6, 2.0));
  CHECK(s.count == 1);
  CHECK(s.region == Region::UNIQUE);
  REQUIRE(s.have_xi);
  CHECK(s.xi.bigD > 0.0);
  CHECK(!s.xi.c1_satisfied);
}

TEST_CASE("delta = 0 boundary: six measures, double root collapsed") {
  // land on the existence threshold theta2 at p = 0.1 by bisection
  psos::ThresholdQuery q;
  q.p = 0.1;
  q.quantity = psos::Quantity::DELTA;
  q.lo = 0.1;
  q.hi = 0.3;
  q.tol = 1e-15;
  double th2 = psos::find_threshold(q);
  auto s = psos::classify(ModelParams::make(th2, 0.1));
  CHECK(s.tolerance_ambiguity);
  CHECK(s.region == Region::Q_ZERO);
  CHECK(s.count == 6);
  CHECK(branches_of(s) == std::set<int>{1, 3, 4, 5, 6, 7});
}

TEST_CASE("D = 0 boundary: three measures") {
  // p = m(0.28) puts (theta,p) on the D = 0 curve
  double theta = 0.28;
  double pm = *psos::curve_m(theta);
  REQUIRE(pm > 0.0);
  auto s = psos::classify(ModelParams::make(theta, pm));
  CHECK(s.tolerance_ambiguity);
  CHECK(s.region == Region::BOUNDARY_mM);
  CHECK(s.count == 3);
  CHECK(branches_of(s) == std::set<int>{1, 4, 6});
}

TEST_CASE("count table and residuals over random draws") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> th(0.0, 2.0), pp(0.05, 12.0);
  for (int i = 0; i < 1500; ++i) {
    auto mp = ModelParams::make(1e-3 + th(rng), pp(rng));
    auto s = psos::classify(mp);
    CHECK((s.count == 1 || s.count == 3 || s.count == 5 || s.count == 6 ||
           s.count == 7));
    if (mp.theta >= 1.0) CHECK(s.count == 1);
    for (const auto& pt : s.points) {
      CHECK(pt.residual < 1e-10);
      CHECK(pt.x > 0.0);
      if (std::log(2.0 * mp.theta) - mp.log_theta_pow > -744.0)
        CHECK(pt.y > 0.0);  // below that the true y underflows to 0
    }
    // reciprocal pairing whenever the quartet exists
    auto b = branches_of(s);
    if (b.count(4) && b.count(7)) {
      double x4 = 0, x5 = 0, x6 = 0, x7 = 0;
      for (const auto& pt : s.points) {
        if (pt.branch == 4) x4 = pt.x;
        if (pt.branch == 5) x5 = pt.x;
        if (pt.branch == 6) x6 = pt.x;
        if (pt.branch == 7) x7 = pt.x;
      }
      CHECK(std::abs(x4 * x7 - 1.0) < 1e-12);
      CHECK(std::abs(x5 * x6 - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("branch_point fetches one branch or throws") {
  auto pt = psos::branch_point(ModelParams::make(0.15, 0.1), 5);
  CHECK(pt.branch == 5);
  CHECK_THROWS_AS(psos::branch_point(ModelParams::make(1.5, 2.0), 4),
                  psos::BranchAbsent);
}
