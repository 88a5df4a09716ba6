#include "psos/law.hpp"

#include <algorithm>
#include <cmath>

namespace psos {

const char* to_string(Region r) {
  switch (r) {
    case Region::UNIQUE: return "UNIQUE";
    case Region::BOUNDARY_mM: return "BOUNDARY_mM";
    case Region::Q_MINUS_CAP_P: return "Q_MINUS_CAP_P";
    case Region::Q_ZERO: return "Q_ZERO";
    case Region::Q_PLUS: return "Q_PLUS";
  }
  return "?";
}

double fixed_point_residual(double x, double y, const ModelParams& params) {
  const double theta = params.theta;
  const double T = params.theta_pow;
  const double LT = params.log_theta_pow;

  const bool ordinary = std::isfinite(T) && T < 1e250 && x > 1e-120 &&
                        x < 1e120 && y > 1e-120 && y < 1e120;
  double rhs_x, rhs_y;
  if (ordinary) {
    double den = T * x * x + theta * y * y + 1.0;
    rhs_x = (x * x + theta * y * y + T) / den;
    rhs_y = (theta * x * x + y * y + theta) / den;
  } else {
    const double lx = std::log(x), ly = std::log(y), lt = std::log(theta);
    double lden = detail::lse3(LT + 2.0 * lx, lt + 2.0 * ly, 0.0);
    rhs_x = std::exp(detail::lse3(2.0 * lx, lt + 2.0 * ly, LT) - lden);
    rhs_y = std::exp(detail::lse3(lt + 2.0 * lx, 2.0 * ly, lt) - lden);
  }
  double rx = std::abs(x - rhs_x) / std::max(1.0, x);
  double ry = std::abs(y - rhs_y) / std::max(1.0, y);
  return std::max(rx, ry);
}

SolutionSet classify(const ModelParams& params) {
  if (params.m != 2 || params.k != 2)
    throw DomainError("classify requires m = 2, k = 2");

  SolutionSet out;
  out.params = params;
  out.cubic = solve_cubic_x1(params);

  // x = 1 family. With three roots the branches are 1,2,3 descending; on the
  // delta = 0 boundary the two survivors carry labels 1 and 3.
  const auto& roots = out.cubic.roots;
  if (roots.size() == 3) {
    for (int i = 0; i < 3; ++i)
      out.points.push_back(
          {1.0, roots[i], i + 1, fixed_point_residual(1.0, roots[i], params)});
  } else if (roots.size() == 2) {
    out.points.push_back(
        {1.0, roots[0], 1, fixed_point_residual(1.0, roots[0], params)});
    out.points.push_back(
        {1.0, roots[1], 3, fixed_point_residual(1.0, roots[1], params)});
  } else if (!roots.empty()) {
    out.points.push_back(
        {1.0, roots[0], 1, fixed_point_residual(1.0, roots[0], params)});
  }

  // x != 1 family exists only for theta < 1.
  std::vector<LawPoint> quartet;
  if (params.theta < 1.0) {
    out.xi = xi_analysis(params);
    out.have_xi = true;
    if (out.xi.boundary && out.xi.c1_satisfied) {
      // D = 0: xi1 = xi2, the quartet degenerates to the pair {x4, x6}.
      double xi_v = *out.xi.xi2;
      double s = std::sqrt(std::max(xi_v * xi_v - 4.0, 0.0));
      double x6 = 0.5 * (xi_v + s), x4 = 1.0 / x6;
      const double T = params.theta_pow;
      for (auto [xv, br] : {std::pair{x4, 4}, std::pair{x6, 6}}) {
        double slack = (1.0 - T) * xv - T * (xv * xv + 1.0);
        if (slack < 0.0) continue;
        double yv = std::sqrt(slack / params.theta);
        quartet.push_back({xv, yv, br, fixed_point_residual(xv, yv, params)});
      }
    } else if (out.xi.bigD > 0.0 && !out.xi.boundary) {
      quartet = branch_points_4to7(params, out.xi);
    }
  }
  for (const auto& pt : quartet) out.points.push_back(pt);

  std::sort(out.points.begin(), out.points.end(),
            [](const LawPoint& a, const LawPoint& b) { return a.branch < b.branch; });
  out.count = static_cast<int>(out.points.size());

  // Region label. The count table holds whenever conditions C1/C2 do; a C1
  // failure inside the nominal D > 0 region collapses to UNIQUE (the quartet
  // does not exist) and stays flagged via xi.c1_satisfied.
  const bool on_delta0 = out.cubic.boundary;
  const bool on_d0 =
      out.have_xi && out.xi.boundary && out.xi.c1_satisfied && quartet.size() == 2;
  if (on_delta0) {
    out.region = Region::Q_ZERO;
    out.tolerance_ambiguity = true;
  } else if (out.cubic.delta > 0.0) {
    out.region = Region::Q_PLUS;
  } else if (on_d0) {
    out.region = Region::BOUNDARY_mM;
    out.tolerance_ambiguity = true;
  } else if (quartet.size() == 4) {
    out.region = Region::Q_MINUS_CAP_P;
  } else {
    out.region = Region::UNIQUE;
  }
  return out;
}

LawPoint branch_point(const ModelParams& params, int branch) {
  auto set = classify(params);
  for (const auto& pt : set.points)
    if (pt.branch == branch) return pt;
  throw BranchAbsent("branch " + std::to_string(branch) +
                     " does not exist at theta=" + std::to_string(params.theta) +
                     ", p=" + std::to_string(params.p));
}

}  // namespace psos
