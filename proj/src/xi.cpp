#include "psos/xi.hpp"

#include <cmath>

#include "psos/law.hpp"

namespace psos {

namespace {

// C2 slack: (1-T)x - T(x^2+1). Nonnegative is required for y to be real.
double c2_slack(double x, double T) {
  return (1.0 - T) * x - T * (x * x + 1.0);
}

}  // namespace

XiAnalysis xi_analysis(const ModelParams& params) {
  if (params.theta >= 1.0)
    throw DomainError("x != 1 branch requires theta < 1");
  const double theta = params.theta;
  const double T = params.theta_pow;
  const double q = 1.0 - T;

  XiAnalysis out;
  out.a = theta * T * q * q + (theta * theta - T) * (theta * theta - T);
  out.b = q * (2.0 * (theta * theta - T) - theta * q * (1.0 - 3.0 * T));
  out.c = q * q * (1.0 - 2.0 * theta * q);
  out.bigD = out.b * out.b - 4.0 * out.a * out.c;

  const double scale =
      std::max({1.0, out.b * out.b, std::abs(4.0 * out.a * out.c)});
  out.boundary = std::abs(out.bigD) <= kBoundaryBand * scale;

  if (out.bigD >= 0.0 || out.boundary) {
    double D = std::max(out.bigD, 0.0);
    double s = std::sqrt(D);
    // sign-matched-b quadratic formula: no subtractive cancellation
    double w = -0.5 * (out.b + std::copysign(s, out.b));
    double r1, r2;
    if (w != 0.0) {
      r1 = w / out.a;
      r2 = out.c / w;
    } else {
      r1 = r2 = 0.0;  // b = 0 and D = 0
    }
    out.xi1 = std::min(r1, r2);
    out.xi2 = std::max(r1, r2);
    out.c1_satisfied = (*out.xi1 > 2.0);
  }
  return out;
}

double xi_discriminant_factored(const ModelParams& params) {
  const double theta = params.theta;
  const double T = params.theta_pow;
  const double f1 = T - 1.0;
  return theta * theta * f1 * f1 * f1 * (T - 2.0 * theta + 1.0) *
         ((T + theta) * (T + theta) + 3.0 * theta * theta + 2.0 * theta - 1.0);
}

std::pair<double, double> xi_roots_radical_form(const ModelParams& params) {
  const double theta = params.theta;
  const double q = 1.0 - params.theta_pow;
  const double num = -3.0 * theta * q * q + 2.0 * (theta + 1.0) * q +
                     2.0 * (theta * theta - 1.0);
  const double den =
      (q - theta - 1.0) *
      (theta * q * q + (theta * theta - 1.0) * (q + theta - 1.0));
  const double rad =
      q * (q + 2.0 * theta - 2.0) *
      ((q - theta - 1.0) * (q - theta - 1.0) +
       (theta + 1.0) * (3.0 * theta - 1.0));
  const double s = std::sqrt(std::max(rad, 0.0));
  return {0.5 * q * (num - theta * s) / den, 0.5 * q * (num + theta * s) / den};
}

std::vector<LawPoint> branch_points_4to7(const ModelParams& params,
                                         XiAnalysis& xi) {
  std::vector<LawPoint> out;
  if (!xi.xi1 || !xi.c1_satisfied) return out;
  const double theta = params.theta;
  const double T = params.theta_pow;

  // x computed in reciprocal-stable pairs: the small root as 2/(xi+sqrt(..))
  // avoids the xi - sqrt(xi^2-4) cancellation for large xi.
  auto pair_for = [](double xi_v) {
    double s = std::sqrt(std::max(xi_v * xi_v - 4.0, 0.0));
    double big = 0.5 * (xi_v + s);
    double small = (big != 0.0) ? 1.0 / big : 0.0;
    return std::pair<double, double>(small, big);
  };
  auto [x4, x7] = pair_for(*xi.xi2);
  auto [x5, x6] = pair_for(*xi.xi1);
  const double xs[4] = {x4, x5, x6, x7};

  for (int i = 0; i < 4; ++i) {
    double slack = c2_slack(xs[i], T);
    xi.c2_satisfied[i] = slack >= 0.0;
    if (!xi.c2_satisfied[i]) continue;
    LawPoint pt;
    pt.branch = 4 + i;
    pt.x = xs[i];
    pt.y = std::sqrt(slack / theta);
    pt.residual = fixed_point_residual(pt.x, pt.y, params);
    out.push_back(pt);
  }
  return out;
}

std::optional<double> curve_m(double theta) {
  constexpr double kUpper = 0.30901699437494742;  // (sqrt(5)-1)/4
  if (!(theta > 0.0) || theta >= kUpper) return std::nullopt;
  double rad = (theta + 1.0) * (1.0 - 3.0 * theta);
  double arg = -theta + std::sqrt(rad);
  if (!(arg > 0.0)) return std::nullopt;
  return std::log(std::log(arg) / std::log(theta)) / std::log(2.0);
}

std::optional<double> curve_M(double theta) {
  if (theta <= 0.5 || theta >= 1.0) return std::nullopt;
  return std::log(std::log(2.0 * theta - 1.0) / std::log(theta)) /
         std::log(2.0);
}

double curve_l(double theta, double p) {
  if (!(theta > 0.0)) throw DomainError("curve_l: theta must be positive");
  double T = std::exp(std::exp2(p) * std::log(theta));
  return T - 2.0 * theta + 1.0;
}

double curve_q(double theta, double p) {
  if (!(theta > 0.0)) throw DomainError("curve_q: theta must be positive");
  double T = std::exp(std::exp2(p) * std::log(theta));
  return (T + theta) * (T + theta) + 3.0 * theta * theta + 2.0 * theta - 1.0;
}

RegionCurves region_curves(double theta) {
  return RegionCurves{curve_m(theta), curve_M(theta)};
}

}  // namespace psos
