#pragma once

#include <optional>
#include <vector>

#include "psos/params.hpp"

namespace psos {

struct LawPoint {
  double x = 1.0;
  double y = 1.0;
  int branch = 0;  // 1..3: x=1 cubic roots (descending); 4..7: x != 1
  double residual = 0.0;
};

// Quadratic a*xi^2 + b*xi + c = 0 in xi = x + 1/x governing the x != 1
// branch (theta < 1 only).
struct XiAnalysis {
  double a = 0.0, b = 0.0, c = 0.0;
  double bigD = 0.0;  // b^2 - 4ac
  std::optional<double> xi1, xi2;  // xi1 <= xi2, present when bigD >= 0
  bool boundary = false;           // |bigD| within the ambiguity band
  bool c1_satisfied = false;       // 2 < xi1 <= xi2
  bool c2_satisfied[4] = {false, false, false, false};  // branches 4..7
};

// Coefficients, discriminant and roots of the xi quadratic. Throws
// DomainError for theta >= 1 (the x != 1 branch cannot exist there).
XiAnalysis xi_analysis(const ModelParams& params);

// Factored form of the xi discriminant,
//   theta^2 (T-1)^3 (T-2theta+1) ((T+theta)^2+3theta^2+2theta-1),
// used as a sign cross-check of b^2-4ac.
double xi_discriminant_factored(const ModelParams& params);

// Paper-form root expressions for the xi quadratic (radical combination over
// q = 1-theta^(2^p)); returned unsorted as written. Cross-check only -- the
// production roots come from the sign-safe quadratic formula.
std::pair<double, double> xi_roots_radical_form(const ModelParams& params);

// Branch points 4..7: x_i from xi via the reciprocal-stable split
// (x and 1/x computed from the same radical, so x4*x7 = x5*x6 = 1 to
// rounding), y_i = sqrt(((1-T)x - T(x^2+1))/theta). Branches whose C2 check
// fails are omitted (flagged in xi.c2_satisfied). Empty when C1 fails.
std::vector<LawPoint> branch_points_4to7(const ModelParams& params,
                                         XiAnalysis& xi);

// Region curves. m(theta) is defined on (0, (sqrt5-1)/4), M(theta) on
// (1/2, 1); outside their domains nullopt is returned.
std::optional<double> curve_m(double theta);
std::optional<double> curve_M(double theta);

// l(theta,p) = theta^(2^p) - 2 theta + 1 and
// q(theta,p) = (theta^(2^p)+theta)^2 + 3 theta^2 + 2 theta - 1.
// p = 0 is allowed here (these are plain curve evaluations).
double curve_l(double theta, double p);
double curve_q(double theta, double p);

struct RegionCurves {
  std::optional<double> m_val;
  std::optional<double> M_val;
};
RegionCurves region_curves(double theta);

}  // namespace psos
