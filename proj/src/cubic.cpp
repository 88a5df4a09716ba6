#include "psos/cubic.hpp"

#include <algorithm>
#include <cmath>

namespace psos {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Coefficient scale used for the relative ambiguity band around delta = 0.
double delta_scale(double P, double Q) {
  double s = std::max({1.0, std::abs(P), std::abs(Q)});
  return s * s * s;  // delta mixes P^3 and Q^2
}

double eval_cubic(double y, double theta, double T) {
  return theta * y * y * y - y * y + (T + 1.0) * y - 2.0 * theta;
}

double eval_cubic_deriv(double y, double theta, double T) {
  return 3.0 * theta * y * y - 2.0 * y + (T + 1.0);
}

// One or two Newton steps on the original cubic; skipped near multiple roots
// where the derivative degenerates.
double polish(double y, double theta, double T) {
  for (int it = 0; it < 3; ++it) {
    double f = eval_cubic(y, theta, T);
    double df = eval_cubic_deriv(y, theta, T);
    if (std::abs(df) < 1e-8 * std::max(1.0, std::abs(y))) break;
    double step = f / df;
    if (!std::isfinite(step)) break;
    y -= step;
    if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(y))) break;
  }
  return y;
}

}  // namespace

double cubic_discriminant(const ModelParams& params) {
  const double theta = params.theta;
  const double tT = theta * params.theta_pow;  // theta^(2^p + 1)
  const double P = 1.0 - 3.0 * theta - 3.0 * tT;
  const double Q = 2.0 - 9.0 * theta + 54.0 * theta * theta * theta - 9.0 * tT;
  return (4.0 * P * P * P - Q * Q) / (27.0 * theta * theta);
}

double cubic_residual(double y, const ModelParams& params) {
  const double theta = params.theta;
  const double T = params.theta_pow;
  double f = eval_cubic(y, theta, T);
  double scale = std::max({1.0, std::abs(theta * y * y * y), y * y,
                           std::abs((T + 1.0) * y), 2.0 * theta});
  return std::abs(f) / scale;
}

CubicAnalysis solve_cubic_x1(const ModelParams& params) {
  if (params.m != 2 || params.k != 2)
    throw DomainError("closed-form cubic requires m = 2, k = 2");
  const double theta = params.theta;
  const double T = params.theta_pow;

  CubicAnalysis out;
  out.delta = cubic_discriminant(params);

  // Far antiferromagnetic regime: T dominates every other coefficient and the
  // depressed-cubic intermediates would overflow. The single root is
  // y = 2 theta/(T+1) to machine precision (correction is O(y^2/T)); it may
  // underflow to a subnormal or 0 for extreme exponents.
  if (T > 1e8) {
    double y = (std::isfinite(T)) ? 2.0 * theta / (T + 1.0)
                                  : std::exp(std::log(2.0 * theta) -
                                             params.log_theta_pow);
    out.roots.push_back(polish(y, theta, T));
    return out;
  }

  // Monic form y^3 + B y^2 + C y + D, then depressed t^3 + pc t + qc with
  // y = t - B/3.
  const double B = -1.0 / theta;
  const double C = (T + 1.0) / theta;
  const double D = -2.0;
  const double B2 = B * B;
  const double pc = C - B2 / 3.0;
  const double qc = (2.0 * B2 * B - 9.0 * B * C) / 27.0 + D;
  const double shift = -B / 3.0;

  const double tT = theta * T;
  const double P = 1.0 - 3.0 * theta - 3.0 * tT;
  const double Q =
      2.0 - 9.0 * theta + 54.0 * theta * theta * theta - 9.0 * tT;
  const double band = kBoundaryBand * delta_scale(P, Q);
  const double delta_scaled = out.delta * 27.0 * theta * theta;  // 4P^3 - Q^2
  out.boundary = std::abs(delta_scaled) <= band;

  if (delta_scaled > band) {
    // Three distinct real roots: trigonometric form, descending order.
    double r = std::sqrt(-pc / 3.0);
    double arg = 3.0 * qc / (2.0 * pc * r);
    arg = std::clamp(arg, -1.0, 1.0);
    double phi = std::acos(arg) / 3.0;
    for (int kk = 0; kk < 3; ++kk) {
      double t = 2.0 * r * std::cos(phi - 2.0 * kPi * kk / 3.0);
      out.roots.push_back(polish(t + shift, theta, T));
    }
  } else if (out.boundary) {
    // Double root: trig form still applies (arg clamps to +-1); collapse the
    // nearly equal pair and report it once.
    out.double_root = true;
    if (pc < 0.0) {
      double r = std::sqrt(-pc / 3.0);
      double arg = std::clamp(3.0 * qc / (2.0 * pc * r), -1.0, 1.0);
      double phi = std::acos(arg) / 3.0;
      double y0 = 2.0 * r * std::cos(phi) + shift;
      double y1 = 2.0 * r * std::cos(phi - 2.0 * kPi / 3.0) + shift;
      double y2 = 2.0 * r * std::cos(phi - 4.0 * kPi / 3.0) + shift;
      // the merged pair are the two closest values
      double d01 = std::abs(y0 - y1), d12 = std::abs(y1 - y2);
      if (d01 < d12) {
        out.roots = {0.5 * (y0 + y1), y2};
      } else {
        out.roots = {y0, 0.5 * (y1 + y2)};
      }
    } else {
      out.roots = {polish(shift + std::cbrt(-qc), theta, T)};
      out.double_root = false;
    }
  } else {
    // One real root: Cardano with the sign-safe radical combination.
    double disc = qc * qc / 4.0 + pc * pc * pc / 27.0;
    double s = std::sqrt(std::max(disc, 0.0));
    double u = (qc <= 0.0) ? std::cbrt(-qc / 2.0 + s) : std::cbrt(-qc / 2.0 - s);
    double t = (u != 0.0) ? u - pc / (3.0 * u) : 0.0;
    out.roots.push_back(polish(t + shift, theta, T));
  }

  std::sort(out.roots.begin(), out.roots.end(), std::greater<double>());
  // Descartes: all real roots of this cubic are positive. Guard anyway.
  std::erase_if(out.roots, [](double r) { return !(r > 0.0) || !std::isfinite(r); });
  return out;
}

}  // namespace psos
