#pragma once

#include <cmath>
#include <limits>

#include "psos/errors.hpp"

namespace psos {

// Global tolerances. residual_tol is overridable per call site (the CLI reads
// PSOS_TOL); boundary_band is the relative ambiguity band around sign
// boundaries of the discriminants.
inline constexpr double kResidualTol = 1e-10;
inline constexpr double kBoundaryBand = 1e-12;

// Model parameterization: pair interaction theta^(|i-j|^p) on the order-k
// Cayley tree with states {0..m}. theta_pow = theta^(2^p) is the weight of
// the extreme spin difference for m=2; for theta<1 and large p it underflows
// to exact 0, for theta>1 it may overflow to +inf. Both are accepted: every
// downstream formula is evaluated so the limits stay finite, and
// log_theta_pow carries the exact exponent for the extreme regimes.
struct ModelParams {
  double theta = 1.0;
  double p = 1.0;
  int k = 2;
  int m = 2;
  double log_theta_pow = 0.0;  // 2^p * ln(theta)
  double theta_pow = 1.0;      // exp(log_theta_pow), possibly 0 or +inf

  static ModelParams make(double theta, double p, int k = 2, int m = 2) {
    if (!(theta > 0.0) || !std::isfinite(theta))
      throw DomainError("theta must be a positive finite real");
    if (!(p > 0.0) || !std::isfinite(p))
      throw DomainError("p must be a positive finite real");
    if (k < 1) throw DomainError("tree order k must be >= 1");
    if (m < 1) throw DomainError("state count m must be >= 1");
    ModelParams mp;
    mp.theta = theta;
    mp.p = p;
    mp.k = k;
    mp.m = m;
    mp.log_theta_pow = std::exp2(p) * std::log(theta);
    mp.theta_pow = std::exp(mp.log_theta_pow);
    return mp;
  }
};

// theta^(t) for arbitrary real exponent, via the stable exp(t ln theta) path.
inline double theta_to(double theta, double t) {
  return std::exp(t * std::log(theta));
}

namespace detail {

// log(sum exp(a_i)) over three terms; tolerates -inf entries.
inline double lse3(double a, double b, double c) {
  double m = a;
  if (b > m) m = b;
  if (c > m) m = c;
  if (!std::isfinite(m)) return m;  // all -inf, or an inf dominates
  return m + std::log(std::exp(a - m) + std::exp(b - m) + std::exp(c - m));
}

}  // namespace detail

}  // namespace psos
