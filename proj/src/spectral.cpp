#include "psos/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace psos {

namespace {

// Softmax of three log-weights into a stochastic row.
std::array<double, 3> softmax_row(double w0, double w1, double w2) {
  double m = std::max({w0, w1, w2});
  double e0 = std::exp(w0 - m), e1 = std::exp(w1 - m), e2 = std::exp(w2 - m);
  double s = e0 + e1 + e2;
  return {e0 / s, e1 / s, e2 / s};
}

double det3(const std::array<std::array<double, 3>, 3>& P) {
  return P[0][0] * (P[1][1] * P[2][2] - P[1][2] * P[2][1]) -
         P[0][1] * (P[1][0] * P[2][2] - P[1][2] * P[2][0]) +
         P[0][2] * (P[1][0] * P[2][1] - P[1][1] * P[2][0]);
}

}  // namespace

TransitionKernel build_kernel(const LawPoint& point, const ModelParams& params) {
  const double x = point.x, y = point.y;
  const double lt = std::log(params.theta);
  const double LT = params.log_theta_pow;
  const double lx = std::log(x), ly = std::log(y);

  TransitionKernel kern;
  kern.P[0] = softmax_row(2.0 * lx, lt + 2.0 * ly, LT);
  kern.P[1] = softmax_row(lt + 2.0 * lx, 2.0 * ly, lt);
  kern.P[2] = softmax_row(LT + 2.0 * lx, lt + 2.0 * ly, 0.0);
  kern.Z = params.theta_pow * x * x + params.theta * y * y + 1.0;

  // Compact-form cross-check (valid only at fixed points): rows of
  // [x, theta y^2/x, T/x; theta x^2/y, y, theta/y; T x^2, theta y^2, 1] / Z
  // must match. Skipped when T or Z leaves the representable range.
  const double T = params.theta_pow;
  if (std::isfinite(T) && T < 1e250 && kern.Z < 1e250 && x > 1e-120 &&
      y > 1e-120) {
    const double Z = kern.Z;
    const double rows_m1[3][3] = {
        {x / Z, params.theta * y * y / (x * Z), T / (x * Z)},
        {params.theta * x * x / (y * Z), y / Z, params.theta / (y * Z)},
        {T * x * x / Z, params.theta * y * y / Z, 1.0 / Z}};
    for (int i = 0; i < 3; ++i) {
      double sum = rows_m1[i][0] + rows_m1[i][1] + rows_m1[i][2];
      if (std::abs(sum - 1.0) > 1e-9)
        throw StochasticityViolation(
            "compact-form row sum deviates from 1: the input (x,y) is not a "
            "fixed point");
      for (int j = 0; j < 3; ++j)
        if (std::abs(rows_m1[i][j] - kern.P[i][j]) >
            1e-9 * std::max(1.0, std::abs(kern.P[i][j])))
          throw StochasticityViolation("kernel forms disagree: non-solution input");
    }
  }

  eigenvalues(kern);
  return kern;
}

void eigenvalues(TransitionKernel& kernel) {
  const auto& P = kernel.P;
  // tr(P) - 1 written without the near-one cancellation: row sums are 1, so
  // P00 - 1 = -(P01 + P02).
  const double S = P[1][1] + P[2][2] - P[0][1] - P[0][2];
  const double det = det3(P);
  const double disc = S * S - 4.0 * det;
  if (disc >= 0.0) {
    double r = std::sqrt(disc);
    double l1 = (S >= 0.0) ? 0.5 * (S + r) : 0.5 * (S - r);
    double l2 = (l1 != 0.0) ? det / l1 : 0.0;  // l1 = 0 forces S = det = 0
    if (std::abs(l2) > std::abs(l1)) std::swap(l1, l2);
    kernel.lambda1 = l1;
    kernel.lambda2 = l2;
    kernel.complex_pair = false;
    kernel.lambda_max = std::abs(l1);
  } else {
    // conjugate pair; KS only needs the common modulus sqrt(det)
    double mod = std::sqrt(std::max(det, 0.0));
    kernel.lambda1 = mod;
    kernel.lambda2 = mod;
    kernel.complex_pair = true;
    kernel.lambda_max = mod;
  }
}

double lambda1_x1(double y, const ModelParams& params) {
  const double theta = params.theta;
  const double T = params.theta_pow;
  const double y2 = y * y;
  if (std::isfinite(T) && T <= 1.0e200) {
    return (T - 2.0 * theta * theta + 1.0) * y2 /
           (theta * y2 * y2 + (T + 2.0 * theta * theta + 1.0) * y2 +
            2.0 * theta * (T + 1.0));
  }
  // factor T out of numerator and denominator
  const double invT = std::exp(-params.log_theta_pow);
  return (1.0 + (1.0 - 2.0 * theta * theta) * invT) * y2 /
         (theta * y2 * y2 * invT + (1.0 + (2.0 * theta * theta + 1.0) * invT) * y2 +
          2.0 * theta * (1.0 + invT));
}

double lambda2_x1(double y, const ModelParams& params) {
  const double theta = params.theta;
  const double T = params.theta_pow;
  const double y2 = y * y;
  if (std::isfinite(T) && T <= 1.0e200)
    return (1.0 - T) / (T + theta * y2 + 1.0);
  const double invT = std::exp(-params.log_theta_pow);
  return (invT - 1.0) / (1.0 + (theta * y2 + 1.0) * invT);
}

KsReport kesten_stigum(const TransitionKernel& kernel, int k) {
  if (k < 1) throw DomainError("kesten_stigum: k must be >= 1");
  KsReport rep;
  rep.eta = k * kernel.lambda_max * kernel.lambda_max - 1.0;
  rep.ks_nonextremal = rep.eta > 0.0;
  return rep;
}

double char_poly_abs(const TransitionKernel& kernel, double lambda) {
  auto P = kernel.P;
  for (int i = 0; i < 3; ++i) P[i][i] -= lambda;
  return std::abs(det3(P));
}

}  // namespace psos
