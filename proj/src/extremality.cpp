#include "psos/extremality.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "psos/kernels/gamma_grid.hpp"

namespace psos {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::MSW_EXTREMAL: return "MSW_EXTREMAL";
    case Verdict::KS_NONEXTREMAL: return "KS_NONEXTREMAL";
    case Verdict::UNDETERMINED: return "UNDETERMINED";
    case Verdict::CONFLICT: return "CONFLICT";
  }
  return "?";
}

double kappa_of(const TransitionKernel& kernel) {
  double best = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      double d = 0.0;
      for (int l = 0; l < 3; ++l)
        d += std::abs(kernel.P[i][l] - kernel.P[j][l]);
      if (d > best) best = d;
    }
  return 0.5 * best;
}

double kappa(const LawPoint& point, const ModelParams& params) {
  return kappa_of(build_kernel(point, params));
}

double kappa_explicit(const LawPoint& point, const ModelParams& params) {
  const double x = point.x, y = point.y;
  const double th = params.theta;
  const double T = params.theta_pow;
  if (!std::isfinite(T) || T > 1e250)
    throw DomainError("kappa_explicit: theta^(2^p) out of representable range");
  const double Z = T * x * x + th * y * y + 1.0;
  const double t1 = (x * x * std::abs(y - th * x) + y * y * std::abs(x - th * y) +
                     std::abs(T * y - th * x)) /
                    (x * y);
  const double t2 = (x * x * std::abs(1.0 - T * x) +
                     th * y * y * std::abs(1.0 - x) + std::abs(T - x)) /
                    x;
  const double t3 = (x * x * std::abs(th - T * y) +
                     y * y * std::abs(1.0 - th * y) + std::abs(th - y)) /
                    y;
  return std::max({t1, t2, t3}) / (2.0 * Z);
}

std::pair<double, double> kappa_terms_x1(double y, const ModelParams& params) {
  const double th = params.theta;
  const double T = params.theta_pow;
  double first = (std::abs(y - th) + y * y * std::abs(1.0 - th * y) +
                  std::abs(T * y - th)) /
                 y;
  double second = 2.0 * std::abs(1.0 - T);
  return {first, second};
}

GammaBound gamma_bound(const ModelParams& params) {
  GammaBound out;
  out.domain_restricted = params.theta >= 1.0;
  const double T = params.theta_pow;
  if (std::isfinite(T)) {
    out.value = (1.0 - T) / (1.0 + T);
  } else {
    out.value = -1.0;  // limit of (1-T)/(1+T) as T -> inf
  }
  return out;
}

double msw_U(const LawPoint& point, const ModelParams& params) {
  double g = std::abs(gamma_bound(params).value);
  return 2.0 * g * kappa(point, params) - 1.0;
}

ExtremalityReport msw_report(const LawPoint& point, const ModelParams& params,
                             const TransitionKernel& kernel) {
  ExtremalityReport rep;
  rep.kappa = kappa_of(kernel);
  GammaBound gb = gamma_bound(params);
  rep.gamma_bound = gb.value;
  rep.msw_domain_restricted = gb.domain_restricted;
  rep.U = 2.0 * std::abs(gb.value) * rep.kappa - 1.0;
  rep.eta = kesten_stigum(kernel, params.k).eta;

  const bool ks = rep.eta > 0.0;
  if (gb.domain_restricted) {
    rep.verdict = ks ? Verdict::KS_NONEXTREMAL : Verdict::UNDETERMINED;
  } else {
    const bool msw = rep.U < 0.0;
    if (msw && !ks)
      rep.verdict = Verdict::MSW_EXTREMAL;
    else if (ks && !msw)
      rep.verdict = Verdict::KS_NONEXTREMAL;
    else if (msw && ks)
      rep.verdict = Verdict::CONFLICT;  // mutually exclusive in practice
    else
      rep.verdict = Verdict::UNDETERMINED;
  }
  return rep;
}

GammaLemmaReport verify_gamma_lemma(const ModelParams& params,
                                    const LawPoint& point, int grid_n) {
  if (params.theta >= 1.0)
    throw DomainError("verify_gamma_lemma requires theta < 1");
  if (grid_n < 2) throw DomainError("verify_gamma_lemma: grid_n must be >= 2");

  const double x = point.x, y = point.y;
  const double T = params.theta_pow;
  const auto coeffs = kernels::GammaCoeffs::make(x, y, params.theta, T);
  const auto kern = kernels::select_gamma_max();

  GammaLemmaReport rep;
  rep.bound = (1.0 - T) / (1.0 + T);

  double mx[4] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t n = static_cast<std::size_t>(grid_n);
  std::vector<double> ts, us;
  ts.reserve(n + 1);
  us.reserve(n + 1);

  // interior lattice, row by row (t+u <= 1)
  for (std::size_t j = 0; j <= n; ++j) {
    const double u = static_cast<double>(j) / n;
    ts.clear();
    us.clear();
    for (std::size_t i = 0; i + j <= n; ++i) {
      ts.push_back(static_cast<double>(i) / n);
      us.push_back(u);
    }
    kern(coeffs, ts.data(), us.data(), ts.size(), mx);
  }

  // the three edges at n^2 resolution
  const std::size_t n2 = n * n;
  std::vector<double> et(n2 + 1), eu(n2 + 1);
  for (std::size_t k = 0; k <= n2; ++k) et[k] = static_cast<double>(k) / n2;
  // u = 0
  std::fill(eu.begin(), eu.end(), 0.0);
  kern(coeffs, et.data(), eu.data(), n2 + 1, mx);
  // t = 0
  kern(coeffs, eu.data(), et.data(), n2 + 1, mx);
  // t + u = 1
  for (std::size_t k = 0; k <= n2; ++k) eu[k] = 1.0 - et[k];
  kern(coeffs, et.data(), eu.data(), n2 + 1, mx);

  rep.max_abs = std::max({mx[0], mx[1], mx[2], mx[3]});
  rep.holds = rep.max_abs <= rep.bound + 1e-9;

  // closed-form boundary maxima of f (diagnostics for the oracle checks)
  {
    double td = 1.0 / (1.0 + x * x);
    double tuv[1] = {td}, uuv[1] = {1.0 - td};
    double m2[4] = {0, 0, 0, 0};
    kernels::gamma_max_scalar(coeffs, tuv, uuv, 1, m2);
    rep.f_edge_diag = m2[0];

    double sqrtT = std::exp(0.5 * params.log_theta_pow);
    rep.bound_half_exp = (1.0 - sqrtT) / (1.0 + sqrtT);
    double denom = (sqrtT / params.theta) * x * x + y * y;
    double t0 = (denom > 0.0) ? y * y / denom : 1.0;
    double t0v[1] = {t0}, u0v[1] = {0.0};
    double m3[4] = {0, 0, 0, 0};
    kernels::gamma_max_scalar(coeffs, t0v, u0v, 1, m3);
    rep.f_edge_u0 = m3[0];
  }
  return rep;
}

bool theta_monotone_check(double p, double theta, int samples) {
  if (!(theta > 0.0 && theta < 1.0))
    throw DomainError("theta_monotone_check requires theta in (0,1)");
  const double hi = std::exp2(p);
  const double lo = -1.0 + 1e-9;
  double prev = -2.0;
  for (int i = 0; i <= samples; ++i) {
    double t = lo + (hi - lo) * i / samples;
    double tt = theta_to(theta, t);
    double val = (1.0 - tt) / (1.0 + tt);
    if (val < prev - 1e-15) return false;
    prev = val;
  }
  return true;
}

}  // namespace psos
