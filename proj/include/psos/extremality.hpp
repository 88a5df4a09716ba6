#pragma once

#include <string>

#include "psos/spectral.hpp"

namespace psos {

enum class Verdict { MSW_EXTREMAL, KS_NONEXTREMAL, UNDETERMINED, CONFLICT };

const char* to_string(Verdict v);

struct GammaBound {
  double value = 0.0;           // (1 - theta^(2^p)) / (1 + theta^(2^p)), signed
  bool domain_restricted = false;  // theta >= 1: the bound is only proven below 1
};

struct ExtremalityReport {
  double kappa = 0.0;
  double gamma_bound = 0.0;     // signed value
  double U = 0.0;               // 2 |gamma_bound| kappa - 1
  double eta = 0.0;
  Verdict verdict = Verdict::UNDETERMINED;
  bool msw_domain_restricted = false;  // theta >= 1: MSW verdict disabled
};

struct GammaLemmaReport {
  double max_abs = 0.0;   // sup of |f|,|phi|,|psi|,|g| over the sampled simplex
  double bound = 0.0;     // (1-T)/(1+T)
  bool holds = false;     // max_abs <= bound + 1e-9
  // Diagnostics at the two closed-form boundary maxima of f:
  double f_edge_diag = 0.0;    // f at t = 1/(1+x^2) on t+u = 1; sup is `bound`
  double f_edge_u0 = 0.0;      // f at t = y^2/((sqrtT/theta) x^2 + y^2), u = 0
  double bound_half_exp = 0.0; // (1-sqrtT)/(1+sqrtT), the u = 0 edge sup
};

// Half the maximal L1 distance between kernel rows. Always in [0,1].
double kappa_of(const TransitionKernel& kernel);
double kappa(const LawPoint& point, const ModelParams& params);

// Explicit three-term max form of kappa (requires representable T);
// cross-check for the row-based value.
double kappa_explicit(const LawPoint& point, const ModelParams& params);

// Two pieces of the explicit kappa for the x=1 branch, used to locate the
// piecewise switch: first = (|y-th| + y^2|1-th y| + |T y-th|)/y,
// second = 2|1-T|. kappa(1,y) = max(first, second)/(2 Z1).
std::pair<double, double> kappa_terms_x1(double y, const ModelParams& params);

// The boundary-influence bound. Signed as written; negative for theta > 1.
GammaBound gamma_bound(const ModelParams& params);

// MSW indicator U = 2 |gamma_bound| kappa - 1 (coincides with the signed
// formula for theta < 1, and is the quantity whose sign change marks the
// extremality onset for theta > 1).
double msw_U(const LawPoint& point, const ModelParams& params);

// Combined report. Verdict rules:
//   theta <  1: U < 0 & eta <= 0 -> MSW_EXTREMAL; eta > 0 & U >= 0 ->
//               KS_NONEXTREMAL; U < 0 & eta > 0 -> CONFLICT (must not occur);
//               otherwise UNDETERMINED.
//   theta >= 1: MSW disabled (bound unproven there); KS_NONEXTREMAL when
//               eta > 0, else UNDETERMINED. U is still reported.
ExtremalityReport msw_report(const LawPoint& point, const ModelParams& params,
                             const TransitionKernel& kernel);

// Brute-force check of the boundary-influence lemma: maximizes
// |f|,|phi|,|psi|,|g| over a grid_n x grid_n interior lattice of the simplex
// plus its three edges at grid_n^2 resolution. theta < 1 required.
GammaLemmaReport verify_gamma_lemma(const ModelParams& params,
                                    const LawPoint& point, int grid_n);

// Theta(t) = (1-theta^t)/(1+theta^t) sampled on (-1, 2^p]; true when the
// samples are nondecreasing. Test helper for the monotonicity step of the
// lemma.
bool theta_monotone_check(double p, double theta, int samples = 2048);

}  // namespace psos
