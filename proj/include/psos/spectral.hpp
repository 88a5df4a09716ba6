#pragma once

#include <array>

#include "psos/law.hpp"
#include "psos/params.hpp"

namespace psos {

// Row-stochastic transition matrix of the tree-indexed Markov chain attached
// to a solution (x,y), with its non-unit eigenvalues. Rows are built from
// log-weights (softmax), so extreme theta^(2^p) stays exact; Z records the
// third-row normalizer theta^(2^p) x^2 + theta y^2 + 1 for diagnostics.
struct TransitionKernel {
  std::array<std::array<double, 3>, 3> P{};
  double Z = 0.0;
  double lambda1 = 0.0;      // larger |.| first
  double lambda2 = 0.0;
  double lambda_max = 0.0;   // max(|lambda1|, |lambda2|)
  bool complex_pair = false; // lambda1/lambda2 hold the common modulus then
};

struct KsReport {
  double eta = 0.0;           // k * lambda_max^2 - 1
  bool ks_nonextremal = false;
};

// Kernel rows per the weight table
//   [x^2, theta y^2, T] / ., [theta x^2, y^2, theta] / ., [T x^2, theta y^2, 1] / .
// The compact form (rows scaled by x, y, 1 over the common Z) is
// cross-checked when representable; disagreement beyond 1e-9 signals a
// non-solution input and throws StochasticityViolation. Eigenvalues are
// filled in via eigenvalues().
TransitionKernel build_kernel(const LawPoint& point, const ModelParams& params);

// Non-unit eigenvalues by deflating the known eigenvalue 1:
// lambda^2 - (tr P - 1) lambda + det P, solved in closed form. A complex
// conjugate pair is reported with its common modulus.
void eigenvalues(TransitionKernel& kernel);

// Closed forms for the x = 1 branch (evaluated with the dominant weight
// factored out in the large-T regime):
//   lambda1 = (T - 2 theta^2 + 1) y^2 / (theta y^4 + (T+2theta^2+1) y^2 + 2theta(T+1))
//   lambda2 = (1 - T) / (T + theta y^2 + 1)
double lambda1_x1(double y, const ModelParams& params);
double lambda2_x1(double y, const ModelParams& params);

// Kesten-Stigum check: eta = k lambda_max^2 - 1; positive implies the
// measure is not extremal.
KsReport kesten_stigum(const TransitionKernel& kernel, int k = 2);

// |det(P - lambda I)| -- test hook for the characteristic-polynomial check.
double char_poly_abs(const TransitionKernel& kernel, double lambda);

}  // namespace psos
