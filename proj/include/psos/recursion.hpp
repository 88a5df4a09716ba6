#pragma once

#include <cstdint>
#include <vector>

#include "psos/params.hpp"

namespace psos {

// Translation-invariant law for general m: z_i = exp(h_i), i = 0..m-1 (the
// last state is normalized out). residual is the relative defect of the
// componentwise fixed-point equations.
struct LawVector {
  std::vector<double> z;
  double residual = 0.0;
};

struct TiOptions {
  int starts = 64;          // random starts added on top of the lattice
  double damping = 0.5;     // step fraction toward k*F(h)
  int max_iter = 2000;      // damped-iteration budget per start
  int newton_iter = 80;     // polish budget per candidate
  double tol = 1e-12;       // convergence in h (max-norm)
  double dedup = 1e-6;      // max-norm dedup threshold in h-space
  std::uint64_t seed = 0x5eedULL;
};

struct TiResult {
  std::vector<LawVector> points;  // sorted lexicographically by h
  int non_converged = 0;          // starts that produced no fixed point
};

// The compatibility map: F_i(h) = ln[(sum_j theta^(|i-j|^p) e^(h_j) +
// theta^((m-i)^p)) / (sum_j theta^((m-j)^p) e^(h_j) + 1)], i = 0..m-1,
// evaluated with log-sum-exp so |h_i| up to ~700 cannot overflow.
std::vector<double> f_map(const std::vector<double>& h,
                          const ModelParams& params);

// Multi-start search for all fixed points of h = k*F(h): damped iteration
// plus Newton (finite-difference Jacobian) from a lattice of sign patterns
// and `starts` random points. Newton also runs from the raw starts, which is
// what recovers the repelling fixed points. Deterministic for a fixed seed.
TiResult ti_fixed_points(const ModelParams& params, const TiOptions& opt = {});

// Relative defect of z against the TI law equations (max over components).
double ti_residual(const std::vector<double>& z, const ModelParams& params);

}  // namespace psos
