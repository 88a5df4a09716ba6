#pragma once

#include <string>
#include <vector>

#include "psos/cubic.hpp"
#include "psos/params.hpp"
#include "psos/xi.hpp"

namespace psos {

// Regions of the (theta,p) plane by translation-invariant measure count:
//   UNIQUE          1 measure (theta >= 1, or small p, or C1 failure)
//   BOUNDARY_mM     3 (on the D = 0 curves p = m(theta) / p = M(theta))
//   Q_MINUS_CAP_P   5 (delta < 0, x != 1 quartet exists)
//   Q_ZERO          6 (delta = 0 within band)
//   Q_PLUS          7 (delta > 0)
enum class Region { UNIQUE, BOUNDARY_mM, Q_MINUS_CAP_P, Q_ZERO, Q_PLUS };

const char* to_string(Region r);

struct SolutionSet {
  ModelParams params;
  std::vector<LawPoint> points;  // branch-ascending
  Region region = Region::UNIQUE;
  int count = 0;
  // Set when delta or bigD fell inside the ambiguity band: the classification
  // sits on (or within tolerance of) a boundary curve and the count is the
  // boundary-case one rather than a guess at either side.
  bool tolerance_ambiguity = false;
  // Diagnostics carried along for flags and reporting.
  CubicAnalysis cubic;
  bool have_xi = false;
  XiAnalysis xi;
};

// Relative defect of (x,y) against both fixed-point equations
//   x = (x^2+theta y^2+T) / (T x^2+theta y^2+1),
//   y = (theta x^2+y^2+theta) / (T x^2+theta y^2+1).
// Evaluated in linear arithmetic in the ordinary range and via log-sum-exp
// when T or the coordinates leave it, so extreme exponents stay exact.
double fixed_point_residual(double x, double y, const ModelParams& params);

// Every translation-invariant solution at (theta,p), classified. k=m=2 only.
SolutionSet classify(const ModelParams& params);

// Convenience: the LawPoint for one branch, or BranchAbsent.
LawPoint branch_point(const ModelParams& params, int branch);

}  // namespace psos
