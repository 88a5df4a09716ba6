#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psos/law.hpp"

namespace psos {

// Sign-change quantities exposed to bracketed bisection in theta at fixed p.
enum class Quantity { DELTA, BIG_D, ETA, U, Q_CURVE, L_CURVE };

const char* to_string(Quantity q);

struct ThresholdQuery {
  double p = 1.0;
  int branch = 1;       // used by ETA and U
  Quantity quantity = Quantity::DELTA;
  double lo = 0.0, hi = 0.0;  // bracket in theta
  double tol = 1e-10;         // absolute, in the search coordinate
};

// Evaluate a quantity at (theta, p[, branch]). Throws BranchAbsent when the
// branch does not exist there, DomainError outside a quantity's domain.
double quantity_value(Quantity q, int branch, double theta, double p);

// Pure bisection. Deterministic; bit-identical results for identical
// queries. Throws NoSignChange when the bracket endpoints agree in sign and
// BranchVanished when the branch disappears inside the bracket.
double find_threshold(const ThresholdQuery& q);

// One named critical value, as reproduced by the suite.
struct ThresholdEntry {
  std::string name;
  bool defined = false;
  double theta = 0.0;
  std::string quantity;   // what crossed zero
  double bracket_lo = 0.0, bracket_hi = 0.0;
  std::string note;       // reason when !defined
};

// Named critical-theta suite. p = 0.1 and p = 10 carry the named sets; other
// p get the generic existence threshold (delta sign change) when present.
//
// Indexing note for the p = 0.1 KS/MSW onsets: the published values follow
// the classical Cardano enumeration of the cubic roots, where index 2 is the
// SMALLEST root and index 3 the middle one. Branches here are size-sorted
// (1 = largest), so theta2_hat/theta2_bar are computed on sorted branch 3
// and theta3_hat/theta3_bar on sorted branch 2.
std::vector<ThresholdEntry> paper_threshold_suite(double p);

enum class CurveName { M_SMALL, M_BIG, DELTA0, D0 };

struct CurveSample {
  double theta = 0.0;
  std::optional<double> value;
};

// Samples of the region curves: M_SMALL/M_BIG are the closed-form curves
// m(theta), M(theta); DELTA0/D0 solve Delta(theta,p)=0 / D(theta,p)=0 for p
// by bisection over p in (1e-3, 32), none when no sign change.
std::vector<CurveSample> trace_curve(CurveName name, double lo, double hi,
                                     int n);

}  // namespace psos
