#pragma once

#include <string>
#include <vector>

#include "psos/extremality.hpp"
#include "psos/law.hpp"

namespace psos {

// One row of a parameter sweep: a (theta, branch) cell with its spectral and
// extremality quantities. `exists` is false only for quartet branches the
// region predicts but whose C2 check rejected (the numeric fields are then
// empty in CSV).
struct ScanRow {
  double theta = 0.0;
  double p = 0.0;
  int branch = 0;
  bool exists = false;
  double x = 0.0, y = 0.0;
  double lambda1 = 0.0, lambda2 = 0.0;
  double eta = 0.0, kappa = 0.0, gamma_bound = 0.0, U = 0.0;
  std::string verdict;
};

// Rows for an n-point theta grid at fixed p: theta ascending, branch
// ascending inside each theta.
std::vector<ScanRow> scan_rows(double p, double theta_lo, double theta_hi,
                               int n);

// Fixed-header CSV of the rows; 17-significant-digit cells, byte-stable.
std::string scan_csv(const std::vector<ScanRow>& rows);

}  // namespace psos
