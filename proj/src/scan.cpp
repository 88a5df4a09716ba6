#include "psos/scan.hpp"

#include <algorithm>
#include <sstream>

#include "psos/io.hpp"

namespace psos {

std::vector<ScanRow> scan_rows(double p, double theta_lo, double theta_hi,
                               int n) {
  if (n < 1) throw DomainError("scan: grid size must be >= 1");
  if (!(theta_lo > 0.0 && theta_lo < theta_hi))
    throw DomainError("scan: need 0 < theta_lo < theta_hi");
  std::vector<ScanRow> out;
  for (int i = 0; i < n; ++i) {
    double theta =
        (n == 1) ? theta_lo : theta_lo + (theta_hi - theta_lo) * i / (n - 1);
    auto params = ModelParams::make(theta, p);
    auto set = classify(params);
    std::vector<ScanRow> cell;
    for (const auto& pt : set.points) {
      ScanRow row;
      row.theta = theta;
      row.p = p;
      row.branch = pt.branch;
      row.exists = true;
      row.x = pt.x;
      row.y = pt.y;
      auto kern = build_kernel(pt, params);
      auto rep = msw_report(pt, params, kern);
      row.lambda1 = kern.lambda1;
      row.lambda2 = kern.lambda2;
      row.eta = rep.eta;
      row.kappa = rep.kappa;
      row.gamma_bound = rep.gamma_bound;
      row.U = rep.U;
      row.verdict = to_string(rep.verdict);
      cell.push_back(row);
    }
    // quartet branches the region predicts but C2 rejected: emitted as
    // exists=false so the gap is visible in the sweep
    if (set.have_xi && set.xi.c1_satisfied) {
      for (int b = 0; b < 4; ++b) {
        if (set.xi.c2_satisfied[b]) continue;
        ScanRow row;
        row.theta = theta;
        row.p = p;
        row.branch = 4 + b;
        row.exists = false;
        cell.push_back(row);
      }
    }
    std::sort(cell.begin(), cell.end(),
              [](const ScanRow& a, const ScanRow& b) { return a.branch < b.branch; });
    out.insert(out.end(), cell.begin(), cell.end());
  }
  return out;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::ostringstream os;
  os << "theta,p,branch,exists,x,y,lambda1,lambda2,eta,kappa,gamma_bound,U,"
        "verdict\n";
  for (const auto& r : rows) {
    os << io::fmt17(r.theta) << ',' << io::fmt17(r.p) << ',' << r.branch << ','
       << (r.exists ? "true" : "false") << ',';
    if (r.exists) {
      os << io::fmt17(r.x) << ',' << io::fmt17(r.y) << ','
         << io::fmt17(r.lambda1) << ',' << io::fmt17(r.lambda2) << ','
         << io::fmt17(r.eta) << ',' << io::fmt17(r.kappa) << ','
         << io::fmt17(r.gamma_bound) << ',' << io::fmt17(r.U) << ','
         << r.verdict;
    } else {
      os << ",,,,,,,,";
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace psos
