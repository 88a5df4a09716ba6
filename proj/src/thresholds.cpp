#include "psos/thresholds.hpp"

#include <cmath>
#include <functional>

#include "psos/extremality.hpp"
#include "psos/spectral.hpp"

namespace psos {

namespace {

using EvalFn = std::function<double(double)>;

LawPoint require_branch(double theta, double p, int branch) {
  auto params = ModelParams::make(theta, p);
  return branch_point(params, branch);  // throws BranchAbsent when missing
}

// Bisection core shared by the public query path and the suite's internal
// quantities. `theta_of` maps the search coordinate to theta for error
// reporting when a branch vanishes mid-bracket.
double bisect(const EvalFn& f, double lo, double hi, double tol,
              const char* what) {
  double flo, fhi;
  try {
    flo = f(lo);
    fhi = f(hi);
  } catch (const BranchAbsent& e) {
    throw BranchVanished(std::string(what) +
                             ": branch absent at a bracket endpoint: " +
                             e.what(),
                         lo, hi);
  }
  if (!(flo * fhi <= 0.0))
    throw NoSignChange(std::string(what) + ": no sign change over bracket");
  while (hi - lo > tol) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at rounding resolution
    double fm;
    try {
      fm = f(mid);
    } catch (const BranchAbsent& e) {
      throw BranchVanished(
          std::string(what) + ": branch vanished inside bracket: " + e.what(),
          lo, hi);
    }
    if (flo * fm <= 0.0) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

// Internal suite quantities beyond the public enum.
double lambda_cross_branch1(double theta, double p) {
  auto pt = require_branch(theta, p, 1);
  auto params = ModelParams::make(theta, p);
  return std::abs(lambda1_x1(pt.y, params)) - std::abs(lambda2_x1(pt.y, params));
}

double kappa_switch_branch1(double theta, double p) {
  auto pt = require_branch(theta, p, 1);
  auto [first, second] = kappa_terms_x1(pt.y, ModelParams::make(theta, p));
  return first - second;
}

ThresholdEntry run_entry(const std::string& name, const std::string& qdesc,
                         const EvalFn& f, double lo, double hi,
                         double tol = 1e-10) {
  ThresholdEntry e;
  e.name = name;
  e.quantity = qdesc;
  e.bracket_lo = lo;
  e.bracket_hi = hi;
  try {
    e.theta = bisect(f, lo, hi, tol, name.c_str());
    e.defined = true;
  } catch (const std::exception& ex) {
    e.defined = false;
    e.note = ex.what();
  }
  return e;
}

}  // namespace

const char* to_string(Quantity q) {
  switch (q) {
    case Quantity::DELTA: return "DELTA";
    case Quantity::BIG_D: return "BIG_D";
    case Quantity::ETA: return "ETA";
    case Quantity::U: return "U";
    case Quantity::Q_CURVE: return "Q_CURVE";
    case Quantity::L_CURVE: return "L_CURVE";
  }
  return "?";
}

double quantity_value(Quantity q, int branch, double theta, double p) {
  switch (q) {
    case Quantity::DELTA:
      return cubic_discriminant(ModelParams::make(theta, p));
    case Quantity::BIG_D:
      return xi_analysis(ModelParams::make(theta, p)).bigD;
    case Quantity::ETA: {
      auto params = ModelParams::make(theta, p);
      auto pt = branch_point(params, branch);
      auto kern = build_kernel(pt, params);
      return kesten_stigum(kern, params.k).eta;
    }
    case Quantity::U: {
      auto params = ModelParams::make(theta, p);
      auto pt = branch_point(params, branch);
      return msw_U(pt, params);
    }
    case Quantity::Q_CURVE:
      return curve_q(theta, p);
    case Quantity::L_CURVE:
      return curve_l(theta, p);
  }
  throw DomainError("unknown quantity");
}

double find_threshold(const ThresholdQuery& q) {
  if (!(q.lo < q.hi)) throw DomainError("find_threshold: need lo < hi");
  auto f = [&](double theta) {
    return quantity_value(q.quantity, q.branch, theta, q.p);
  };
  return bisect(f, q.lo, q.hi, q.tol, to_string(q.quantity));
}

std::vector<ThresholdEntry> paper_threshold_suite(double p) {
  std::vector<ThresholdEntry> out;
  auto eta_b = [p](int branch) {
    return [p, branch](double th) {
      return quantity_value(Quantity::ETA, branch, th, p);
    };
  };
  auto u_b = [p](int branch) {
    return [p, branch](double th) {
      return quantity_value(Quantity::U, branch, th, p);
    };
  };
  auto delta_f = [p](double th) {
    return quantity_value(Quantity::DELTA, 0, th, p);
  };

  if (std::abs(p - 0.1) < 1e-12) {
    out.push_back(run_entry("theta2", "delta(theta,0.1)", delta_f, 0.1, 0.3));
    out.push_back(run_entry("theta1", "|lambda1|-|lambda2| on branch 1",
                            [p](double th) { return lambda_cross_branch1(th, p); },
                            0.2, 0.5));
    out.push_back(run_entry("theta1_hat", "kappa max-term switch on branch 1",
                            [p](double th) { return kappa_switch_branch1(th, p); },
                            0.2, 0.5));
    // KS/MSW onsets; see the header note on the 2 <-> 3 enumeration swap.
    out.push_back(run_entry("theta2_hat", "eta on the smallest root",
                            eta_b(3), 0.05, 0.2));
    out.push_back(run_entry("theta3_hat", "eta on the middle root",
                            eta_b(2), 0.05, 0.2));
    out.push_back(run_entry("theta2_bar", "U on the smallest root",
                            u_b(3), 0.1, 0.2));
    out.push_back(run_entry("theta3_bar", "U on the middle root",
                            u_b(2), 0.1, 0.2));
    out.push_back(run_entry("theta1_star", "U on branch 1", u_b(1), 10.0, 30.0));
    // far-field KS onset, searched in s = 1/theta for uniform resolution
    {
      ThresholdEntry e;
      e.name = "theta1_tilde";
      e.quantity = "eta on branch 1, bisected in 1/theta";
      e.bracket_lo = 1.0 / 1e-3;
      e.bracket_hi = 1.0 / 1e-4;
      try {
        auto f = [&](double s) {
          return quantity_value(Quantity::ETA, 1, 1.0 / s, p);
        };
        double s = bisect(f, 1e-4, 1e-3, 1e-14, "theta1_tilde");
        e.theta = 1.0 / s;
        e.defined = true;
      } catch (const std::exception& ex) {
        e.note = ex.what();
      }
      out.push_back(e);
    }
    return out;
  }

  if (std::abs(p - 10.0) < 1e-12) {
    out.push_back(
        run_entry("theta2_prime", "delta(theta,10)", delta_f, 0.05, 0.2));
    out.push_back(
        run_entry("theta1_msw", "U on branch 1", u_b(1), 0.9, 1.1, 1e-12));
    out.push_back(
        run_entry("theta1_ks", "eta on branch 1", eta_b(1), 0.9, 1.1, 1e-12));
    // extremality onsets for the small roots: U stays positive over their
    // whole existence range, so there is nothing to bracket
    for (auto [name, branch] : {std::pair{"theta2_bar", 3}, {"theta3_bar", 2}}) {
      ThresholdEntry e;
      e.name = name;
      e.quantity = "U on branch " + std::to_string(branch);
      double th2p = bisect(delta_f, 0.05, 0.2, 1e-12, "existence");
      double umin = 1e300;
      for (int i = 0; i < 64; ++i) {
        double th = (i + 0.5) * (th2p - 1e-3) / 64 + 1e-3;
        umin = std::min(umin, u_b(branch)(th));
      }
      e.defined = false;
      e.note = "U never negative over the existence range (min " +
               std::to_string(umin) + ")";
      out.push_back(e);
    }
    return out;
  }

  // generic p: report the existence threshold when the bracket brackets it
  out.push_back(run_entry("theta_delta0", "delta sign change", delta_f,
                          1e-3, 0.99));
  return out;
}

std::vector<CurveSample> trace_curve(CurveName name, double lo, double hi,
                                     int n) {
  if (n < 2) throw DomainError("trace_curve: n must be >= 2");
  std::vector<CurveSample> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    CurveSample s;
    s.theta = lo + (hi - lo) * i / (n - 1);
    switch (name) {
      case CurveName::M_SMALL:
        s.value = curve_m(s.theta);
        break;
      case CurveName::M_BIG:
        s.value = curve_M(s.theta);
        break;
      case CurveName::DELTA0:
      case CurveName::D0: {
        auto f = [&](double p) {
          auto params = ModelParams::make(s.theta, p);
          return name == CurveName::DELTA0
                     ? cubic_discriminant(params)
                     : (s.theta < 1.0 ? xi_analysis(params).bigD : 1.0);
        };
        try {
          s.value = bisect(f, 1e-3, 32.0, 1e-12, "trace_curve");
        } catch (const std::exception&) {
          s.value = std::nullopt;
        }
        break;
      }
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace psos
