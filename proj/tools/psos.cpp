// psos: translation-invariant Gibbs measures of the 3-state p-SOS model on
// the binary Cayley tree. Solves the boundary-law fixed-point system,
// classifies the (theta,p) plane, and evaluates the Kesten-Stigum /
// Martinelli-Sinclair-Weitz criteria per measure.
//
// Exit codes: 0 success, 2 domain error, 3 branch absent, 4 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "psos/io.hpp"
#include "psos/scan.hpp"
#include "psos/thresholds.hpp"

namespace {

constexpr int kExitDomain = 2;
constexpr int kExitBranchAbsent = 3;
constexpr int kExitIo = 4;

double residual_tol_from_env() {
  if (const char* v = std::getenv("PSOS_TOL")) {
    char* end = nullptr;
    double t = std::strtod(v, &end);
    if (end != v && t > 0.0) return t;
  }
  return psos::kResidualTol;
}

void write_or_print(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path, std::ios::binary);
  if (!os) throw std::ios_base::failure("cannot open " + out_path);
  os << text;
  if (!os) throw std::ios_base::failure("write failed: " + out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"translation-invariant Gibbs measures of the 3-state p-SOS "
               "model on the binary Cayley tree"};
  app.require_subcommand(1);

  double theta = 1.0, p = 1.0, tol = residual_tol_from_env();
  int branch = 1, grid = 100;
  std::string format = "json", out_path, method = "closed", curve_name = "M";
  double theta_min = 0.02, theta_max = 1.5;
  int starts = 64, m_states = 2, k_order = 2;
  double damping = 0.5;

  auto add_point_opts = [&](CLI::App* cmd) {
    cmd->add_option("--theta", theta, "coupling weight theta = exp(J)")
        ->required();
    cmd->add_option("--p", p, "interaction exponent p")->required();
  };

  auto* solve = app.add_subcommand("solve", "all boundary-law solutions at (theta, p)");
  add_point_opts(solve);
  solve->add_option("--format", format, "json or csv");
  solve->add_option("--tol", tol, "residual tolerance");
  solve->add_option("--method", method, "closed (default) or iterate");
  solve->add_option("--m", m_states, "state count for --method iterate");
  solve->add_option("--k", k_order, "tree order for --method iterate");
  solve->add_option("--starts", starts, "random starts for --method iterate");
  solve->add_option("--damping", damping, "damping for --method iterate");

  auto* classify_cmd = app.add_subcommand("classify", "region and measure count at (theta, p)");
  add_point_opts(classify_cmd);
  classify_cmd->add_option("--format", format, "json or csv");

  auto* kernel_cmd = app.add_subcommand("kernel", "transition matrix and eigenvalues of one branch");
  add_point_opts(kernel_cmd);
  kernel_cmd->add_option("--branch", branch, "branch index 1..7")->required();

  auto* extremality = app.add_subcommand("extremality", "KS/MSW report for one branch");
  add_point_opts(extremality);
  extremality->add_option("--branch", branch, "branch index 1..7")->required();

  auto* scan = app.add_subcommand("scan", "sweep theta at fixed p, one row per (theta, branch)");
  scan->add_option("--p", p, "interaction exponent p")->required();
  scan->add_option("--theta-min", theta_min, "grid start")->required();
  scan->add_option("--theta-max", theta_max, "grid end")->required();
  scan->add_option("--grid", grid, "number of theta samples");
  scan->add_option("--out", out_path, "output file (stdout when absent)");

  auto* thresholds = app.add_subcommand("thresholds", "named critical-theta suite at fixed p");
  thresholds->add_option("--p", p, "interaction exponent p")->required();
  thresholds->add_option("--format", format, "json or csv");

  auto* curve = app.add_subcommand("curve", "region-curve samples");
  curve->add_option("--name", curve_name, "m, M, delta0 or d0")->required();
  curve->add_option("--theta-min", theta_min, "range start")->required();
  curve->add_option("--theta-max", theta_max, "range end")->required();
  curve->add_option("--grid", grid, "number of samples");
  curve->add_option("--out", out_path, "output file (stdout when absent)");

  auto* verify_gamma = app.add_subcommand("verify-gamma", "brute-force check of the boundary-influence bound");
  add_point_opts(verify_gamma);
  verify_gamma->add_option("--branch", branch, "branch index 1..7");
  verify_gamma->add_option("--grid", grid, "simplex grid resolution");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      if (method == "iterate") {
        auto params = psos::ModelParams::make(theta, p, k_order, m_states);
        psos::TiOptions opt;
        opt.starts = starts;
        opt.damping = damping;
        auto res = psos::ti_fixed_points(params, opt);
        std::cout << psos::io::to_json(res).dump(2) << '\n';
        return 0;
      }
      auto set = psos::classify(psos::ModelParams::make(theta, p));
      for (const auto& pt : set.points)
        if (!(pt.residual < tol))
          throw psos::DomainError("solution failed the residual tolerance");
      if (format == "csv")
        std::cout << psos::io::solution_set_csv(set);
      else
        std::cout << psos::io::to_json(set).dump(2) << '\n';
      return 0;
    }
    if (classify_cmd->parsed()) {
      auto set = psos::classify(psos::ModelParams::make(theta, p));
      if (format == "csv") {
        std::cout << "theta,p,region,count,tolerance_ambiguity\n"
                  << psos::io::fmt17(theta) << ',' << psos::io::fmt17(p) << ','
                  << psos::to_string(set.region) << ',' << set.count << ','
                  << (set.tolerance_ambiguity ? "true" : "false") << '\n';
      } else {
        auto j = psos::io::to_json(set);
        j.erase("points");
        std::cout << j.dump(2) << '\n';
      }
      return 0;
    }
    if (kernel_cmd->parsed()) {
      auto params = psos::ModelParams::make(theta, p);
      auto pt = psos::branch_point(params, branch);
      auto kern = psos::build_kernel(pt, params);
      auto j = psos::io::to_json(kern);
      j["branch"] = branch;
      j["x"] = pt.x;
      j["y"] = pt.y;
      std::cout << j.dump(2) << '\n';
      return 0;
    }
    if (extremality->parsed()) {
      auto params = psos::ModelParams::make(theta, p);
      auto pt = psos::branch_point(params, branch);
      auto kern = psos::build_kernel(pt, params);
      auto rep = psos::msw_report(pt, params, kern);
      std::cout << psos::io::to_json(rep, branch).dump(2) << '\n';
      return 0;
    }
    if (scan->parsed()) {
      auto rows = psos::scan_rows(p, theta_min, theta_max, grid);
      write_or_print(psos::scan_csv(rows), out_path);
      return 0;
    }
    if (thresholds->parsed()) {
      auto suite = psos::paper_threshold_suite(p);
      if (format == "csv")
        std::cout << psos::io::threshold_suite_csv(suite);
      else
        std::cout << psos::io::to_json(suite, p).dump(2) << '\n';
      return 0;
    }
    if (curve->parsed()) {
      psos::CurveName name;
      if (curve_name == "m") name = psos::CurveName::M_SMALL;
      else if (curve_name == "M") name = psos::CurveName::M_BIG;
      else if (curve_name == "delta0") name = psos::CurveName::DELTA0;
      else if (curve_name == "d0") name = psos::CurveName::D0;
      else throw psos::DomainError("unknown curve: " + curve_name);
      auto samples = psos::trace_curve(name, theta_min, theta_max, grid);
      write_or_print(psos::io::curve_csv(samples), out_path);
      return 0;
    }
    if (verify_gamma->parsed()) {
      auto params = psos::ModelParams::make(theta, p);
      if (theta >= 1.0)
        throw psos::DomainError("verify-gamma requires theta < 1");
      auto pt = psos::branch_point(params, branch);
      auto rep = psos::verify_gamma_lemma(params, pt, grid);
      std::cout << psos::io::to_json(rep).dump(2) << '\n';
      return 0;
    }
  } catch (const psos::BranchAbsent& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBranchAbsent;
  } catch (const psos::BranchVanished& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBranchAbsent;
  } catch (const psos::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
