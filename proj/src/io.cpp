#include "psos/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace psos::io {

std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

nlohmann::json to_json(const LawPoint& pt) {
  return {{"branch", pt.branch},
          {"x", pt.x},
          {"y", pt.y},
          {"residual", pt.residual}};
}

nlohmann::json to_json(const SolutionSet& set) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& pt : set.points) pts.push_back(to_json(pt));
  nlohmann::json j{{"schema", kSchema},
                   {"theta", set.params.theta},
                   {"p", set.params.p},
                   {"region", to_string(set.region)},
                   {"count", set.count},
                   {"tolerance_ambiguity", set.tolerance_ambiguity},
                   {"points", pts},
                   {"delta", set.cubic.delta}};
  if (set.have_xi) {
    j["bigD"] = set.xi.bigD;
    j["c1_satisfied"] = set.xi.c1_satisfied;
    j["c2_satisfied"] = {set.xi.c2_satisfied[0], set.xi.c2_satisfied[1],
                         set.xi.c2_satisfied[2], set.xi.c2_satisfied[3]};
  }
  return j;
}

nlohmann::json to_json(const TransitionKernel& k) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : k.P) rows.push_back({row[0], row[1], row[2]});
  return {{"schema", kSchema},
          {"P", rows},
          {"Z", k.Z},
          {"lambda1", k.lambda1},
          {"lambda2", k.lambda2},
          {"lambda_max", k.lambda_max},
          {"complex_pair", k.complex_pair}};
}

nlohmann::json to_json(const ExtremalityReport& rep, int branch) {
  return {{"schema", kSchema},
          {"branch", branch},
          {"kappa", rep.kappa},
          {"gamma_bound", rep.gamma_bound},
          {"U", rep.U},
          {"eta", rep.eta},
          {"verdict", to_string(rep.verdict)},
          {"msw_domain_restricted", rep.msw_domain_restricted}};
}

nlohmann::json to_json(const GammaLemmaReport& rep) {
  return {{"schema", kSchema},
          {"max_abs", rep.max_abs},
          {"bound", rep.bound},
          {"holds", rep.holds},
          {"f_edge_diag", rep.f_edge_diag},
          {"f_edge_u0", rep.f_edge_u0},
          {"bound_half_exp", rep.bound_half_exp}};
}

nlohmann::json to_json(const std::vector<ThresholdEntry>& suite, double p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : suite) {
    nlohmann::json je{{"name", e.name},
                      {"defined", e.defined},
                      {"quantity", e.quantity},
                      {"bracket", {e.bracket_lo, e.bracket_hi}}};
    if (e.defined)
      je["theta"] = e.theta;
    else
      je["note"] = e.note;
    arr.push_back(je);
  }
  return {{"schema", kSchema}, {"p", p}, {"thresholds", arr}};
}

nlohmann::json to_json(const TiResult& res) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& lv : res.points)
    arr.push_back({{"z", lv.z}, {"residual", lv.residual}});
  return {{"schema", kSchema},
          {"fixed_points", arr},
          {"non_converged_starts", res.non_converged}};
}

std::string solution_set_csv(const SolutionSet& set) {
  std::ostringstream os;
  os << "theta,p,branch,x,y,residual,region,count\n";
  for (const auto& pt : set.points) {
    os << fmt17(set.params.theta) << ',' << fmt17(set.params.p) << ','
       << pt.branch << ',' << fmt17(pt.x) << ',' << fmt17(pt.y) << ','
       << fmt17(pt.residual) << ',' << to_string(set.region) << ','
       << set.count << '\n';
  }
  return os.str();
}

std::string threshold_suite_csv(const std::vector<ThresholdEntry>& suite) {
  std::ostringstream os;
  os << "name,defined,theta,quantity,bracket_lo,bracket_hi,note\n";
  for (const auto& e : suite) {
    os << e.name << ',' << (e.defined ? "true" : "false") << ','
       << (e.defined ? fmt17(e.theta) : "") << ',' << '"' << e.quantity << '"'
       << ',' << fmt17(e.bracket_lo) << ',' << fmt17(e.bracket_hi) << ',' << '"'
       << e.note << '"' << '\n';
  }
  return os.str();
}

std::string curve_csv(const std::vector<CurveSample>& samples) {
  std::ostringstream os;
  os << "theta,value\n";
  for (const auto& s : samples) {
    os << fmt17(s.theta) << ',';
    if (s.value) os << fmt17(*s.value);
    os << '\n';
  }
  return os.str();
}

}  // namespace psos::io
