#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "psos/extremality.hpp"
#include "psos/law.hpp"
#include "psos/recursion.hpp"
#include "psos/thresholds.hpp"

namespace psos::io {

inline constexpr const char* kSchema = "psos-gibbs/1";

// Shortest round-trip-exact decimal form of a double (17 significant
// digits), '.' decimal point. CSV cells and hand-rolled numeric output go
// through this so files are byte-stable.
std::string fmt17(double v);

nlohmann::json to_json(const LawPoint& pt);
nlohmann::json to_json(const SolutionSet& set);
nlohmann::json to_json(const TransitionKernel& k);
nlohmann::json to_json(const ExtremalityReport& rep, int branch);
nlohmann::json to_json(const GammaLemmaReport& rep);
nlohmann::json to_json(const std::vector<ThresholdEntry>& suite, double p);
nlohmann::json to_json(const TiResult& res);

// CSV renderings (fixed headers, deterministic order).
std::string solution_set_csv(const SolutionSet& set);
std::string threshold_suite_csv(const std::vector<ThresholdEntry>& suite);
std::string curve_csv(const std::vector<CurveSample>& samples);

}  // namespace psos::io
