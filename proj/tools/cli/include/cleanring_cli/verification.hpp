#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cleanring/cleanness.hpp"

namespace cleanring::cli {

// One compared field of a verification case.
struct CheckResult {
  std::string description;
  std::string tag;  // PAPER or DERIVED
  nlohmann::json expected;
  nlohmann::json actual;
  bool passed = false;
  std::string detail;
};

struct CaseResult {
  std::string id;
  std::string statement;
  bool passed = true;
  std::vector<CheckResult> checks;
  nlohmann::json witnesses = nlohmann::json::array();
  double elapsed_ms = 0;
};

struct SuiteOptions {
  std::string filter;  // substring of the case id; empty selects all
  Limits limits;
  ClassifyOptions classify;
};

// The pinned fleet and case list compiled into the binary.
const std::string& embedded_fixture();

std::vector<std::string> fleet_specs(const nlohmann::json& fixture);

// Runs the selected cases in id order.
std::vector<CaseResult> run_verification(const nlohmann::json& fixture, const SuiteOptions& options);

nlohmann::json case_to_json(const CaseResult& result);
std::string case_to_text(const CaseResult& result);

}  // namespace cleanring::cli
