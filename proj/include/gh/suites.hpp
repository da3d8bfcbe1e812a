#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "gh/report.hpp"

namespace gh {

inline constexpr const char* kReportSchema = "gh-report/1";

struct SuiteSpec {
  std::string suite = "all";
  std::string group;    // empty: every applicable corpus target
  std::string algebra;  // hopf-axioms and confluence only
  int bound = 4;
  int degree = 6;
  int samples = 200;
  uint64_t seed = 1;
};

struct SuiteInfo {
  std::string name, description, anchor;
};
const std::vector<SuiteInfo>& suite_registry();

// Targets a suite runs on by default; `group` of a spec must be one of these.
std::vector<std::string> suite_targets(const std::string& suite);

// Runs the suite (or every suite for "all") and returns records sorted by id. Throws UnknownSuite,
// UnknownGroup, UnsupportedGroup or MalformedDefinition.
Report run_suite(const SuiteSpec& spec);

// Versioned document: schema, spec, body (deterministic) and a separate timing section.
nlohmann::ordered_json report_document(const SuiteSpec& spec, const Report& rep, double seconds);
nlohmann::ordered_json spec_json(const SuiteSpec& spec);

}  // namespace gh
