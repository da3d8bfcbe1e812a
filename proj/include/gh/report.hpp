#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace gh {

struct CheckRecord {
  std::string id;
  std::string identity;
  std::string inputs;
  std::string expected;
  std::string got;
  std::string anchor;
  bool pass = true;
  bool control = false;
};

class Report {
 public:
  void add(CheckRecord r) { records_.push_back(std::move(r)); }
  void merge(const Report& o);
  // Adds a record that passes iff `corrupted` contains at least one failure.
  void add_control(const std::string& id, const std::string& identity, const std::string& anchor,
                   const Report& corrupted);

  // Extra data embedded in the body under "artifacts", keyed and ordered by name.
  void attach(const std::string& key, nlohmann::ordered_json value) { artifacts_[key] = std::move(value); }
  const std::vector<CheckRecord>& records() const { return records_; }
  bool ok() const { return failures() == 0; }
  size_t failures() const;
  const CheckRecord* first_failure() const;
  void sort();

  // Deterministic part of the report.
  nlohmann::ordered_json body() const;
  std::string text() const;

 private:
  std::vector<CheckRecord> records_;
  std::map<std::string, nlohmann::ordered_json> artifacts_;
};

// Tallies one identity over many cases and keeps the first counterexample.
struct Tally {
  std::string id, identity, anchor;
  size_t cases = 0, failures = 0;
  std::string input, expected, got;

  void check(bool ok, const std::string& in, const std::string& exp, const std::string& g);
  CheckRecord record() const;
};

}  // namespace gh
