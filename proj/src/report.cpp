#include "gh/report.hpp"

#include <algorithm>
#include <sstream>

namespace gh {

void Report::merge(const Report& o) {
  records_.insert(records_.end(), o.records_.begin(), o.records_.end());
  for (const auto& [k, v] : o.artifacts_) artifacts_[k] = v;
}

void Report::add_control(const std::string& id, const std::string& identity, const std::string& anchor,
                         const Report& corrupted) {
  CheckRecord r;
  r.id = id;
  r.identity = identity;
  r.anchor = anchor;
  r.control = true;
  r.expected = "corrupted input is rejected";
  const CheckRecord* f = corrupted.first_failure();
  r.pass = f != nullptr;
  if (f) {
    r.inputs = f->id;
    r.got = "rejected: " + f->identity + " [" + f->got + "]";
  } else {
    r.got = "accepted (" + std::to_string(corrupted.records().size()) + " checks passed)";
  }
  add(std::move(r));
}

size_t Report::failures() const {
  size_t n = 0;
  for (const auto& r : records_) n += !r.pass;
  return n;
}

const CheckRecord* Report::first_failure() const {
  for (const auto& r : records_)
    if (!r.pass) return &r;
  return nullptr;
}

void Report::sort() {
  std::stable_sort(records_.begin(), records_.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
}

nlohmann::ordered_json Report::body() const {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& r : records_) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["pass"] = r.pass;
    j["control"] = r.control;
    j["identity"] = r.identity;
    j["inputs"] = r.inputs;
    j["expected"] = r.expected;
    j["got"] = r.got;
    j["anchor"] = r.anchor;
    checks.push_back(std::move(j));
  }
  nlohmann::ordered_json b;
  b["status"] = ok() ? "pass" : "fail";
  b["total"] = records_.size();
  b["failures"] = failures();
  b["checks"] = std::move(checks);
  if (!artifacts_.empty()) {
    nlohmann::ordered_json a = nlohmann::ordered_json::object();
    for (const auto& [k, v] : artifacts_) a[k] = v;
    b["artifacts"] = std::move(a);
  }
  return b;
}

std::string Report::text() const {
  std::ostringstream os;
  for (const auto& r : records_) {
    os << (r.pass ? "PASS " : "FAIL ") << r.id << (r.control ? " (control)" : "") << "\n";
    os << "  " << r.identity << "\n";
    if (!r.inputs.empty()) os << "  inputs:   " << r.inputs << "\n";
    if (!r.pass || r.control) {
      os << "  expected: " << r.expected << "\n";
      os << "  got:      " << r.got << "\n";
    }
  }
  os << (ok() ? "status: pass" : "status: fail") << " (" << records_.size() << " checks, " << failures()
     << " failures)\n";
  return os.str();
}

void Tally::check(bool ok, const std::string& in, const std::string& exp, const std::string& g) {
  ++cases;
  if (ok) return;
  if (failures++ == 0) {
    input = in;
    expected = exp;
    got = g;
  }
}

CheckRecord Tally::record() const {
  CheckRecord r;
  r.id = id;
  r.identity = identity;
  r.anchor = anchor;
  r.pass = failures == 0;
  if (r.pass) {
    r.inputs = std::to_string(cases) + " cases";
    r.expected = "equal";
    r.got = "equal on all " + std::to_string(cases) + " cases";
  } else {
    r.inputs = input;
    r.expected = expected;
    r.got = got + " (" + std::to_string(failures) + "/" + std::to_string(cases) + " cases fail)";
  }
  return r;
}

}  // namespace gh
