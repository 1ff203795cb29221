#pragma once

#include <string>
#include <vector>

namespace ga {

struct CheckResult {
  std::string check;
  bool pass = false;
  std::string witness;  // failing blade pair or sample, empty on pass
};

struct Report {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string check, bool pass, std::string witness = "") {
    checks.push_back({std::move(check), pass, std::move(witness)});
  }
};

std::string report_to_json(const Report& r);
std::string report_to_text(const Report& r);

}  // namespace ga
