#include "ga/report.hpp"

#include <sstream>

#include "json.hpp"

namespace ga {

std::string report_to_json(const Report& r) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : r.checks)
    arr.push_back({{"check", c.check}, {"status", c.pass ? "pass" : "fail"}, {"witness", c.witness}});
  return arr.dump(2) + "\n";
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  for (const auto& c : r.checks) {
    os << (c.pass ? "pass" : "FAIL") << "  " << c.check;
    if (!c.witness.empty()) os << "  [" << c.witness << "]";
    os << "\n";
  }
  return os.str();
}

}  // namespace ga
