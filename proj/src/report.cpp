#include "weylchain/report.hpp"

#include <json.hpp>

#include <sstream>

namespace weylchain {

namespace {
const char* status_name(Check::Status s) {
  switch (s) {
    case Check::Status::Pass: return "pass";
    case Check::Status::Fail: return "fail";
    case Check::Status::SkippedScale: return "skipped-scale";
  }
  return "?";
}

nlohmann::ordered_json report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["params"] = {{"family", family_name(r.params.family)},
                 {"n", r.params.n},
                 {"k", r.params.k},
                 {"p", r.params.p}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["id"] = c.id;
    cj["description"] = c.description;
    cj["expected"] = c.expected;
    cj["observed"] = c.observed;
    cj["status"] = status_name(c.status);
    j["checks"].push_back(cj);
  }
  j["wall_time_ms"] = r.wall_time_ms;
  return j;
}
}  // namespace

std::string to_json(const Report& r) { return report_json(r).dump(2); }

std::string to_json(const std::vector<Report>& rs) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& r : rs) j.push_back(report_json(r));
  return j.dump(2);
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "suite " << r.suite << " (family=" << family_name(r.params.family)
     << " n=" << r.params.n << " k=" << r.params.k << " p=" << r.params.p << ")\n";
  for (const auto& c : r.checks) {
    os << "  [" << status_name(c.status) << "] " << c.id << ": " << c.description;
    if (c.status == Check::Status::Fail)
      os << " (expected " << c.expected << ", observed " << c.observed << ")";
    else if (!c.observed.empty() && c.status == Check::Status::Pass)
      os << " = " << c.observed;
    os << "\n";
  }
  return os.str();
}

}  // namespace weylchain
