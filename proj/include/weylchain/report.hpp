#pragma once

// Structured outcome of a verification run.

#include <cstdint>
#include <string>
#include <vector>

#include "weylchain/rootdata.hpp"

namespace weylchain {

struct Check {
  enum class Status { Pass, Fail, SkippedScale };
  std::string id;
  std::string description;
  std::string expected;
  std::string observed;
  Status status = Status::Pass;
};

struct Params {
  Family family = Family::B;
  int n = 0;
  int k = 0;
  long p = 2;
};

struct Report {
  std::string suite;
  Params params;
  std::vector<Check> checks;
  std::int64_t wall_time_ms = 0;

  bool all_pass() const {
    for (const auto& c : checks)
      if (c.status == Check::Status::Fail) return false;
    return true;
  }

  void add(const std::string& id, const std::string& description,
           const std::string& expected, const std::string& observed) {
    checks.push_back({id, description, expected, observed,
                      expected == observed ? Check::Status::Pass : Check::Status::Fail});
  }
  void add_flag(const std::string& id, const std::string& description, bool ok) {
    add(id, description, "true", ok ? "true" : "false");
  }
  void add_skipped(const std::string& id, const std::string& description,
                   const std::string& why) {
    checks.push_back({id, description, "", why, Check::Status::SkippedScale});
  }
};

std::string to_json(const Report& r);
std::string to_json(const std::vector<Report>& rs);
std::string to_text(const Report& r);

// Resource caps; exceeded caps raise ScaleError rather than thrash.
struct ScaleGuard {
  int max_n = 5;
  std::size_t max_wedge_dim = 25000;
  std::size_t max_nodes = 64;
  std::size_t max_primitive_dim = 20;
};

}  // namespace weylchain
