#pragma once

// Small result-aggregation types shared by the semantic checks and the
// verification suites. A Report is a flat list of named pass/fail
// checks; suites stitch several Reports together.

#include <cstddef>
#include <string>
#include <vector>

namespace ddrs {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // human-readable evidence, empty when uninteresting
};

struct Report {
  std::string title;
  std::vector<CheckResult> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks)
      if (!c.passed) ++n;
    return n;
  }

  void add(std::string name, bool passed, std::string detail = "") {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
};

}  // namespace ddrs
