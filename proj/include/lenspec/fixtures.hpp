#pragma once

#include <string>
#include <vector>

namespace lenspec::fixtures {

struct FixtureResult {
  std::string name;
  int criterion = 0;  // acceptance criterion the fixture belongs to, 0 = none
  bool passed = false;
  std::string detail;
};

/// Runs the built-in reference fixtures (worked examples with published
/// values). `filter` is a substring match on fixture names; empty runs all.
std::vector<FixtureResult> run_paper_fixtures(const std::string& filter = "");

}  // namespace lenspec::fixtures
