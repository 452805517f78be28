#pragma once

#include "segre/rank.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace segre {

struct GoldenTable {
  std::vector<int> a;
  std::string m2;
};

/// Published Betti tables, in the layout produced by BettiTable::to_m2().
const std::vector<GoldenTable>& golden_tables();

struct SelftestResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestOptions {
  RankBackend backend = RankBackend::modular;
  unsigned threads = 1;
};

/// Golden tables plus the property suites. When `progress` is set, one line
/// per item is written as soon as the item finishes.
std::vector<SelftestResult> run_selftest(const SelftestOptions& options, std::ostream* progress = nullptr);

} // namespace segre
