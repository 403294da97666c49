#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace starcone {

// One acceptance check: stable name, outcome, and a one line account with
// the measured numbers.
struct CriterionResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOutput {
  std::vector<CriterionResult> results;
  // CSV artifacts (filename, content) in a fixed order. The library never
  // touches the filesystem; callers decide where these land.
  std::vector<std::pair<std::string, std::string>> artifacts;
  bool all_passed = false;
};

// Runs the whole acceptance battery. Deterministic given the seed, which
// feeds only the random polygon and rigid motion draws.
VerifyOutput run_verification(std::uint64_t seed);

}  // namespace starcone
