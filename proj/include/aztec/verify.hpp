#pragma once

#include <string>
#include <vector>

#include "aztec/limits.hpp"
#include "aztec/transfer.hpp"

namespace aztec {

struct VerifyOptions {
  // Regions up to this many squares join the oracle comparison.
  int max_squares = 36;
  // Seeds for the bar recurrence under test.
  transfer::BarSeeds seeds = transfer::BarSeeds::standard();
  Limits limits;
};

struct SuiteResult {
  std::string name;
  int checks = 0;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

// Suites, in order: bar-recurrence, structure, closed-form, oracle-equivalence,
// parity, symmetry, rectangle, bijection.
std::vector<SuiteResult> run_verification(const VerifyOptions& options);

}  // namespace aztec
