#pragma once

// Exhaustive sweeps over all couples up to a given size, as run by the
// `verify` command.

#include <cstddef>
#include <string>
#include <vector>

namespace springer {

struct SweepOutcome {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Known sweep names, in run order.
const std::vector<std::string>& sweep_names();

// max_two_n: largest 2N covered. jobs = 0 picks the hardware concurrency.
SweepOutcome run_sweep(const std::string& name, int max_two_n, unsigned jobs = 0);

}  // namespace springer
