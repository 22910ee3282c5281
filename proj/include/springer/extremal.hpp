#pragma once

// Extremal couples: the closed recursion bar(), the route through the
// constrained set P_{A,B;2}, multiplicity tables and their verification.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "springer/correspondence.hpp"
#include "springer/partition.hpp"

namespace springer {

// One step of the bar recursion. Index sets are 1-based.
struct BarTrace {
  std::size_t r = 0;
  MarkedSymplectic source;
  std::vector<std::size_t> frak_s;
  std::vector<std::size_t> j_a;
  std::vector<std::size_t> j_b;
  int bar_first = 0;
  MarkedSymplectic derived;
};

// Needs only even parts, N > 0 and lambda of length at most 2r.
BarTrace bar_step(const MarkedSymplectic& ms, std::size_t r);

// Smallest r usable by bar_step.
std::size_t bar_rank(const MarkedSymplectic& ms);

// Steps taken by bar(ms), outermost first.
std::vector<BarTrace> bar_chain(const MarkedSymplectic& ms);
MarkedSymplectic bar(const MarkedSymplectic& ms);

long mult_pair(const MarkedSymplectic& ms, const MarkedSymplectic& target);

struct MultTable {
  MarkedSymplectic source;
  std::map<MarkedSymplectic, long> entries;  // nonzero only
};
MultTable mult_table(const MarkedSymplectic& ms);

// Element of the constrained singleton, without cross checks.
MarkedSymplectic lambda_max_pset(const MarkedSymplectic& ms);
// As above, asserted equal to bar(ms) and to preserve k.
MarkedSymplectic lambda_max(const MarkedSymplectic& ms);
// Whether P_{A/2,B/2;1/2} and P_{A,B;2} agree for the source's order.
bool half_step_identity(const MarkedSymplectic& ms);
MarkedSymplectic lambda_min(const MarkedSymplectic& ms);

struct ExtremalReport {
  MarkedSymplectic source;
  MarkedSymplectic max;
  MarkedSymplectic min;
  bool source_entry_one = false;  // mult(ms; ms) == 1
  bool max_entry_one = false;
  bool max_strict = false;        // others strictly below max
  bool min_entry_one = false;
  bool min_strict = false;        // others strictly above min (pulled back)
  bool above_source = false;      // others strictly above the source
  bool twist_consistent = false;  // twist(min) == max
  std::vector<std::string> failures;

  bool max_ok() const { return max_entry_one && max_strict; }
  bool min_ok() const { return min_entry_one && min_strict && twist_consistent; }
  bool pass() const { return failures.empty(); }
};
ExtremalReport verify_extremal(const MarkedSymplectic& ms);

// Strict dominance of shapes.
bool shape_dominance_less(const Partition& a, const Partition& b);

}  // namespace springer
