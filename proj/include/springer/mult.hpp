#pragma once

// The multiplicity mult(alpha, beta; nu, mu): a signed count of transfer
// vectors, plus the first-index recursion that computes it faster.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "springer/pab.hpp"
#include "springer/partition.hpp"

namespace springer {

// Cross pair p <_I q with p, q on different sides. `lo` is the earlier index
// on side `lo_side`, `hi` the later index on the other side.
struct CrossPair {
  Side lo_side;
  std::size_t lo;
  std::size_t hi;

  friend auto operator<=>(const CrossPair&, const CrossPair&) = default;
};

std::vector<CrossPair> cross_pairs(const ShuffleOrder& order);

using ShiftVector = std::map<CrossPair, long>;

// x_{p,q} moves units from the later position q to the earlier position p.
std::pair<std::vector<long>, std::vector<long>> shift_apply(const IndexedPair& pair, const ShiftVector& x);

// out[i] = seq[w[i]] + i - w[i].
std::vector<long> twist(const std::vector<long>& seq, const std::vector<std::size_t>& w);

// Number of x in N^J with shift_apply(pair, x) == (nu_t, mu_t).
long x_solution_count(const IndexedPair& pair, const std::vector<long>& nu_t, const std::vector<long>& mu_t);

struct MultResult {
  long value = 0;
  // (w, v) -> sgn(w) sgn(v) |X|, nonzero terms only.
  std::optional<std::map<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>, long>> audit;
};

MultResult mult_bruteforce(const IndexedPair& pair, const Partition& nu, const Partition& mu, bool keep_audit = false);

// mu' of length m with mu'_1 >= mu_1 >= mu'_2 >= ... >= mu'_m >= mu_m and
// alpha1 + S(mu') - S(mu) = target.
std::set<Partition> q_set(int alpha1, long target, const Partition& mu);

long mult_recursive(const IndexedPair& pair, const Partition& nu, const Partition& mu);

void clear_mult_cache();

}  // namespace springer
