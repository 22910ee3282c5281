#pragma once

// Generalized Springer correspondence for symplectic partitions:
// (lambda, epsilon) <-> (k, alpha, beta), the sign twist, the order read off
// the merged symbol, and the U/V sequences.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "springer/pab.hpp"
#include "springer/partition.hpp"

namespace springer {

struct SymbolPair {
  RatSeq a_side;
  RatSeq b_side;

  friend bool operator==(const SymbolPair&, const SymbolPair&) = default;
  friend bool operator<(const SymbolPair& x, const SymbolPair& y) {
    if (!(x.a_side == y.a_side)) return x.a_side < y.a_side;
    return x.b_side < y.b_side;
  }
};

// alpha has length r + floor(k/2) + 1, beta has length r - floor(k/2).
struct SpringerDatum {
  int k = 0;
  Partition alpha;
  Partition beta;
  std::size_t r = 0;

  SpringerDatum() = default;
  SpringerDatum(int k, Partition alpha, Partition beta, std::size_t r);
  int half_size() const;

  friend bool operator==(const SpringerDatum&, const SpringerDatum&) = default;
};

std::size_t alpha_length(int k, std::size_t r);
std::size_t beta_length(int k, std::size_t r);

// r = N.
std::size_t default_rank(const MarkedSymplectic& ms);

// Signs eps(1..2r+1) as a 0-based vector of length 2r+1.
std::vector<int> epsilon_on_indices(const MarkedSymplectic& ms, std::size_t r);

int m_value(const MarkedSymplectic& ms);
int k_of(const MarkedSymplectic& ms);

SymbolPair sharp_symbols(const Partition& lambda, std::size_t r);
// The two constructions separately; sharp_symbols asserts they agree.
SymbolPair sharp_symbols_by_parity_split(const Partition& lambda, std::size_t r);
SymbolPair sharp_symbols_by_formula(const Partition& lambda, std::size_t r);

SymbolPair marked_symbols(const MarkedSymplectic& ms, std::size_t r);
// Closed form for partitions with only even parts.
SymbolPair marked_symbols_even(const MarkedSymplectic& ms, std::size_t r);

SymbolPair pair_symbols(const SpringerDatum& sd);

SpringerDatum springer_to_pair(const MarkedSymplectic& ms, std::optional<std::size_t> r = std::nullopt);
MarkedSymplectic pair_to_springer(const SpringerDatum& sd);

MarkedSymplectic sign_twist(const MarkedSymplectic& ms);

// Parameters (n, m, 2r+k, 2r-k-1, 2) attached to a datum.
Params springer_params(const SpringerDatum& sd);
ShuffleOrder order_from_pair(const SpringerDatum& sd);

std::pair<RatSeq, RatSeq> u_v_sequences(const MarkedSymplectic& ms, std::size_t r);

}  // namespace springer
