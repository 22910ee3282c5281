#pragma once

// Enumerations of small inputs shared by the unit and acceptance tests.

#include <cstddef>
#include <vector>

#include "springer/pab.hpp"
#include "springer/partition.hpp"

namespace fixture {

using springer::IndexedPair;
using springer::Partition;

// Partitions of any size with exactly `len` parts, each at most max_part.
inline std::vector<Partition> padded_parts(std::size_t len, int max_part) {
  std::vector<Partition> out;
  for (int total = 0; total <= max_part * static_cast<int>(len); ++total)
    for (auto& p : springer::enumerate_partitions(total, len, max_part)) out.push_back(p.padded(len));
  return out;
}

// Every (alpha, beta, order) with n + m <= max_nm and parts <= max_part.
inline std::vector<IndexedPair> small_pairs(std::size_t max_nm, int max_part) {
  std::vector<IndexedPair> out;
  for (std::size_t n = 0; n <= max_nm; ++n)
    for (std::size_t m = 0; n + m <= max_nm; ++m)
      for (const auto& order : springer::enumerate_orders(n, m))
        for (const auto& a : padded_parts(n, max_part))
          for (const auto& b : padded_parts(m, max_part)) out.emplace_back(a, b, order);
  return out;
}

}  // namespace fixture
