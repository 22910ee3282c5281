#pragma once

// Exact scalars, fixed-length sequences, partitions and marked symplectic
// partitions. All indices in this API are 0-based; lengths are significant
// unless a function says it compares shapes.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace springer {

using Rat = boost::rational<std::int64_t>;

bool is_integer(const Rat& x);
std::string to_string(const Rat& x);

// Weakly decreasing sequence of rationals of fixed length.
class RatSeq {
 public:
  RatSeq() = default;
  explicit RatSeq(std::vector<Rat> entries);
  RatSeq(std::initializer_list<Rat> entries);

  const std::vector<Rat>& entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }
  const Rat& operator[](std::size_t i) const { return entries_[i]; }
  bool empty() const { return entries_.empty(); }
  Rat sum() const;
  // True when no value occurs twice.
  bool multiplicity_free() const;

  friend bool operator==(const RatSeq& a, const RatSeq& b) { return a.entries_ == b.entries_; }
  friend bool operator<(const RatSeq& a, const RatSeq& b) { return a.entries_ < b.entries_; }

 private:
  std::vector<Rat> entries_;
};

// Weakly decreasing sequence of nonnegative integers of fixed length.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);
  static Partition zeros(std::size_t n);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  // parts_[i], or 0 past the end.
  int part_or_zero(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  long sum() const;
  std::size_t nonzero_count() const;
  bool empty() const { return parts_.empty(); }

  Partition trimmed() const;
  // Zero-pads to len; throws if that would drop a nonzero part.
  Partition padded(std::size_t len) const;
  bool shape_eq(const Partition& other) const;
  RatSeq to_rat() const;
  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

 private:
  std::vector<int> parts_;
};

// A pair (nu, mu) of partitions.
struct BiPartition {
  Partition nu;
  Partition mu;

  friend bool operator==(const BiPartition&, const BiPartition&) = default;
  friend bool operator<(const BiPartition& a, const BiPartition& b) {
    if (a.nu == b.nu) return a.mu < b.mu;
    return a.nu < b.nu;
  }
};

Rat partial_sum(const RatSeq& seq, std::size_t k);
long partial_sum(const Partition& p, std::size_t k);

bool dominance_leq(const RatSeq& a, const RatSeq& b);
bool dominance_leq(const Partition& a, const Partition& b);
// Dominance after padding both to a common length.
bool shape_dominance_leq(const Partition& a, const Partition& b);

RatSeq sorted_union(const RatSeq& a, const RatSeq& b);
Partition sorted_union(const Partition& a, const Partition& b);
RatSeq pointwise_add(const RatSeq& a, const RatSeq& b);
Partition pointwise_add(const Partition& a, const Partition& b);
// Entrywise a - b; throws unless the result is a RatSeq.
RatSeq pointwise_sub(const RatSeq& a, const RatSeq& b);
RatSeq scale(const RatSeq& a, const Rat& c);

// (R, R-s, ..., R2); empty when R2 = R + s.
RatSeq arith_progression(const Rat& R, const Rat& R2, const Rat& s);

Partition transpose(const Partition& p, std::optional<std::size_t> length = std::nullopt);
std::size_t multiplicity(const Partition& p, int i);
bool is_symplectic(const Partition& p);
// Distinct even parts, decreasing.
std::vector<int> jord_bp(const Partition& p);

// Partitions of total with at most max_len parts, each at most max_part
// (negative = unbounded). Trimmed, lexicographically decreasing.
std::vector<Partition> enumerate_partitions(int total, std::size_t max_len, int max_part = -1);
std::vector<Partition> enumerate_symplectic(int two_n);

// Sign per value of jord_bp, keyed decreasing.
using SignMap = std::map<int, int, std::greater<int>>;

class MarkedSymplectic {
 public:
  MarkedSymplectic() = default;
  // lambda is stored trimmed; epsilon must be keyed by exactly jord_bp(lambda).
  MarkedSymplectic(const Partition& lambda, SignMap epsilon);

  const Partition& lambda() const { return lambda_; }
  const SignMap& epsilon() const { return epsilon_; }
  int sign(int part) const;
  int half_size() const { return static_cast<int>(lambda_.sum() / 2); }
  bool all_even() const;
  std::string str() const;

  friend bool operator==(const MarkedSymplectic&, const MarkedSymplectic&) = default;
  friend bool operator<(const MarkedSymplectic& a, const MarkedSymplectic& b) {
    if (a.lambda_ == b.lambda_) return a.epsilon_ < b.epsilon_;
    return a.lambda_ < b.lambda_;
  }

 private:
  Partition lambda_;
  SignMap epsilon_;
};

// Partitions decreasing lexicographically; signs enumerate + before -, the
// largest part varying slowest.
std::vector<MarkedSymplectic> enumerate_marked(int two_n);

std::vector<BiPartition> enumerate_bipartitions(int n, std::size_t len_a, std::size_t len_b);

}  // namespace springer
