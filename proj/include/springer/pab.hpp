#pragma once

// Ordered index sets, procedures (a)/(b), the sets P, P_{A,B;s}, P^{b[c]},
// symbols and the auxiliary maps built on them.

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "springer/partition.hpp"

namespace springer {

enum class Side { a, b };

// Total order on {A-indices} u {B-indices}, stored as a word over {A,B}.
// The i-th 'A' is alpha index i, the j-th 'B' is beta index j (0-based);
// word position is rank.
class ShuffleOrder {
 public:
  ShuffleOrder() = default;
  explicit ShuffleOrder(std::string word);
  // n copies of A followed by m copies of B.
  static ShuffleOrder blocks(std::size_t n, std::size_t m);

  const std::string& word() const { return word_; }
  std::size_t n() const { return rank_a_.size(); }
  std::size_t m() const { return rank_b_.size(); }
  std::size_t size() const { return word_.size(); }
  std::size_t rank(Side side, std::size_t idx) const;
  bool a_before_b(std::size_t i, std::size_t j) const { return rank_a_[i] < rank_b_[j]; }
  // Word with the given indices removed.
  ShuffleOrder without(const std::vector<std::size_t>& drop_a, const std::vector<std::size_t>& drop_b) const;
  // Word keeping only the first n A's and first m B's.
  ShuffleOrder prefix_restriction(std::size_t n, std::size_t m) const;

  friend bool operator==(const ShuffleOrder& a, const ShuffleOrder& b) { return a.word_ == b.word_; }
  friend bool operator<(const ShuffleOrder& a, const ShuffleOrder& b) { return a.word_ < b.word_; }

 private:
  std::string word_;
  std::vector<std::size_t> rank_a_, rank_b_;
};

// All words with n A's and m B's, lexicographic.
std::vector<ShuffleOrder> enumerate_orders(std::size_t n, std::size_t m);

struct IndexedPair {
  Partition alpha;
  Partition beta;
  ShuffleOrder order;

  IndexedPair() = default;
  IndexedPair(Partition alpha, Partition beta, ShuffleOrder order);
  std::size_t n() const { return alpha.length(); }
  std::size_t m() const { return beta.length(); }
  // (1,0) <_I (1,1), vacuously true when either side is empty.
  bool a_first() const;
  std::string str() const;

  friend bool operator==(const IndexedPair&, const IndexedPair&) = default;
  friend bool operator<(const IndexedPair& x, const IndexedPair& y) {
    if (!(x.alpha == y.alpha)) return x.alpha < y.alpha;
    if (!(x.beta == y.beta)) return x.beta < y.beta;
    return x.order < y.order;
  }
};

struct Params {
  std::size_t N = 0, M = 0;
  Rat A = 0, B = 0, s = 1;

  // Throws unless N >= n, M >= m, s > 0, A >= s(N-1) when N > 0, B >= s(M-1) when M > 0.
  void validate_for(std::size_t n, std::size_t m) const;
  Params after(Side side) const;
};

struct Symbol {
  RatSeq lam_a;
  RatSeq lam_b;
  Rat s;
};

struct StepResult {
  int part = 0;
  IndexedPair residual;
  std::vector<std::size_t> chain_a, chain_b;
};

StepResult step_a(const IndexedPair& pair);
StepResult step_b(const IndexedPair& pair);
StepResult step(const IndexedPair& pair, Side side);

using BiSet = std::set<BiPartition>;

BiSet p_set(const IndexedPair& pair);
// Same set, recursing without the trailing-zero normal form.
BiSet p_set_direct(const IndexedPair& pair);

struct ProcedureGate {
  bool a_ok = false;
  bool b_ok = false;
};
ProcedureGate allowed_procedures(const IndexedPair& pair, const Params& p);

BiSet p_constrained_set(const IndexedPair& pair, const Params& p);
BiSet p_constrained_set_direct(const IndexedPair& pair, const Params& p);

struct CanonicalStep {
  Side side;
  int part;  // nu^i_1 or mu^i_1
  Rat x;     // part + current A (resp. B)
};
struct CanonicalTrace {
  std::vector<CanonicalStep> steps;
  BiPartition element;
};
// Prefers `flavor` whenever it is allowed.
CanonicalTrace canonical_trace(const IndexedPair& pair, const Params& p, Side flavor);
BiPartition canonical_element(const IndexedPair& pair, const Params& p, Side flavor);

Symbol symbol_of(const BiPartition& bp, const Params& p);
RatSeq merged_symbol(const Symbol& sym);
RatSeq p_bracket(const IndexedPair& pair, const Params& p);

BiSet p_b_c_set(const IndexedPair& pair, std::size_t c);

// c is 1-based as in the construction; bp has lengths (n-1, m).
std::pair<std::vector<int>, std::vector<int>> iota(std::size_t c, int x, const std::vector<int>& nu_under,
                                                   const std::vector<int>& mu_under, std::size_t n,
                                                   std::size_t m);

// 1 <= k <= N+M.
std::size_t b_count(const IndexedPair& pair, const Params& p, std::size_t k);

// Side a requires (1,0) <_I (1,1) when m >= 1.
IndexedPair drop_first(const IndexedPair& pair, Side side);

// Whether the first n2 A's and m2 B's can be kept with zeros beyond.
bool padding_hypothesis(const ShuffleOrder& order, std::size_t n2, std::size_t m2);
IndexedPair pad_pair(const IndexedPair& pair, std::size_t n_new, std::size_t m_new,
                     const ShuffleOrder& order_ext);

// Smallest prefix pair from which `pair` arises by pad_pair.
IndexedPair trim_normal_form(const IndexedPair& pair);

// Drops memoized P sets held by the calling thread.
void clear_pab_caches();

}  // namespace springer
