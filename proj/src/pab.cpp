#include "springer/pab.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

#include "springer/errors.hpp"

namespace springer {

ShuffleOrder::ShuffleOrder(std::string word) : word_(std::move(word)) {
  for (std::size_t pos = 0; pos < word_.size(); ++pos) {
    char c = word_[pos];
    require(c == 'A' || c == 'B', "order word must use only the letters A and B");
    (c == 'A' ? rank_a_ : rank_b_).push_back(pos);
  }
}

ShuffleOrder ShuffleOrder::blocks(std::size_t n, std::size_t m) {
  return ShuffleOrder(std::string(n, 'A') + std::string(m, 'B'));
}

std::size_t ShuffleOrder::rank(Side side, std::size_t idx) const {
  const auto& r = side == Side::a ? rank_a_ : rank_b_;
  require(idx < r.size(), "index outside the order");
  return r[idx];
}

ShuffleOrder ShuffleOrder::without(const std::vector<std::size_t>& drop_a,
                                   const std::vector<std::size_t>& drop_b) const {
  std::vector<bool> gone(word_.size(), false);
  for (auto i : drop_a) gone[rank(Side::a, i)] = true;
  for (auto j : drop_b) gone[rank(Side::b, j)] = true;
  std::string w;
  for (std::size_t pos = 0; pos < word_.size(); ++pos)
    if (!gone[pos]) w.push_back(word_[pos]);
  return ShuffleOrder(w);
}

ShuffleOrder ShuffleOrder::prefix_restriction(std::size_t n2, std::size_t m2) const {
  require(n2 <= n() && m2 <= m(), "restriction larger than the order");
  std::string w;
  std::size_t seen_a = 0, seen_b = 0;
  for (char c : word_) {
    if (c == 'A' && seen_a++ < n2) w.push_back(c);
    if (c == 'B' && seen_b++ < m2) w.push_back(c);
  }
  return ShuffleOrder(w);
}

std::vector<ShuffleOrder> enumerate_orders(std::size_t n, std::size_t m) {
  std::string w = std::string(n, 'A') + std::string(m, 'B');
  std::vector<ShuffleOrder> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

IndexedPair::IndexedPair(Partition a, Partition b, ShuffleOrder o)
    : alpha(std::move(a)), beta(std::move(b)), order(std::move(o)) {
  require(order.n() == alpha.length() && order.m() == beta.length(),
          "order word must have one A per alpha entry and one B per beta entry");
}

bool IndexedPair::a_first() const { return n() == 0 || m() == 0 || order.a_before_b(0, 0); }

std::string IndexedPair::str() const { return alpha.str() + beta.str() + order.word(); }

void Params::validate_for(std::size_t n, std::size_t m) const {
  require(s > 0, "s must be positive");
  require(N >= n && M >= m, "symbol lengths N, M must be at least n, m");
  if (N > 0) require(A >= s * static_cast<std::int64_t>(N - 1), "A must be at least s(N-1)");
  if (M > 0) require(B >= s * static_cast<std::int64_t>(M - 1), "B must be at least s(M-1)");
}

Params Params::after(Side side) const {
  Params q = *this;
  if (side == Side::a) {
    q.A -= s;
    --q.N;
  } else {
    q.B -= s;
    --q.M;
  }
  return q;
}

namespace {

Side flip(Side s) { return s == Side::a ? Side::b : Side::a; }

const Partition& side_of(const IndexedPair& p, Side s) { return s == Side::a ? p.alpha : p.beta; }

Partition drop_indices(const Partition& p, const std::vector<std::size_t>& idx) {
  std::vector<bool> gone(p.length(), false);
  for (auto i : idx) gone[i] = true;
  std::vector<int> v;
  for (std::size_t i = 0; i < p.length(); ++i)
    if (!gone[i]) v.push_back(p[i]);
  return Partition(std::move(v));
}

}  // namespace

StepResult step(const IndexedPair& pair, Side side) {
  require_pre(side_of(pair, side).length() >= 1, "procedure needs a nonempty side");
  StepResult r;
  const auto& order = pair.order;
  Side cur = side;
  std::size_t idx = 0;
  while (true) {
    (cur == Side::a ? r.chain_a : r.chain_b).push_back(idx);
    r.part += side_of(pair, cur)[idx];
    std::size_t pos = order.rank(cur, idx);
    Side other = flip(cur);
    std::size_t len = side_of(pair, other).length();
    // Smallest index on the other side ranked after pos.
    std::size_t next = 0;
    while (next < len && order.rank(other, next) < pos) ++next;
    if (next == len) break;
    cur = other;
    idx = next;
  }
  r.residual = IndexedPair(drop_indices(pair.alpha, r.chain_a), drop_indices(pair.beta, r.chain_b),
                           order.without(r.chain_a, r.chain_b));
  return r;
}

StepResult step_a(const IndexedPair& pair) { return step(pair, Side::a); }
StepResult step_b(const IndexedPair& pair) { return step(pair, Side::b); }

namespace {

// Element built from a residual element after extracting `part` on `side`.
BiPartition lift(const BiPartition& sub, Side side, int part, std::size_t n, std::size_t m) {
  if (side == Side::a)
    return {sorted_union(Partition{part}, sub.nu).padded(n), sub.mu.padded(m)};
  return {sub.nu.padded(n), sorted_union(Partition{part}, sub.mu).padded(m)};
}

BiPartition pad_element(const BiPartition& e, std::size_t n, std::size_t m) {
  return {e.nu.padded(n), e.mu.padded(m)};
}

using Recurse = std::function<BiSet(const IndexedPair&)>;

BiSet expand(const IndexedPair& pair, bool use_a, bool use_b, const Recurse& sub_a, const Recurse& sub_b) {
  BiSet out;
  if (pair.n() == 0 || pair.m() == 0) {
    out.insert({pair.alpha, pair.beta});
    return out;
  }
  for (Side side : {Side::a, Side::b}) {
    if (!(side == Side::a ? use_a : use_b)) continue;
    StepResult r = step(pair, side);
    for (const auto& e : (side == Side::a ? sub_a : sub_b)(r.residual))
      out.insert(lift(e, side, r.part, pair.n(), pair.m()));
  }
  return out;
}

struct PabCache {
  std::map<IndexedPair, BiSet> plain;
  std::map<std::tuple<IndexedPair, std::size_t, std::size_t, Rat, Rat, Rat>, BiSet> constrained;
};

PabCache& cache() {
  thread_local PabCache c;
  return c;
}

}  // namespace

void clear_pab_caches() {
  cache().plain.clear();
  cache().constrained.clear();
}

bool padding_hypothesis(const ShuffleOrder& order, std::size_t n2, std::size_t m2) {
  std::size_t n = order.n(), m = order.m();
  if (n2 > n || m2 > m) return false;
  if (n2 < n && m2 >= 1 && order.rank(Side::a, n2) < order.rank(Side::b, m2 - 1)) return false;
  if (m2 < m && n2 >= 1 && order.rank(Side::b, m2) < order.rank(Side::a, n2 - 1)) return false;
  return true;
}

IndexedPair pad_pair(const IndexedPair& pair, std::size_t n_new, std::size_t m_new, const ShuffleOrder& order_ext) {
  require(order_ext.n() == n_new && order_ext.m() == m_new, "extended order has the wrong letter counts");
  require(n_new >= pair.n() && m_new >= pair.m(), "padding cannot shrink a pair");
  require(order_ext.prefix_restriction(pair.n(), pair.m()) == pair.order,
          "extended order does not restrict to the original order");
  require_pre(padding_hypothesis(order_ext, pair.n(), pair.m()), "extension positions violate the padding hypothesis");
  return IndexedPair(pair.alpha.padded(n_new), pair.beta.padded(m_new), order_ext);
}

IndexedPair trim_normal_form(const IndexedPair& pair) {
  std::size_t lo_a = pair.alpha.nonzero_count(), lo_b = pair.beta.nonzero_count();
  for (std::size_t total = lo_a + lo_b; total <= pair.n() + pair.m(); ++total)
    for (std::size_t n2 = lo_a; n2 <= std::min(total, pair.n()); ++n2) {
      std::size_t m2 = total - n2;
      if (m2 < lo_b || m2 > pair.m()) continue;
      if (!padding_hypothesis(pair.order, n2, m2)) continue;
      return IndexedPair(pair.alpha.trimmed().padded(n2), pair.beta.trimmed().padded(m2),
                         pair.order.prefix_restriction(n2, m2));
    }
  return pair;
}

BiSet p_set(const IndexedPair& pair) {
  IndexedPair t = trim_normal_form(pair);
  auto& memo = cache().plain;
  auto it = memo.find(t);
  if (it == memo.end()) {
    BiSet v = expand(t, true, true, p_set, p_set);
    it = memo.emplace(t, std::move(v)).first;
  }
  if (t.n() == pair.n() && t.m() == pair.m()) return it->second;
  BiSet out;
  for (const auto& e : it->second) out.insert(pad_element(e, pair.n(), pair.m()));
  return out;
}

BiSet p_set_direct(const IndexedPair& pair) { return expand(pair, true, true, p_set_direct, p_set_direct); }

ProcedureGate allowed_procedures(const IndexedPair& pair, const Params& p) {
  require_pre(pair.n() >= 1 && pair.m() >= 1, "procedure gates need both sides nonempty");
  Rat a1 = pair.alpha[0], b1 = pair.beta[0];
  if (pair.a_first()) return {a1 + p.A >= p.B, a1 + p.A <= p.B};
  return {b1 + p.B <= p.A, b1 + p.B >= p.A};
}

namespace {

BiSet constrained_impl(const IndexedPair& pair, const Params& p, bool normalize) {
  if (pair.n() == 0 || pair.m() == 0) return {{pair.alpha, pair.beta}};
  auto gate = allowed_procedures(pair, p);
  check_invariant(gate.a_ok || gate.b_ok, "neither procedure allowed");
  Recurse sub_a = [&](const IndexedPair& q) {
    return normalize ? p_constrained_set(q, p.after(Side::a)) : p_constrained_set_direct(q, p.after(Side::a));
  };
  Recurse sub_b = [&](const IndexedPair& q) {
    return normalize ? p_constrained_set(q, p.after(Side::b)) : p_constrained_set_direct(q, p.after(Side::b));
  };
  return expand(pair, gate.a_ok, gate.b_ok, sub_a, sub_b);
}

}  // namespace

BiSet p_constrained_set(const IndexedPair& pair, const Params& p) {
  p.validate_for(pair.n(), pair.m());
  IndexedPair t = trim_normal_form(pair);
  auto key = std::make_tuple(t, p.N, p.M, p.A, p.B, p.s);
  auto& memo = cache().constrained;
  auto it = memo.find(key);
  if (it == memo.end()) {
    BiSet v = constrained_impl(t, p, true);
    it = memo.emplace(key, std::move(v)).first;
  }
  if (t.n() == pair.n() && t.m() == pair.m()) return it->second;
  BiSet out;
  for (const auto& e : it->second) out.insert(pad_element(e, pair.n(), pair.m()));
  return out;
}

BiSet p_constrained_set_direct(const IndexedPair& pair, const Params& p) {
  p.validate_for(pair.n(), pair.m());
  return constrained_impl(pair, p, false);
}

CanonicalTrace canonical_trace(const IndexedPair& pair, const Params& p, Side flavor) {
  p.validate_for(pair.n(), pair.m());
  CanonicalTrace out;
  if (pair.n() == 0 || pair.m() == 0) {
    out.element = {pair.alpha, pair.beta};
    return out;
  }
  auto gate = allowed_procedures(pair, p);
  bool preferred_ok = flavor == Side::a ? gate.a_ok : gate.b_ok;
  Side side = preferred_ok ? flavor : flip(flavor);
  StepResult r = step(pair, side);
  CanonicalTrace sub = canonical_trace(r.residual, p.after(side), flavor);
  out.steps.push_back({side, r.part, r.part + (side == Side::a ? p.A : p.B)});
  out.steps.insert(out.steps.end(), sub.steps.begin(), sub.steps.end());
  out.element = lift(sub.element, side, r.part, pair.n(), pair.m());
  return out;
}

BiPartition canonical_element(const IndexedPair& pair, const Params& p, Side flavor) {
  return canonical_trace(pair, p, flavor).element;
}

Symbol symbol_of(const BiPartition& bp, const Params& p) {
  p.validate_for(bp.nu.length(), bp.mu.length());
  auto N = static_cast<std::int64_t>(p.N), M = static_cast<std::int64_t>(p.M);
  RatSeq a = pointwise_add(bp.nu.padded(p.N).to_rat(), arith_progression(p.A, p.A + p.s - p.s * N, p.s));
  RatSeq b = pointwise_add(bp.mu.padded(p.M).to_rat(), arith_progression(p.B, p.B + p.s - p.s * M, p.s));
  return {a, b, p.s};
}

RatSeq merged_symbol(const Symbol& sym) { return sorted_union(sym.lam_a, sym.lam_b); }

RatSeq p_bracket(const IndexedPair& pair, const Params& p) {
  BiSet set = p_constrained_set(pair, p);
  check_invariant(!set.empty(), "constrained set is empty");
  RatSeq first = merged_symbol(symbol_of(*set.begin(), p));
  for (const auto& e : set)
    check_invariant(merged_symbol(symbol_of(e, p)) == first, "constrained set elements disagree on the merged symbol");
  return first;
}

BiSet p_b_c_set(const IndexedPair& pair, std::size_t c) {
  if (pair.m() == 0 || c == 0) return p_set(pair);
  StepResult r = step_b(pair);
  BiSet out;
  for (const auto& e : p_b_c_set(r.residual, c - 1)) out.insert(lift(e, Side::b, r.part, pair.n(), pair.m()));
  return out;
}

std::pair<std::vector<int>, std::vector<int>> iota(std::size_t c, int x, const std::vector<int>& nu_under,
                                                   const std::vector<int>& mu_under, std::size_t n,
                                                   std::size_t m) {
  require(c >= 1, "iota needs c >= 1");
  require(n >= 1 && nu_under.size() == n - 1 && mu_under.size() == m, "iota argument lengths must be (n-1, m)");
  std::vector<int> nu, mu;
  if (c <= m) {
    nu.push_back(x + mu_under[c - 1]);
    nu.insert(nu.end(), nu_under.begin(), nu_under.end());
    for (std::size_t j = 0; j < m; ++j)
      if (j != c - 1) mu.push_back(mu_under[j]);
    mu.push_back(0);
  } else {
    nu.push_back(x);
    nu.insert(nu.end(), nu_under.begin(), nu_under.end());
    mu = mu_under;
  }
  return {nu, mu};
}

std::size_t b_count(const IndexedPair& pair, const Params& p, std::size_t k) {
  require(k >= 1 && k <= p.N + p.M, "b_count index out of range");
  Symbol sym = symbol_of(canonical_element(pair, p, Side::b), p);
  std::size_t ia = 0, ib = 0;
  for (std::size_t t = 0; t < k; ++t) {
    bool take_b = ib < sym.lam_b.length() && (ia == sym.lam_a.length() || sym.lam_b[ib] >= sym.lam_a[ia]);
    (take_b ? ib : ia)++;
  }
  return ib;
}

IndexedPair drop_first(const IndexedPair& pair, Side side) {
  require_pre(side_of(pair, side).length() >= 1, "drop_first needs a nonempty side");
  if (side == Side::a) {
    require_pre(pair.a_first(), "drop_first on alpha needs (1,0) before (1,1)");
    return IndexedPair(drop_indices(pair.alpha, {0}), pair.beta, pair.order.without({0}, {}));
  }
  return IndexedPair(pair.alpha, drop_indices(pair.beta, {0}), pair.order.without({}, {0}));
}

}  // namespace springer
