#include "springer/extremal.hpp"

#include <algorithm>

#include "springer/errors.hpp"
#include "springer/mult.hpp"

namespace springer {

namespace {

int sign_pow(std::size_t j) { return j % 2 == 0 ? 1 : -1; }  // (-1)^j

void require_even(const MarkedSymplectic& ms) {
  require_pre(ms.all_even(), "operation needs a partition with only even parts: " + ms.str());
}

}  // namespace

bool shape_dominance_less(const Partition& a, const Partition& b) {
  return !a.shape_eq(b) && shape_dominance_leq(a, b);
}

std::size_t bar_rank(const MarkedSymplectic& ms) { return (ms.lambda().length() + 1) / 2; }

BarTrace bar_step(const MarkedSymplectic& ms, std::size_t r) {
  require_even(ms);
  require_pre(ms.half_size() > 0, "bar_step needs N > 0");
  auto eps = epsilon_on_indices(ms, r);
  std::size_t L = 2 * r + 1;
  auto lam = [&](std::size_t j) { return ms.lambda().part_or_zero(j - 1); };
  auto t = [&](std::size_t j) { return eps[j - 1] * sign_pow(j); };

  BarTrace tr;
  tr.r = r;
  tr.source = ms;
  for (std::size_t j = 1; j <= L; ++j) {
    if (j == 1 || t(j) != t(j - 1)) tr.frak_s.push_back(j);
    (t(j) == -1 ? tr.j_a : tr.j_b).push_back(j);
  }
  long S = static_cast<long>(tr.frak_s.size());
  long sum_s = 0;
  for (auto j : tr.frak_s) sum_s += lam(j);
  int e1 = eps[0];
  long first = e1 == 1 ? sum_s + S - 1 - 2 * static_cast<long>(tr.j_b.size())
                       : sum_s + S - 2 * static_cast<long>(tr.j_a.size());
  int N = ms.half_size();
  check_invariant(first % 2 == 0 && first >= 2 && first <= 2 * N, "bar first part out of range");
  tr.bar_first = static_cast<int>(first);

  std::vector<int> parts;
  SignMap eps2;
  std::size_t h = 0;  // number of frak_s entries below j
  for (std::size_t j = 1; j <= L; ++j) {
    while (h < tr.frak_s.size() && tr.frak_s[h] < j) ++h;
    if (std::binary_search(tr.frak_s.begin(), tr.frak_s.end(), j)) continue;
    int part = t(j) == e1 ? lam(j) + 2 : lam(j);
    parts.push_back(part);
    if (part == 0) continue;
    int e = (h % 2 == 1 ? 1 : -1) * eps[j - 1];  // (-1)^{h+1} eps(j)
    auto [it, fresh] = eps2.emplace(part, e);
    check_invariant(fresh || it->second == e, "derived sign depends on the chosen index");
  }
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  tr.derived = MarkedSymplectic(Partition(parts), eps2);
  check_invariant(tr.derived.lambda().sum() == 2L * N - first, "derived partition has the wrong size");
  return tr;
}

namespace {

MarkedSymplectic bar_at(const MarkedSymplectic& ms, std::size_t r, std::vector<BarTrace>* chain) {
  if (ms.half_size() == 0) return ms;
  BarTrace tr = bar_step(ms, r);
  if (chain) chain->push_back(tr);
  MarkedSymplectic rest = bar_at(tr.derived, bar_rank(tr.derived), chain);
  const Partition& rl = rest.lambda();
  check_invariant(rl.empty() || tr.bar_first >= rl[0], "bar first part below the rest");
  SignMap eps = rest.epsilon();
  auto [it, fresh] = eps.emplace(tr.bar_first, ms.lambda().empty() ? 1 : epsilon_on_indices(ms, r)[0]);
  check_invariant(fresh || it->second == epsilon_on_indices(ms, r)[0], "bar signs clash at the join");
  return MarkedSymplectic(sorted_union(Partition{tr.bar_first}, rl), eps);
}

}  // namespace

std::vector<BarTrace> bar_chain(const MarkedSymplectic& ms) {
  require_even(ms);
  std::vector<BarTrace> chain;
  bar_at(ms, bar_rank(ms), &chain);
  return chain;
}

MarkedSymplectic bar(const MarkedSymplectic& ms) {
  require_even(ms);
  std::size_t r = bar_rank(ms);
  MarkedSymplectic out = bar_at(ms, r, nullptr);
  check_invariant(out == bar_at(ms, r + 1, nullptr), "bar depends on r");
  check_invariant(out.all_even(), "bar produced an odd part");
  return out;
}

long mult_pair(const MarkedSymplectic& ms, const MarkedSymplectic& target) {
  require_even(ms);
  require(ms.half_size() == target.half_size(), "mult_pair needs couples of the same size");
  if (k_of(ms) != k_of(target)) return 0;
  std::size_t r = default_rank(ms);
  SpringerDatum sd = springer_to_pair(ms, r);
  SpringerDatum td = springer_to_pair(target, r);
  IndexedPair pair(sd.alpha, sd.beta, order_from_pair(sd));
  return mult_recursive(pair, td.alpha, td.beta);
}

MultTable mult_table(const MarkedSymplectic& ms) {
  require_even(ms);
  MultTable t{ms, {}};
  int k = k_of(ms);
  for (const auto& target : enumerate_marked(2 * ms.half_size())) {
    if (k_of(target) != k) continue;
    long v = mult_pair(ms, target);
    if (v != 0) t.entries.emplace(target, v);
  }
  return t;
}

namespace {

struct ConstrainedSetup {
  SpringerDatum sd;
  IndexedPair pair;
  Params params;
};

ConstrainedSetup setup(const MarkedSymplectic& ms) {
  SpringerDatum sd = springer_to_pair(ms);
  return {sd, IndexedPair(sd.alpha, sd.beta, order_from_pair(sd)), springer_params(sd)};
}

}  // namespace

MarkedSymplectic lambda_max_pset(const MarkedSymplectic& ms) {
  require_even(ms);
  auto s = setup(ms);
  BiSet set = p_constrained_set(s.pair, s.params);
  check_invariant(set.size() == 1, "constrained set is not a singleton");
  const BiPartition& e = *set.begin();
  return pair_to_springer(SpringerDatum(s.sd.k, e.nu, e.mu, s.sd.r));
}

MarkedSymplectic lambda_max(const MarkedSymplectic& ms) {
  MarkedSymplectic mx = lambda_max_pset(ms);
  check_invariant(mx == bar(ms), "constrained-set route and bar recursion disagree");
  check_invariant(k_of(mx) == k_of(ms), "maximum has a different k");
  return mx;
}

bool half_step_identity(const MarkedSymplectic& ms) {
  require_even(ms);
  auto s = setup(ms);
  Params half = s.params;
  half.A /= 2;
  half.B /= 2;
  half.s /= 2;
  return p_constrained_set(s.pair, half) == p_constrained_set(s.pair, s.params);
}

MarkedSymplectic lambda_min(const MarkedSymplectic& ms) {
  MarkedSymplectic mx = lambda_max(ms);
  MarkedSymplectic mn = sign_twist(mx);
  check_invariant(sign_twist(mn) == mx, "sign twist is not an involution here");
  check_invariant(half_step_identity(ms), "P_{A/2,B/2;1/2} differs from P_{A,B;2}");
  return mn;
}

ExtremalReport verify_extremal(const MarkedSymplectic& ms) {
  require_even(ms);
  ExtremalReport rep;
  rep.source = ms;
  MultTable t = mult_table(ms);
  auto value = [&](const MarkedSymplectic& x) {
    auto it = t.entries.find(x);
    return it == t.entries.end() ? 0L : it->second;
  };
  auto fail = [&](const std::string& what) { rep.failures.push_back(ms.str() + ": " + what); };

  try {
    rep.max = lambda_max(ms);
    rep.min = lambda_min(ms);
  } catch (const std::exception& e) {
    fail(e.what());
    return rep;
  }

  rep.source_entry_one = value(ms) == 1;
  if (!rep.source_entry_one) fail("mult at the source is " + std::to_string(value(ms)));
  rep.max_entry_one = value(rep.max) == 1;
  if (!rep.max_entry_one) fail("mult at the maximum " + rep.max.str() + " is " + std::to_string(value(rep.max)));
  rep.max_strict = rep.above_source = true;
  for (const auto& [x, v] : t.entries) {
    if (x == rep.max) continue;
    if (!shape_dominance_less(x.lambda(), rep.max.lambda())) {
      rep.max_strict = false;
      fail("entry " + x.str() + " is not strictly below the maximum");
    }
    if (!(x == ms) && !shape_dominance_less(ms.lambda(), x.lambda())) {
      rep.above_source = false;
      fail("entry " + x.str() + " is not strictly above the source");
    }
  }

  // Pulled back: (l', e') counts when its twist carries a nonzero entry.
  MarkedSymplectic min_twist = sign_twist(rep.min);
  rep.twist_consistent = min_twist == rep.max;
  if (!rep.twist_consistent) fail("twist of the minimum is " + min_twist.str());
  rep.min_entry_one = value(min_twist) == 1;
  if (!rep.min_entry_one) fail("mult at the twisted minimum is " + std::to_string(value(min_twist)));
  rep.min_strict = true;
  for (const auto& [x, v] : t.entries) {
    MarkedSymplectic pulled = sign_twist(x);
    if (pulled == rep.min) continue;
    if (!shape_dominance_less(rep.min.lambda(), pulled.lambda())) {
      rep.min_strict = false;
      fail("pulled-back entry " + pulled.str() + " is not strictly above the minimum");
    }
  }
  return rep;
}

}  // namespace springer
