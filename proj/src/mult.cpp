#include "springer/mult.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "springer/errors.hpp"

namespace springer {

std::vector<CrossPair> cross_pairs(const ShuffleOrder& order) {
  std::vector<CrossPair> out;
  for (std::size_t i = 0; i < order.n(); ++i)
    for (std::size_t j = 0; j < order.m(); ++j) {
      if (order.a_before_b(i, j))
        out.push_back({Side::a, i, j});
      else
        out.push_back({Side::b, j, i});
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<std::vector<long>, std::vector<long>> shift_apply(const IndexedPair& pair, const ShiftVector& x) {
  auto keys = cross_pairs(pair.order);
  require(x.size() == keys.size(), "shift vector must be keyed by the cross pairs");
  std::vector<long> a(pair.alpha.parts().begin(), pair.alpha.parts().end());
  std::vector<long> b(pair.beta.parts().begin(), pair.beta.parts().end());
  for (const auto& key : keys) {
    auto it = x.find(key);
    require(it != x.end(), "shift vector must be keyed by the cross pairs");
    require(it->second >= 0, "shift values must be nonnegative");
    auto& lo = key.lo_side == Side::a ? a : b;
    auto& hi = key.lo_side == Side::a ? b : a;
    lo[key.lo] += it->second;
    hi[key.hi] -= it->second;
  }
  return {a, b};
}

std::vector<long> twist(const std::vector<long>& seq, const std::vector<std::size_t>& w) {
  require(w.size() == seq.size(), "permutation size mismatch");
  std::vector<bool> seen(w.size(), false);
  std::vector<long> out(seq.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    require(w[i] < w.size() && !seen[w[i]], "not a permutation");
    seen[w[i]] = true;
    out[i] = seq[w[i]] + static_cast<long>(i) - static_cast<long>(w[i]);
  }
  return out;
}

namespace {

// Counts x by walking positions in rank order. At position p the amount
// d_p + incoming_p must be sent on to later positions of the other side.
class XCounter {
 public:
  XCounter(const IndexedPair& pair, const std::vector<long>& nu_t, const std::vector<long>& mu_t) {
    const auto& w = pair.order.word();
    std::size_t ia = 0, ib = 0;
    for (char c : w) {
      bool is_a = c == 'A';
      long target = is_a ? nu_t[ia] : mu_t[ib];
      long orig = is_a ? pair.alpha[ia] : pair.beta[ib];
      diff_.push_back(target - orig);
      side_.push_back(is_a);
      (is_a ? ia : ib)++;
    }
    later_.resize(w.size());
    for (std::size_t p = 0; p < w.size(); ++p)
      for (std::size_t q = p + 1; q < w.size(); ++q)
        if (side_[q] != side_[p]) later_[p].push_back(q);
  }

  long count() {
    if (std::accumulate(diff_.begin(), diff_.end(), 0L) != 0) return 0;
    // Weighted budget: earlier positions can only gain, so any prefix sum of
    // diff must be nonnegative.
    long prefix = 0;
    for (long d : diff_) {
      prefix += d;
      if (prefix < 0) return 0;
    }
    std::vector<long> incoming(diff_.size(), 0);
    return visit(0, incoming);
  }

 private:
  long visit(std::size_t p, std::vector<long>& incoming) {
    if (p == diff_.size()) return 1;
    long out = diff_[p] + incoming[p];
    if (out < 0) return 0;
    const auto& targets = later_[p];
    if (targets.empty()) return out == 0 ? visit(p + 1, incoming) : 0;
    auto key = std::make_pair(p, std::vector<long>(incoming.begin() + static_cast<long>(p), incoming.end()));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    long total = distribute(p, 0, out, incoming);
    memo_.emplace(std::move(key), total);
    return total;
  }

  // Splits `left` over targets[t..] as a composition.
  long distribute(std::size_t p, std::size_t t, long left, std::vector<long>& incoming) {
    const auto& targets = later_[p];
    if (t + 1 == targets.size()) {
      incoming[targets[t]] += left;
      long r = visit(p + 1, incoming);
      incoming[targets[t]] -= left;
      return r;
    }
    long total = 0;
    for (long give = 0; give <= left; ++give) {
      incoming[targets[t]] += give;
      total += distribute(p, t + 1, left - give, incoming);
      incoming[targets[t]] -= give;
    }
    return total;
  }

  std::vector<long> diff_;
  std::vector<bool> side_;
  std::vector<std::vector<std::size_t>> later_;
  std::map<std::pair<std::size_t, std::vector<long>>, long> memo_;
};

int perm_sign(const std::vector<std::size_t>& w) {
  int s = 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) s = -s;
  return s;
}

std::vector<std::size_t> identity_perm(std::size_t n) {
  std::vector<std::size_t> w(n);
  std::iota(w.begin(), w.end(), std::size_t{0});
  return w;
}

void check_mult_args(const IndexedPair& pair, const Partition& nu, const Partition& mu) {
  require(nu.length() == pair.n() && mu.length() == pair.m(), "target lengths must match the pair");
  require(nu.sum() + mu.sum() == pair.alpha.sum() + pair.beta.sum(), "mult needs S(nu)+S(mu) = S(alpha)+S(beta)");
}

}  // namespace

long x_solution_count(const IndexedPair& pair, const std::vector<long>& nu_t, const std::vector<long>& mu_t) {
  require(nu_t.size() == pair.n() && mu_t.size() == pair.m(), "target lengths must match the pair");
  return XCounter(pair, nu_t, mu_t).count();
}

MultResult mult_bruteforce(const IndexedPair& pair, const Partition& nu, const Partition& mu, bool keep_audit) {
  check_mult_args(pair, nu, mu);
  std::vector<long> nu_l(nu.parts().begin(), nu.parts().end()), mu_l(mu.parts().begin(), mu.parts().end());
  MultResult res;
  if (keep_audit) res.audit.emplace();
  auto w = identity_perm(pair.n());
  do {
    auto nu_w = twist(nu_l, w);
    int sw = perm_sign(w);
    auto v = identity_perm(pair.m());
    do {
      long c = x_solution_count(pair, nu_w, twist(mu_l, v));
      if (c == 0) continue;
      long term = sw * perm_sign(v) * c;
      res.value += term;
      if (keep_audit) (*res.audit)[{w, v}] = term;
    } while (std::next_permutation(v.begin(), v.end()));
  } while (std::next_permutation(w.begin(), w.end()));
  return res;
}

std::set<Partition> q_set(int alpha1, long target, const Partition& mu) {
  std::set<Partition> out;
  long extra = target - alpha1;
  if (extra < 0) return out;
  std::size_t m = mu.length();
  if (m == 0) {
    if (extra == 0) out.insert(mu);
    return out;
  }
  std::vector<int> cur(mu.parts());
  // Slot i > 0 may grow up to mu_{i-1}; slot 0 takes whatever is left.
  auto rec = [&](auto&& self, std::size_t i, long left) -> void {
    if (i == 0) {
      cur[0] = mu[0] + static_cast<int>(left);
      out.insert(Partition(cur));
      cur[0] = mu[0];
      return;
    }
    long room = std::min<long>(left, mu[i - 1] - mu[i]);
    for (long d = 0; d <= room; ++d) {
      cur[i] = mu[i] + static_cast<int>(d);
      self(self, i - 1, left - d);
    }
    cur[i] = mu[i];
  };
  rec(rec, m - 1, extra);
  return out;
}

namespace {

using MultKey = std::tuple<IndexedPair, Partition, Partition>;

std::map<MultKey, long>& mult_memo() {
  thread_local std::map<MultKey, long> memo;
  return memo;
}

IndexedPair swap_sides(const IndexedPair& pair) {
  std::string w = pair.order.word();
  for (char& c : w) c = c == 'A' ? 'B' : 'A';
  return IndexedPair(pair.beta, pair.alpha, ShuffleOrder(w));
}

long mult_rec(const IndexedPair& pair, const Partition& nu, const Partition& mu) {
  if (pair.n() == 0 || pair.m() == 0) return (nu == pair.alpha && mu == pair.beta) ? 1 : 0;
  if (!pair.a_first()) return mult_rec(swap_sides(pair), mu, nu);
  MultKey key{pair, nu, mu};
  auto& memo = mult_memo();
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  IndexedPair sub = drop_first(pair, Side::a);
  int alpha1 = pair.alpha[0];
  std::size_t n = pair.n();
  long total = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<int> v;
    for (std::size_t i = 1; i < n; ++i) v.push_back(i < k ? nu[i - 1] + 1 : nu[i]);
    Partition nu2(v);
    long target = nu[k - 1] + 1 - static_cast<long>(k);
    long sgn = (k % 2 == 1) ? 1 : -1;
    for (const auto& mu2 : q_set(alpha1, target, mu)) total += sgn * mult_rec(sub, nu2, mu2);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

long mult_recursive(const IndexedPair& pair, const Partition& nu, const Partition& mu) {
  check_mult_args(pair, nu, mu);
  return mult_rec(pair, nu, mu);
}

void clear_mult_cache() { mult_memo().clear(); }

}  // namespace springer
