#pragma once

// Test-only reference implementations. They share no code with the library
// beyond plain data types and are deliberately naive.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;
using Pair = std::pair<Vec, Vec>;

// Number of partitions of n (standard DP over largest part).
inline long partition_count(int n) {
  std::vector<long> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int t = part; t <= n; ++t) ways[static_cast<std::size_t>(t)] += ways[static_cast<std::size_t>(t - part)];
  return ways[static_cast<std::size_t>(n)];
}

// All partitions of n, by brute-force descent.
inline void all_partitions(int n, int cap, Vec& cur, std::vector<Vec>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int x = 1; x <= std::min(n, cap); ++x) {
    cur.push_back(x);
    all_partitions(n - x, x, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Vec> partitions(int n) {
  std::vector<Vec> out;
  Vec cur;
  all_partitions(n, n, cur, out);
  return out;
}

inline bool symplectic(const Vec& p) {
  std::map<int, int> mult;
  for (int x : p) ++mult[x];
  for (auto [v, c] : mult)
    if (v % 2 == 1 && c % 2 == 1) return false;
  return true;
}

// Number of marked couples of size 2N: sum over symplectic partitions of
// 2^(number of distinct even parts).
inline long marked_count(int two_n) {
  long total = 0;
  for (const auto& p : partitions(two_n)) {
    if (!symplectic(p)) continue;
    std::set<int> evens;
    for (int x : p)
      if (x % 2 == 0) evens.insert(x);
    total += 1L << evens.size();
  }
  return total;
}

inline Vec conjugate(const Vec& p) {
  Vec out;
  for (int c = 1;; ++c) {
    int cnt = 0;
    for (int x : p)
      if (x >= c) ++cnt;
    if (cnt == 0) break;
    out.push_back(cnt);
  }
  return out;
}

// Dominance after zero padding, by explicit partial sums.
inline bool dominated(Vec a, Vec b) {
  std::size_t L = std::max(a.size(), b.size());
  a.resize(L, 0);
  b.resize(L, 0);
  long sa = 0, sb = 0;
  for (std::size_t i = 0; i < L; ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

// P(alpha, beta) straight from the definition, on an explicit list of
// (value, side) entries in order.
struct Entry {
  int value;
  int side;  // 0 = alpha, 1 = beta
};

inline std::set<Pair> p_set(const std::vector<Entry>& word) {
  int n = 0, m = 0;
  for (const auto& e : word) (e.side == 0 ? n : m)++;
  std::set<Pair> out;
  auto split = [](const std::vector<Entry>& w) {
    Pair p;
    for (const auto& e : w) (e.side == 0 ? p.first : p.second).push_back(e.value);
    return p;
  };
  if (n == 0 || m == 0) {
    out.insert(split(word));
    return out;
  }
  for (int start = 0; start < 2; ++start) {
    // Chain: first entry of side `start`, then alternate to the next entry of
    // the other side further right.
    std::vector<bool> used(word.size(), false);
    int pos = -1;
    for (std::size_t i = 0; i < word.size(); ++i)
      if (word[i].side == start) {
        pos = static_cast<int>(i);
        break;
      }
    int part = 0, want = start;
    while (pos >= 0) {
      used[static_cast<std::size_t>(pos)] = true;
      part += word[static_cast<std::size_t>(pos)].value;
      want = 1 - want;
      int next = -1;
      for (std::size_t i = static_cast<std::size_t>(pos) + 1; i < word.size(); ++i)
        if (word[i].side == want) {
          next = static_cast<int>(i);
          break;
        }
      pos = next;
    }
    std::vector<Entry> rest;
    for (std::size_t i = 0; i < word.size(); ++i)
      if (!used[i]) rest.push_back(word[i]);
    for (auto [nu, mu] : p_set(rest)) {
      Vec& grow = start == 0 ? nu : mu;
      grow.push_back(part);
      std::sort(grow.begin(), grow.end(), std::greater<int>());
      nu.resize(static_cast<std::size_t>(n), 0);
      mu.resize(static_cast<std::size_t>(m), 0);
      out.insert({nu, mu});
    }
  }
  return out;
}

inline std::vector<Entry> make_word(const Vec& alpha, const Vec& beta, const std::string& order) {
  std::vector<Entry> w;
  std::size_t ia = 0, ib = 0;
  for (char c : order) {
    if (c == 'A')
      w.push_back({alpha[ia++], 0});
    else
      w.push_back({beta[ib++], 1});
  }
  return w;
}

// |X| by enumerating every x with entries bounded by the total mass.
inline long x_count(const Vec& alpha, const Vec& beta, const std::string& order, const std::vector<long>& nu_t,
                    const std::vector<long>& mu_t) {
  std::vector<std::pair<int, int>> J;  // (earlier position, later position)
  for (std::size_t p = 0; p < order.size(); ++p)
    for (std::size_t q = p + 1; q < order.size(); ++q)
      if (order[p] != order[q]) J.push_back({static_cast<int>(p), static_cast<int>(q)});
  std::vector<long> orig, target;
  std::size_t ia = 0, ib = 0;
  for (char c : order) {
    if (c == 'A') {
      orig.push_back(alpha[ia]);
      target.push_back(nu_t[ia++]);
    } else {
      orig.push_back(beta[ib]);
      target.push_back(mu_t[ib++]);
    }
  }
  long bound = 0;
  for (long v : orig) bound += v;
  for (long v : target) bound += std::abs(v);
  std::vector<long> x(J.size(), 0);
  long count = 0;
  while (true) {
    std::vector<long> cur = orig;
    for (std::size_t t = 0; t < J.size(); ++t) {
      cur[static_cast<std::size_t>(J[t].first)] += x[t];
      cur[static_cast<std::size_t>(J[t].second)] -= x[t];
    }
    if (cur == target) ++count;
    std::size_t t = 0;
    while (t < x.size() && x[t] == bound) x[t++] = 0;
    if (t == x.size()) break;
    ++x[t];
  }
  return count;
}

}  // namespace oracle
