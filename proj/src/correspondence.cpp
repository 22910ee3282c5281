#include "springer/correspondence.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "springer/errors.hpp"

namespace springer {

namespace {

using Ints = std::vector<long>;

RatSeq to_seq(Ints v) {
  std::sort(v.begin(), v.end(), std::greater<long>());
  std::vector<Rat> r(v.begin(), v.end());
  return RatSeq(std::move(r));
}

Ints to_ints(const RatSeq& s) {
  Ints out;
  for (const auto& x : s.entries()) {
    check_invariant(is_integer(x), "symbol entry is not an integer");
    out.push_back(x.numerator());
  }
  return out;
}

// 1-based access with zeros past the end.
int lam(const Partition& p, std::size_t j) { return j >= 1 ? p.part_or_zero(j - 1) : 0; }

}  // namespace

std::size_t alpha_length(int k, std::size_t r) { return r + static_cast<std::size_t>(k / 2) + 1; }

std::size_t beta_length(int k, std::size_t r) {
  require(static_cast<std::size_t>(k / 2) <= r, "r too small for k");
  return r - static_cast<std::size_t>(k / 2);
}

SpringerDatum::SpringerDatum(int k_, Partition a, Partition b, std::size_t r_)
    : k(k_), alpha(std::move(a)), beta(std::move(b)), r(r_) {
  require(k >= 0, "k must be nonnegative");
  require(static_cast<std::size_t>(k / 2) <= r, "r too small for k");
  require(alpha.length() == alpha_length(k, r) && beta.length() == beta_length(k, r),
          "alpha, beta lengths must be r+floor(k/2)+1 and r-floor(k/2)");
}

int SpringerDatum::half_size() const {
  return static_cast<int>(alpha.sum() + beta.sum()) + k * (k + 1) / 2;
}

std::size_t default_rank(const MarkedSymplectic& ms) { return static_cast<std::size_t>(ms.half_size()); }

std::vector<int> epsilon_on_indices(const MarkedSymplectic& ms, std::size_t r) {
  require(ms.lambda().length() <= 2 * r, "r too small: lambda needs a zero at index 2r+1");
  std::vector<int> out(2 * r + 1, 1);
  for (std::size_t j = 0; j < ms.lambda().length(); ++j) {
    int part = ms.lambda()[j];
    if (part % 2 == 0) out[j] = ms.sign(part);
  }
  return out;
}

int m_value(const MarkedSymplectic& ms) {
  int total = 0, l = 0;
  for (int part : jord_bp(ms.lambda())) {
    if (multiplicity(ms.lambda(), part) % 2 == 0) continue;
    ++l;
    if (ms.sign(part) == -1) total += (l % 2 == 0) ? 1 : -1;
  }
  return total;
}

int k_of(const MarkedSymplectic& ms) {
  int M = m_value(ms);
  return M >= 0 ? 2 * M : -2 * M - 1;
}

SymbolPair sharp_symbols_by_parity_split(const Partition& lambda, std::size_t r) {
  require(lambda.nonzero_count() <= 2 * r, "r too small for lambda");
  Partition padded = lambda.trimmed().padded(2 * r);
  Ints z, zp;
  for (std::size_t i = 0; i < 2 * r; ++i) {
    long v = padded[i] + static_cast<long>(2 * r - 1 - i);
    (v % 2 == 0 ? z : zp).push_back(v % 2 == 0 ? v / 2 : (v - 1) / 2);
  }
  check_invariant(z.size() == r && zp.size() == r, "parity split is unbalanced; lambda not symplectic?");
  Ints a{0}, b;
  for (std::size_t j = 0; j < r; ++j) {
    a.push_back(zp[j] + static_cast<long>(r + 1 - j));
    b.push_back(z[j] + static_cast<long>(r - j));
  }
  return {to_seq(a), to_seq(b)};
}

SymbolPair sharp_symbols_by_formula(const Partition& lambda, std::size_t r) {
  require(lambda.nonzero_count() <= 2 * r, "r too small for lambda");
  Partition p = lambda.trimmed();
  auto S = [&](std::size_t k) {
    long s = 0;
    for (std::size_t i = 1; i <= k; ++i) s += lam(p, i);
    return s;
  };
  auto even = [](long x) { return x % 2 == 0; };
  long R = static_cast<long>(r);
  Ints a, b;
  for (long j = 1; j <= R + 1; ++j) {
    auto J = static_cast<std::size_t>(j);
    std::vector<long> hits;
    long shift = 2 * R + 2 - 2 * j;
    if (even(lam(p, 2 * J - 1))) hits.push_back(lam(p, 2 * J - 1) / 2 + shift);
    if (!even(lam(p, 2 * J)) && even(S(2 * J))) hits.push_back((lam(p, 2 * J) - 1) / 2 + shift);
    if (j >= 2 && !even(lam(p, 2 * J - 2)) && !even(S(2 * J - 2))) hits.push_back((lam(p, 2 * J - 2) + 1) / 2 + shift);
    check_invariant(hits.size() == 1, "A-sharp formula cases do not partition");
    a.push_back(hits[0]);
  }
  for (long j = 1; j <= R; ++j) {
    auto J = static_cast<std::size_t>(j);
    std::vector<long> hits;
    long shift = 2 * R + 1 - 2 * j;
    if (even(lam(p, 2 * J))) hits.push_back(lam(p, 2 * J) / 2 + shift);
    if (!even(lam(p, 2 * J - 1)) && !even(S(2 * J - 1))) hits.push_back((lam(p, 2 * J - 1) + 1) / 2 + shift);
    if (!even(lam(p, 2 * J + 1)) && even(S(2 * J + 1))) hits.push_back((lam(p, 2 * J + 1) - 1) / 2 + shift);
    check_invariant(hits.size() == 1, "B-sharp formula cases do not partition");
    b.push_back(hits[0]);
  }
  return {to_seq(a), to_seq(b)};
}

SymbolPair sharp_symbols(const Partition& lambda, std::size_t r) {
  require(is_symplectic(lambda), "sharp symbols need a symplectic partition");
  SymbolPair x = sharp_symbols_by_parity_split(lambda, r);
  check_invariant(x == sharp_symbols_by_formula(lambda, r), "sharp symbol constructions disagree");
  return x;
}

SymbolPair marked_symbols(const MarkedSymplectic& ms, std::size_t r) {
  SymbolPair sharp = sharp_symbols(ms.lambda(), r);
  Ints a = to_ints(sharp.a_side), b = to_ints(sharp.b_side);
  std::set<long> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::vector<long> diff;
  std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(diff));
  // Maximal runs of consecutive integers, increasing, dropping any run with 0.
  std::vector<std::pair<long, long>> runs;
  for (long v : diff) {
    if (!runs.empty() && runs.back().second + 1 == v)
      runs.back().second = v;
    else
      runs.push_back({v, v});
  }
  std::erase_if(runs, [](const auto& run) { return run.first <= 0 && 0 <= run.second; });
  auto jord = jord_bp(ms.lambda());
  std::reverse(jord.begin(), jord.end());
  check_invariant(runs.size() == jord.size(), "interval count differs from the number of even parts");
  std::set<long> ra, rb;
  auto in_swapped = [&](long v) {
    for (std::size_t i = 0; i < runs.size(); ++i)
      if (ms.sign(jord[i]) == -1 && runs[i].first <= v && v <= runs[i].second) return true;
    return false;
  };
  for (long v : sa) (in_swapped(v) ? rb : ra).insert(v);
  for (long v : sb) (in_swapped(v) ? ra : rb).insert(v);
  return {to_seq(Ints(ra.begin(), ra.end())), to_seq(Ints(rb.begin(), rb.end()))};
}

SymbolPair marked_symbols_even(const MarkedSymplectic& ms, std::size_t r) {
  require(ms.all_even(), "closed form needs only even parts");
  auto eps = epsilon_on_indices(ms, r);
  Ints a, b;
  for (std::size_t j = 1; j <= 2 * r + 1; ++j) {
    long v = lam(ms.lambda(), j) / 2 + static_cast<long>(2 * r + 1 - j);
    int e = eps[j - 1];
    int odd_sign = (j % 2 == 1) ? 1 : -1;  // (-1)^{j+1}
    (e == odd_sign ? a : b).push_back(v);
  }
  return {to_seq(a), to_seq(b)};
}

SymbolPair pair_symbols(const SpringerDatum& sd) {
  auto R = static_cast<std::int64_t>(sd.r);
  auto k = static_cast<std::int64_t>(sd.k);
  if (sd.k % 2 == 0)
    return {pointwise_add(sd.alpha.to_rat(), arith_progression(2 * R + k, 0, 2)),
            pointwise_add(sd.beta.to_rat(), arith_progression(2 * R - 1 - k, 1, 2))};
  return {pointwise_add(sd.beta.to_rat(), arith_progression(2 * R - 1 - k, 0, 2)),
          pointwise_add(sd.alpha.to_rat(), arith_progression(2 * R + k, 1, 2))};
}

namespace {

Partition subtract_progression(const RatSeq& side, const RatSeq& prog) {
  require(side.length() == prog.length(), "r too small: symbol side has the wrong length");
  std::vector<int> v;
  for (std::size_t i = 0; i < side.length(); ++i) {
    Rat d = side[i] - prog[i];
    require(is_integer(d) && d >= 0, "r too small: negative entry after subtracting the progression");
    v.push_back(static_cast<int>(d.numerator()));
  }
  for (std::size_t i = 1; i < v.size(); ++i) require(v[i - 1] >= v[i], "r too small: non-monotone entry");
  return Partition(v);
}

}  // namespace

SpringerDatum springer_to_pair(const MarkedSymplectic& ms, std::optional<std::size_t> r_opt) {
  std::size_t r = r_opt.value_or(default_rank(ms));
  int k = k_of(ms);
  require(static_cast<std::size_t>(k / 2) <= r, "r too small for k");
  SymbolPair sym = marked_symbols(ms, r);
  auto R = static_cast<std::int64_t>(r);
  auto K = static_cast<std::int64_t>(k);
  Partition alpha, beta;
  if (k % 2 == 0) {
    alpha = subtract_progression(sym.a_side, arith_progression(2 * R + K, 0, 2));
    beta = subtract_progression(sym.b_side, arith_progression(2 * R - 1 - K, 1, 2));
  } else {
    beta = subtract_progression(sym.a_side, arith_progression(2 * R - 1 - K, 0, 2));
    alpha = subtract_progression(sym.b_side, arith_progression(2 * R + K, 1, 2));
  }
  SpringerDatum sd(k, alpha, beta, r);
  check_invariant(sd.half_size() == ms.half_size(), "size not preserved by the correspondence");
  check_invariant(pair_symbols(sd) == sym, "pair symbols do not reproduce the marked symbols");
  return sd;
}

namespace {

using Table = std::map<SymbolPair, MarkedSymplectic>;

const Table& inverse_table(int N, std::size_t r) {
  static std::mutex mu;
  static std::map<std::pair<int, std::size_t>, Table> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(N, r);
  if (auto it = tables.find(key); it != tables.end()) return it->second;
  Table t;
  for (const auto& ms : enumerate_marked(2 * N)) {
    if (ms.lambda().length() > 2 * r) continue;
    auto ins = t.emplace(marked_symbols(ms, r), ms);
    check_invariant(ins.second, "two couples share marked symbols");
  }
  return tables.emplace(key, std::move(t)).first->second;
}

std::optional<MarkedSymplectic> invert_even(const SpringerDatum& sd, const SymbolPair& sym) {
  std::size_t r = sd.r;
  if (sym.a_side.length() + sym.b_side.length() != 2 * r + 1) return std::nullopt;
  std::vector<std::pair<long, bool>> merged;  // value, from a-side
  for (long v : to_ints(sym.a_side)) merged.push_back({v, true});
  for (long v : to_ints(sym.b_side)) merged.push_back({v, false});
  std::sort(merged.begin(), merged.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  std::vector<int> parts;
  std::vector<int> eps;
  for (std::size_t j = 1; j <= merged.size(); ++j) {
    long part = 2 * (merged[j - 1].first - static_cast<long>(2 * r + 1 - j));
    if (part < 0 || (!parts.empty() && part > parts.back())) return std::nullopt;
    int odd_sign = (j % 2 == 1) ? 1 : -1;
    int e = merged[j - 1].second ? odd_sign : -odd_sign;
    if (part == 0 && e != 1) return std::nullopt;
    parts.push_back(static_cast<int>(part));
    eps.push_back(e);
  }
  if (parts.back() != 0) return std::nullopt;
  SignMap sm;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (parts[j] == 0) continue;
    auto [it, fresh] = sm.emplace(parts[j], eps[j]);
    if (!fresh && it->second != eps[j]) return std::nullopt;
  }
  MarkedSymplectic ms(Partition(parts), sm);
  if (k_of(ms) != sd.k || marked_symbols(ms, r) != sym) return std::nullopt;
  return ms;
}

}  // namespace

MarkedSymplectic pair_to_springer(const SpringerDatum& sd) {
  SymbolPair sym = pair_symbols(sd);
  if (auto ms = invert_even(sd, sym)) return *ms;
  const Table& t = inverse_table(sd.half_size(), sd.r);
  auto it = t.find(sym);
  check_invariant(it != t.end(), "no couple has these symbols");
  check_invariant(k_of(it->second) == sd.k, "matching couple has a different k");
  return it->second;
}

MarkedSymplectic sign_twist(const MarkedSymplectic& ms) {
  SpringerDatum sd = springer_to_pair(ms);
  std::size_t n = sd.alpha.length(), m = sd.beta.length();
  SpringerDatum tw(sd.k, transpose(sd.beta.trimmed()).padded(n), transpose(sd.alpha.trimmed()).padded(m), sd.r);
  return pair_to_springer(tw);
}

Params springer_params(const SpringerDatum& sd) {
  auto R = static_cast<std::int64_t>(sd.r);
  auto K = static_cast<std::int64_t>(sd.k);
  return Params{sd.alpha.length(), sd.beta.length(), Rat(2 * R + K), Rat(2 * R - K - 1), Rat(2)};
}

ShuffleOrder order_from_pair(const SpringerDatum& sd) {
  Symbol sym = symbol_of({sd.alpha, sd.beta}, springer_params(sd));
  std::string w;
  std::size_t ia = 0, ib = 0;
  while (ia < sym.lam_a.length() || ib < sym.lam_b.length()) {
    bool take_a = ib == sym.lam_b.length() || (ia < sym.lam_a.length() && sym.lam_a[ia] > sym.lam_b[ib]);
    if (ia < sym.lam_a.length() && ib < sym.lam_b.length() && sym.lam_a[ia] == sym.lam_b[ib])
      throw PreconditionError("merged symbol is not multiplicity free");
    w.push_back(take_a ? 'A' : 'B');
    (take_a ? ia : ib)++;
  }
  return ShuffleOrder(w);
}

std::pair<RatSeq, RatSeq> u_v_sequences(const MarkedSymplectic& ms, std::size_t r) {
  SpringerDatum sd = springer_to_pair(ms, r);
  Params p = springer_params(sd);
  auto n_under = static_cast<std::size_t>(p.A.numerator() + 1);
  auto m_under = static_cast<std::size_t>(p.B.numerator() + 1);
  RatSeq U = pointwise_add(sd.alpha.padded(n_under).to_rat(), arith_progression(p.A / 2, 0, Rat(1, 2)));
  RatSeq V = pointwise_add(sd.beta.padded(m_under).to_rat(), arith_progression(p.B / 2, 0, Rat(1, 2)));
  return {U, V};
}

}  // namespace springer
