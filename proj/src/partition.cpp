#include "springer/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "springer/errors.hpp"

namespace springer {

bool is_integer(const Rat& x) { return x.denominator() == 1; }

std::string to_string(const Rat& x) {
  if (is_integer(x)) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

RatSeq::RatSeq(std::vector<Rat> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 1; i < entries_.size(); ++i)
    require(entries_[i - 1] >= entries_[i], "RatSeq must be weakly decreasing");
}

RatSeq::RatSeq(std::initializer_list<Rat> entries) : RatSeq(std::vector<Rat>(entries)) {}

Rat RatSeq::sum() const { return std::accumulate(entries_.begin(), entries_.end(), Rat(0)); }

bool RatSeq::multiplicity_free() const {
  return std::adjacent_find(entries_.begin(), entries_.end()) == entries_.end();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    require(parts_[i] >= 0, "partition parts must be nonnegative");
    if (i > 0) require(parts_[i - 1] >= parts_[i], "partition must be weakly decreasing");
  }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::zeros(std::size_t n) { return Partition(std::vector<int>(n, 0)); }

long Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

std::size_t Partition::nonzero_count() const {
  return static_cast<std::size_t>(std::count_if(parts_.begin(), parts_.end(), [](int x) { return x > 0; }));
}

Partition Partition::trimmed() const {
  std::vector<int> v(parts_.begin(), parts_.begin() + static_cast<long>(nonzero_count()));
  return Partition(std::move(v));
}

Partition Partition::padded(std::size_t len) const {
  require(nonzero_count() <= len, "padding would drop a nonzero part");
  std::vector<int> v(len, 0);
  std::copy_n(parts_.begin(), std::min(len, parts_.size()), v.begin());
  return Partition(std::move(v));
}

bool Partition::shape_eq(const Partition& other) const { return trimmed() == other.trimmed(); }

RatSeq Partition::to_rat() const {
  std::vector<Rat> v(parts_.begin(), parts_.end());
  return RatSeq(std::move(v));
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

Rat partial_sum(const RatSeq& seq, std::size_t k) {
  require(k <= seq.length(), "partial_sum index out of range");
  return std::accumulate(seq.entries().begin(), seq.entries().begin() + static_cast<long>(k), Rat(0));
}

long partial_sum(const Partition& p, std::size_t k) {
  require(k <= p.length(), "partial_sum index out of range");
  return std::accumulate(p.parts().begin(), p.parts().begin() + static_cast<long>(k), 0L);
}

bool dominance_leq(const RatSeq& a, const RatSeq& b) {
  require(a.length() == b.length(), "dominance_leq needs equal lengths");
  Rat sa = 0, sb = 0;
  for (std::size_t i = 0; i < a.length(); ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

bool dominance_leq(const Partition& a, const Partition& b) {
  require(a.length() == b.length(), "dominance_leq needs equal lengths");
  long sa = 0, sb = 0;
  for (std::size_t i = 0; i < a.length(); ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

bool shape_dominance_leq(const Partition& a, const Partition& b) {
  std::size_t len = std::max(a.length(), b.length());
  return dominance_leq(a.padded(len), b.padded(len));
}

RatSeq sorted_union(const RatSeq& a, const RatSeq& b) {
  std::vector<Rat> v;
  v.reserve(a.length() + b.length());
  std::merge(a.entries().begin(), a.entries().end(), b.entries().begin(), b.entries().end(),
             std::back_inserter(v), std::greater<Rat>());
  return RatSeq(std::move(v));
}

Partition sorted_union(const Partition& a, const Partition& b) {
  std::vector<int> v;
  v.reserve(a.length() + b.length());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(v), std::greater<int>());
  return Partition(std::move(v));
}

RatSeq pointwise_add(const RatSeq& a, const RatSeq& b) {
  require(a.length() == b.length(), "pointwise_add needs equal lengths");
  std::vector<Rat> v(a.length());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
  return RatSeq(std::move(v));
}

Partition pointwise_add(const Partition& a, const Partition& b) {
  require(a.length() == b.length(), "pointwise_add needs equal lengths");
  std::vector<int> v(a.length());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
  return Partition(std::move(v));
}

RatSeq pointwise_sub(const RatSeq& a, const RatSeq& b) {
  require(a.length() == b.length(), "pointwise_sub needs equal lengths");
  std::vector<Rat> v(a.length());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
  return RatSeq(std::move(v));
}

RatSeq scale(const RatSeq& a, const Rat& c) {
  require(c >= 0, "scale factor must be nonnegative");
  std::vector<Rat> v(a.entries());
  for (auto& x : v) x *= c;
  return RatSeq(std::move(v));
}

RatSeq arith_progression(const Rat& R, const Rat& R2, const Rat& s) {
  require(s > 0, "progression step must be positive");
  if (R2 == R + s) return RatSeq();
  Rat steps = (R - R2) / s;
  require(is_integer(steps) && steps >= 0, "progression bounds not separated by a multiple of s");
  std::vector<Rat> v;
  for (std::int64_t i = 0; i <= steps.numerator(); ++i) v.push_back(R - s * i);
  return RatSeq(std::move(v));
}

Partition transpose(const Partition& p, std::optional<std::size_t> length) {
  int first = p.empty() ? 0 : p[0];
  std::vector<int> v(static_cast<std::size_t>(first), 0);
  for (int x : p.parts())
    for (int c = 0; c < x; ++c) ++v[static_cast<std::size_t>(c)];
  Partition t(std::move(v));
  return length ? t.padded(*length) : t;
}

std::size_t multiplicity(const Partition& p, int i) {
  return static_cast<std::size_t>(std::count(p.parts().begin(), p.parts().end(), i));
}

bool is_symplectic(const Partition& p) {
  for (int x : p.parts())
    if (x % 2 == 1 && multiplicity(p, x) % 2 == 1) return false;
  return true;
}

std::vector<int> jord_bp(const Partition& p) {
  std::vector<int> out;
  for (int x : p.parts())
    if (x > 0 && x % 2 == 0 && (out.empty() || out.back() != x)) out.push_back(x);
  return out;
}

namespace {

void partitions_rec(int remaining, int cap, std::size_t slots, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (slots == 0) return;
  for (int x = std::min(cap, remaining); x >= 1; --x) {
    // The remaining slots can hold at most slots * x.
    if (static_cast<long>(x) * static_cast<long>(slots) < remaining) break;
    cur.push_back(x);
    partitions_rec(remaining - x, x, slots - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int total, std::size_t max_len, int max_part) {
  require(total >= 0, "total must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(total, max_part < 0 ? total : max_part, max_len, cur, out);
  return out;
}

std::vector<Partition> enumerate_symplectic(int two_n) {
  require(two_n >= 0 && two_n % 2 == 0, "enumerate_symplectic needs an even nonnegative size");
  std::vector<Partition> out;
  for (auto& p : enumerate_partitions(two_n, static_cast<std::size_t>(two_n)))
    if (is_symplectic(p)) out.push_back(p);
  return out;
}

MarkedSymplectic::MarkedSymplectic(const Partition& lambda, SignMap epsilon)
    : lambda_(lambda.trimmed()), epsilon_(std::move(epsilon)) {
  require(is_symplectic(lambda_), "partition " + lambda_.str() + " is not symplectic");
  auto jord = jord_bp(lambda_);
  require(jord.size() == epsilon_.size(), "signs must be keyed by the even parts of lambda");
  std::size_t i = 0;
  for (const auto& [part, sgn] : epsilon_) {
    require(part == jord[i++], "signs must be keyed by the even parts of lambda");
    require(sgn == 1 || sgn == -1, "signs must be +1 or -1");
  }
}

int MarkedSymplectic::sign(int part) const {
  auto it = epsilon_.find(part);
  require(it != epsilon_.end(), "no sign attached to part " + std::to_string(part));
  return it->second;
}

bool MarkedSymplectic::all_even() const {
  return std::all_of(lambda_.parts().begin(), lambda_.parts().end(), [](int x) { return x % 2 == 0; });
}

std::string MarkedSymplectic::str() const {
  std::ostringstream os;
  os << '(' << lambda_.str() << ",{";
  bool first = true;
  for (const auto& [part, sgn] : epsilon_) {
    os << (first ? "" : ",") << part << ':' << (sgn > 0 ? '+' : '-');
    first = false;
  }
  os << "})";
  return os.str();
}

std::vector<MarkedSymplectic> enumerate_marked(int two_n) {
  std::vector<MarkedSymplectic> out;
  for (const auto& p : enumerate_symplectic(two_n)) {
    auto jord = jord_bp(p);
    std::size_t count = std::size_t{1} << jord.size();
    for (std::size_t mask = 0; mask < count; ++mask) {
      SignMap eps;
      for (std::size_t i = 0; i < jord.size(); ++i) {
        // Most significant bit belongs to the largest part.
        bool minus = (mask >> (jord.size() - 1 - i)) & 1U;
        eps[jord[i]] = minus ? -1 : 1;
      }
      out.emplace_back(p, std::move(eps));
    }
  }
  return out;
}

std::vector<BiPartition> enumerate_bipartitions(int n, std::size_t len_a, std::size_t len_b) {
  require(n >= 0, "size must be nonnegative");
  std::vector<BiPartition> out;
  for (int a = n; a >= 0; --a)
    for (const auto& alpha : enumerate_partitions(a, len_a))
      for (const auto& beta : enumerate_partitions(n - a, len_b))
        out.push_back({alpha.padded(len_a), beta.padded(len_b)});
  return out;
}

}  // namespace springer
