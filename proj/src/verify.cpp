#include "springer/verify.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <thread>

#include "springer/correspondence.hpp"
#include "springer/errors.hpp"
#include "springer/extremal.hpp"

namespace springer {

namespace {

using Check = std::function<std::optional<std::string>(const MarkedSymplectic&)>;

std::vector<MarkedSymplectic> couples(int max_two_n, bool even_only) {
  std::vector<MarkedSymplectic> out;
  for (int two_n = 0; two_n <= max_two_n; two_n += 2)
    for (auto& ms : enumerate_marked(two_n))
      if (!even_only || ms.all_even()) out.push_back(ms);
  return out;
}

// Runs check on every item with a bounded pool; failures keep input order.
SweepOutcome sweep(const std::string& name, const std::vector<MarkedSymplectic>& items, const Check& check,
                   unsigned jobs) {
  std::vector<std::optional<std::string>> results(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        results[i] = check(items[i]);
      } catch (const std::exception& e) {
        results[i] = items[i].str() + ": " + e.what();
      }
    }
  };
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  SweepOutcome out{name, items.size(), {}};
  for (auto& r : results)
    if (r) out.failures.push_back(*r);
  return out;
}

std::optional<std::string> fail_if(bool bad, const MarkedSymplectic& ms, const std::string& what) {
  if (!bad) return std::nullopt;
  return ms.str() + ": " + what;
}

RatSeq merged_marked(const MarkedSymplectic& ms, std::size_t r) {
  SymbolPair p = marked_symbols(ms, r);
  return sorted_union(p.a_side, p.b_side);
}

}  // namespace

const std::vector<std::string>& sweep_names() {
  static const std::vector<std::string> names{"max", "min", "bar", "k", "uv", "bijection", "transfer", "half"};
  return names;
}

SweepOutcome run_sweep(const std::string& name, int max_two_n, unsigned jobs) {
  require(max_two_n >= 0 && max_two_n % 2 == 0, "--max-2n must be even and nonnegative");
  if (name == "max" || name == "min") {
    bool want_max = name == "max";
    return sweep(name, couples(max_two_n, true), [want_max](const MarkedSymplectic& ms) -> std::optional<std::string> {
      ExtremalReport rep = verify_extremal(ms);
      bool ok = want_max ? rep.max_ok() : rep.min_ok();
      if (ok && rep.source_entry_one && rep.above_source) return std::nullopt;
      std::string msg = ms.str() + ": ";
      for (const auto& f : rep.failures) msg += f + "; ";
      return msg;
    }, jobs);
  }
  if (name == "bar") {
    return sweep(name, couples(max_two_n, true), [](const MarkedSymplectic& ms) {
      MarkedSymplectic a = bar(ms), b = lambda_max_pset(ms);
      return fail_if(!(a == b), ms, "bar " + a.str() + " vs constrained set " + b.str());
    }, jobs);
  }
  if (name == "k") {
    return sweep(name, couples(max_two_n, true), [](const MarkedSymplectic& ms) {
      return fail_if(k_of(bar(ms)) != k_of(ms), ms, "bar changes k");
    }, jobs);
  }
  if (name == "uv") {
    return sweep(name, couples(max_two_n, true), [](const MarkedSymplectic& ms) -> std::optional<std::string> {
      Partition tl = transpose(sign_twist(ms).lambda());
      for (std::size_t r : {default_rank(ms), default_rank(ms) + 1}) {
        auto [U, V] = u_v_sequences(ms, r);
        RatSeq lhs = sorted_union(scale(U, 2), scale(V, 2));
        auto R = static_cast<std::int64_t>(r);
        RatSeq shift = sorted_union(arith_progression(2 * R, 0, 1), arith_progression(2 * R - 1, 0, 1));
        RatSeq rhs = pointwise_add(tl.padded(4 * r + 1).to_rat(), shift);
        if (!(lhs == rhs)) return ms.str() + ": U/V identity fails at r=" + std::to_string(r);
      }
      return std::nullopt;
    }, jobs);
  }
  if (name == "bijection") {
    return sweep(name, couples(max_two_n, false), [](const MarkedSymplectic& ms) -> std::optional<std::string> {
      std::size_t r = default_rank(ms);
      SpringerDatum a = springer_to_pair(ms, r), b = springer_to_pair(ms, r + 1);
      if (!(pair_to_springer(a) == ms) || !(pair_to_springer(b) == ms)) return ms.str() + ": round trip fails";
      if (a.k != b.k || !a.alpha.shape_eq(b.alpha) || !a.beta.shape_eq(b.beta)) return ms.str() + ": depends on r";
      return std::nullopt;
    }, jobs);
  }
  if (name == "transfer") {
    std::vector<MarkedSymplectic> all = couples(max_two_n, false);
    return sweep(name, all, [&all](const MarkedSymplectic& x) -> std::optional<std::string> {
      std::size_t r = default_rank(x);
      RatSeq mx = merged_marked(x, r);
      for (const auto& y : all) {
        if (y.half_size() != x.half_size() || k_of(y) != k_of(x)) continue;
        bool lam = shape_dominance_leq(x.lambda(), y.lambda());
        bool sym = dominance_leq(mx, merged_marked(y, r));
        if (lam != sym) return x.str() + " vs " + y.str() + ": dominance not transferred";
      }
      return std::nullopt;
    }, jobs);
  }
  if (name == "half") {
    return sweep(name, couples(max_two_n, true), [](const MarkedSymplectic& ms) {
      return fail_if(!half_step_identity(ms), ms, "P_{A/2,B/2;1/2} differs from P_{A,B;2}");
    }, jobs);
  }
  throw ArgumentError("unknown sweep '" + name + "'");
}

}  // namespace springer
