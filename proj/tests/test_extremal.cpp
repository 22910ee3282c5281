#include "test_support.hpp"

#include "springer/errors.hpp"
#include "springer/extremal.hpp"

using namespace springer;

namespace {

MarkedSymplectic mk(std::initializer_list<int> lam, SignMap eps = {}) {
  return MarkedSymplectic(Partition(std::vector<int>(lam)), std::move(eps));
}

std::vector<MarkedSymplectic> even_couples(int max_two_n) {
  std::vector<MarkedSymplectic> out;
  for (int two_n = 0; two_n <= max_two_n; two_n += 2)
    for (auto& ms : enumerate_marked(two_n))
      if (ms.all_even()) out.push_back(ms);
  return out;
}

using Idx = std::vector<std::size_t>;

}  // namespace

TEST_CASE("bar steps") {
  BarTrace t = bar_step(mk({2}, {{2, 1}}), 1);
  CHECK(t.frak_s == Idx{1, 2, 3});
  CHECK(t.j_b == Idx{2});
  CHECK(t.bar_first == 2);
  CHECK(t.derived == mk({}));

  t = bar_step(mk({2, 2}, {{2, 1}}), 1);
  CHECK(t.frak_s == Idx{1, 2, 3});
  CHECK(t.bar_first == 4);
  CHECK(t.derived == mk({}));

  t = bar_step(mk({2, 2}, {{2, -1}}), 1);
  CHECK(t.frak_s == Idx{1, 2});
  CHECK(t.j_a == Idx{2, 3});
  CHECK(t.bar_first == 2);
  CHECK(t.derived == mk({2}, {{2, -1}}));

  CHECK_THROWS_AS(bar_step(mk({1, 1}), 1), ArgumentError);
  CHECK_THROWS_AS(bar_step(mk({}), 1), ArgumentError);
}

TEST_CASE("bar") {
  CHECK(bar(mk({2}, {{2, 1}})) == mk({2}, {{2, 1}}));
  CHECK(bar(mk({2, 2}, {{2, 1}})) == mk({4}, {{4, 1}}));
  CHECK(bar(mk({2, 2}, {{2, -1}})) == mk({2, 2}, {{2, -1}}));
  CHECK(bar_chain(mk({2, 2}, {{2, -1}})).size() == 2);
  for (const auto& ms : even_couples(10)) {
    MarkedSymplectic b = bar(ms);
    CHECK(b.all_even());
    CHECK(is_symplectic(b.lambda()));
    CHECK(b.half_size() == ms.half_size());
    for (const auto& tr : bar_chain(ms)) {
      CHECK(tr.bar_first % 2 == 0);
      CHECK(tr.bar_first >= 2);
      CHECK(tr.bar_first <= tr.source.lambda().sum());
      CHECK(tr.derived.lambda().sum() == tr.source.lambda().sum() - tr.bar_first);
      CHECK(tr.frak_s.front() == 1);
    }
  }
}

TEST_CASE("multiplicities between couples") {
  MarkedSymplectic src = mk({2, 2}, {{2, 1}});
  CHECK(mult_pair(src, src) == 1);
  CHECK(mult_pair(src, mk({4}, {{4, 1}})) == 1);
  CHECK(mult_pair(src, mk({1, 1, 1, 1})) == 0);
  CHECK(mult_pair(src, mk({4}, {{4, -1}})) == 0);
  CHECK_THROWS_AS(mult_pair(mk({1, 1}), mk({2}, {{2, 1}})), ArgumentError);

  MultTable t = mult_table(mk({2}, {{2, 1}}));
  CHECK(t.entries == std::map<MarkedSymplectic, long>{{mk({2}, {{2, 1}}), 1}});
  t = mult_table(src);
  CHECK(t.entries.at(src) == 1);
  CHECK(t.entries.at(mk({4}, {{4, 1}})) == 1);
  CHECK(mult_table(mk({})).entries.size() == 1);
}

TEST_CASE("tables sit above their source") {
  for (const auto& ms : even_couples(8)) {
    MultTable t = mult_table(ms);
    CHECK(t.entries.at(ms) == 1);
    for (const auto& [x, v] : t.entries) {
      CHECK(k_of(x) == k_of(ms));
      CHECK(v > 0);
      if (!(x == ms)) CHECK(shape_dominance_less(ms.lambda(), x.lambda()));
    }
  }
}

TEST_CASE("extremal couples") {
  CHECK(lambda_max(mk({2, 2}, {{2, 1}})) == mk({4}, {{4, 1}}));
  CHECK(lambda_max_pset(mk({2, 2}, {{2, 1}})) == mk({4}, {{4, 1}}));
  CHECK(lambda_max(mk({2}, {{2, 1}})) == mk({2}, {{2, 1}}));
  CHECK(lambda_max(mk({2, 2}, {{2, -1}})) == mk({2, 2}, {{2, -1}}));
  CHECK(lambda_min(mk({2, 2}, {{2, 1}})) == sign_twist(mk({4}, {{4, 1}})));
  CHECK(lambda_min(mk({2}, {{2, 1}})) == mk({1, 1}));
  for (const auto& ms : even_couples(8)) {
    CHECK(sign_twist(lambda_min(ms)) == lambda_max(ms));
    CHECK(half_step_identity(ms));
  }
}

TEST_CASE("extremal reports") {
  ExtremalReport rep = verify_extremal(mk({2, 2}, {{2, 1}}));
  CHECK(rep.pass());
  CHECK(rep.max == mk({4}, {{4, 1}}));
  CHECK(verify_extremal(mk({})).pass());
  for (const auto& ms : even_couples(8)) {
    ExtremalReport r = verify_extremal(ms);
    CHECK_MESSAGE(r.pass(), ms.str());
    CHECK(r.max_ok());
    CHECK(r.min_ok());
  }
}

TEST_CASE("strict shape dominance") {
  CHECK(shape_dominance_less(Partition{2, 2}, Partition{4}));
  CHECK_FALSE(shape_dominance_less(Partition{4}, Partition{4}));
  CHECK_FALSE(shape_dominance_less(Partition{3, 3}, Partition{4, 1, 1}));
  CHECK_FALSE(shape_dominance_less(Partition{4, 1, 1}, Partition{3, 3}));
}
