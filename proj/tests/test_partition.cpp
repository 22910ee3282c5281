#include "test_support.hpp"

#include "oracles.hpp"
#include "springer/errors.hpp"
#include "springer/partition.hpp"

using namespace springer;

namespace {

RatSeq rs(std::initializer_list<int> v) {
  std::vector<Rat> out(v.begin(), v.end());
  return RatSeq(out);
}

}  // namespace

TEST_CASE("rationals stay reduced") {
  Rat x(6, 4);
  CHECK(x.numerator() == 3);
  CHECK(x.denominator() == 2);
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(to_string(Rat(-3, 6)) == "-1/2");
  CHECK(is_integer(Rat(4, 2)));
}

TEST_CASE("sequences reject increasing input") {
  CHECK_THROWS_AS(Partition({1, 2}), ArgumentError);
  CHECK_THROWS_AS(Partition({2, -1}), ArgumentError);
  CHECK_THROWS_AS(rs({0, 1}), ArgumentError);
}

TEST_CASE("partial_sum") {
  CHECK(partial_sum(rs({3, 1, 0}), 2) == Rat(4));
  CHECK(partial_sum(rs({3, 1, 0}), 0) == Rat(0));
  CHECK(partial_sum(rs({4, 3, 1}), 3) == Rat(8));
  CHECK_THROWS_AS(partial_sum(rs({4, 3, 1}), 4), ArgumentError);
}

TEST_CASE("dominance_leq") {
  CHECK(dominance_leq(rs({3, 3, 2}), rs({4, 3, 1})));
  CHECK(dominance_leq(rs({4, 3, 1}), rs({4, 3, 1})));
  CHECK_FALSE(dominance_leq(rs({4, 3, 1}), rs({3, 3, 2})));
  CHECK_THROWS_AS(dominance_leq(rs({1}), rs({1, 0})), ArgumentError);
  CHECK(shape_dominance_leq(Partition{2, 2}, Partition{4}));
}

TEST_CASE("sorted_union and pointwise_add") {
  CHECK(sorted_union(rs({3, 1}), rs({2, 2})) == rs({3, 2, 2, 1}));
  CHECK(sorted_union(RatSeq(), rs({5, 1})) == rs({5, 1}));
  CHECK(sorted_union(rs({4}), rs({3, 1})) == rs({4, 3, 1}));
  CHECK(pointwise_add(rs({2, 0, 0}), rs({2, 1, 0})) == rs({4, 1, 0}));
  CHECK(pointwise_add(rs({1, 0}), rs({2, 0})) == rs({3, 0}));
  CHECK(pointwise_add(rs({5, 2}), rs({0, 0})) == rs({5, 2}));
  CHECK_THROWS_AS(pointwise_add(rs({1}), rs({1, 0})), ArgumentError);
}

TEST_CASE("arith_progression") {
  CHECK(arith_progression(4, 0, 2) == rs({4, 2, 0}));
  CHECK(arith_progression(3, 5, 2).empty());
  CHECK(arith_progression(3, 3, 1) == rs({3}));
  CHECK(arith_progression(Rat(3, 2), 0, Rat(1, 2)).length() == 4);
  CHECK_THROWS_AS(arith_progression(4, 1, 2), ArgumentError);
  CHECK_THROWS_AS(arith_progression(1, 3, 1), ArgumentError);
}

TEST_CASE("transpose, multiplicity, symplectic, jord") {
  CHECK(transpose(Partition{2, 2}) == Partition({2, 2}));
  CHECK(transpose(Partition{3, 1}) == Partition({2, 1, 1}));
  CHECK(transpose(Partition{}) == Partition{});
  CHECK(transpose(Partition{1}, 3) == Partition({1, 0, 0}));
  CHECK(multiplicity(Partition{2, 2, 1, 1}, 2) == 2);
  CHECK(multiplicity(Partition{2, 2}, 3) == 0);
  CHECK(multiplicity(Partition{4}, 4) == 1);
  CHECK(is_symplectic(Partition{2, 2}));
  CHECK(is_symplectic(Partition{3, 3}));
  CHECK_FALSE(is_symplectic(Partition{3, 1}));
  CHECK(jord_bp(Partition{4, 2, 2, 1, 1}) == std::vector<int>{4, 2});
  CHECK(jord_bp(Partition{3, 3}).empty());
  CHECK(jord_bp(Partition{2}) == std::vector<int>{2});
}

TEST_CASE("transpose matches the oracle, is an involution and reverses dominance") {
  for (int n = 0; n <= 10; ++n) {
    auto all = enumerate_partitions(n, static_cast<std::size_t>(n));
    for (const auto& p : all) {
      CHECK(transpose(p).parts() == oracle::conjugate(p.parts()));
      CHECK(transpose(transpose(p)) == p);
    }
    for (const auto& a : all)
      for (const auto& b : all)
        CHECK(shape_dominance_leq(a, b) == shape_dominance_leq(transpose(b), transpose(a)));
  }
}

TEST_CASE("transpose exchanges union and sum") {
  for (int n = 0; n <= 6; ++n)
    for (int a = 0; a <= n; ++a)
      for (const auto& x : enumerate_partitions(a, static_cast<std::size_t>(a)))
        for (const auto& y : enumerate_partitions(n - a, static_cast<std::size_t>(n - a))) {
          std::size_t L = std::max(transpose(x).length(), transpose(y).length());
          Partition lhs = transpose(sorted_union(x, y));
          Partition rhs = pointwise_add(transpose(x, L), transpose(y, L));
          CHECK(lhs.shape_eq(rhs));
        }
}

TEST_CASE("union is monotone for dominance") {
  auto parts = [](int n) { return enumerate_partitions(n, 3); };
  for (const auto& l1 : parts(4))
    for (const auto& l2 : parts(4))
      for (const auto& m1 : parts(3))
        for (const auto& m2 : parts(3)) {
          Partition a = l1.padded(3), b = l2.padded(3), c = m1.padded(3), d = m2.padded(3);
          if (!dominance_leq(a, b) || !dominance_leq(c, d)) continue;
          Partition u = sorted_union(a, c), v = sorted_union(b, d);
          CHECK(dominance_leq(u, v));
          CHECK((u == v) == (a == b && c == d));
        }
}

TEST_CASE("enumerations") {
  CHECK(enumerate_symplectic(2) == std::vector<Partition>{Partition{2}, Partition{1, 1}});
  CHECK(enumerate_symplectic(0) == std::vector<Partition>{Partition{}});
  CHECK(enumerate_symplectic(4) ==
        std::vector<Partition>{Partition{4}, Partition{2, 2}, Partition{2, 1, 1}, Partition{1, 1, 1, 1}});
  CHECK_THROWS_AS(enumerate_symplectic(3), ArgumentError);

  auto m2 = enumerate_marked(2);
  REQUIRE(m2.size() == 3);
  CHECK(m2[0] == MarkedSymplectic(Partition{2}, {{2, 1}}));
  CHECK(m2[1] == MarkedSymplectic(Partition{2}, {{2, -1}}));
  CHECK(m2[2] == MarkedSymplectic(Partition{1, 1}, {}));
  CHECK(enumerate_marked(0).size() == 1);
  CHECK(enumerate_marked(4).size() == 7);

  for (int n = 0; n <= 12; ++n)
    CHECK(static_cast<long>(enumerate_partitions(n, static_cast<std::size_t>(n)).size()) == oracle::partition_count(n));
  for (int two_n = 0; two_n <= 14; two_n += 2) {
    auto ms = enumerate_marked(two_n);
    CHECK(static_cast<long>(ms.size()) == oracle::marked_count(two_n));
    std::set<MarkedSymplectic> uniq(ms.begin(), ms.end());
    CHECK(uniq.size() == ms.size());
  }

  auto bp = enumerate_bipartitions(2, 2, 1);
  std::vector<BiPartition> want{{Partition{2, 0}, Partition{0}},
                                {Partition{1, 1}, Partition{0}},
                                {Partition{1, 0}, Partition{1}},
                                {Partition{0, 0}, Partition{2}}};
  CHECK(bp == want);
  CHECK(enumerate_bipartitions(1, 1, 1).size() == 2);
  CHECK(enumerate_bipartitions(0, 1, 1).size() == 1);
}

TEST_CASE("marked couples validate their signs") {
  CHECK_THROWS_AS(MarkedSymplectic(Partition{3, 1}, {}), ArgumentError);
  CHECK_THROWS_AS(MarkedSymplectic(Partition{2}, {{4, 1}}), ArgumentError);
  CHECK_THROWS_AS(MarkedSymplectic(Partition{2}, {}), ArgumentError);
  MarkedSymplectic ms(Partition{2, 2, 0}, {{2, -1}});
  CHECK(ms.lambda() == Partition({2, 2}));
  CHECK(ms.half_size() == 2);
}
