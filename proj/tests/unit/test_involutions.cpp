#include <doctest.h>

#include <set>

#include "deq/involutions.hpp"
#include "oracles.hpp"

using namespace deq;

TEST_CASE("Haiman's elementary involutions") {
  CHECK(haiman_d(2, Permutation({2, 3, 1, 4})) == Permutation({1, 3, 2, 4}));
  CHECK(haiman_d(3, Permutation({1, 3, 2, 4})) == Permutation({1, 4, 2, 3}));
  CHECK(haiman_d(2, Permutation({1, 2, 3, 4})) == Permutation({1, 2, 3, 4}));
  CHECK(haiman_d(2, Permutation({2, 1, 4, 3})) == Permutation({3, 1, 4, 2}));
  CHECK(haiman_d(3, Permutation({2, 1, 4, 3})) == Permutation({3, 1, 4, 2}));
  CHECK_THROWS_AS(haiman_d(1, Permutation({2, 1, 3})), std::out_of_range);
  CHECK_THROWS_AS(haiman_d(3, Permutation({2, 1, 3})), std::out_of_range);
}

TEST_CASE("twisted involutions") {
  CHECK(twisted_d(2, Permutation({2, 1, 3})) == Permutation({1, 3, 2}));
  CHECK(twisted_d(2, Permutation({2, 3, 1, 4})) == Permutation({3, 1, 2, 4}));
  CHECK(twisted_d(2, Permutation({1, 2, 3})) == Permutation({1, 2, 3}));
  CHECK(twisted_d(2, Permutation({2, 3, 1})) == Permutation({3, 1, 2}));
  CHECK(twisted_d(3, Permutation({3, 1, 2, 4})) == Permutation({2, 1, 4, 3}));
}

TEST_CASE("hybrid involutions") {
  CHECK(hybrid_phi(2, Permutation({2, 3, 1, 4})) == Permutation({3, 1, 2, 4}));
  CHECK(hybrid_phi(3, Permutation({3, 1, 2, 4})) == Permutation({4, 1, 2, 3}));
  CHECK(hybrid_phi(2, Permutation({2, 1, 4, 3})) == Permutation({3, 1, 4, 2}));
  CHECK(neighbours_consecutive(2, Permutation({2, 3, 1, 4})));
  CHECK_FALSE(neighbours_consecutive(3, Permutation({2, 3, 1, 4})));
}

TEST_CASE("all three families are involutions with the same fixed points, n <= 7") {
  for (int n = 3; n <= 7; ++n)
    for (const auto& w : permutations_of(n))
      for (int i = 2; i <= n - 1; ++i) {
        const bool between = letter_between_neighbours(i, w);
        const auto h = haiman_d(i, w), t = twisted_d(i, w), p = hybrid_phi(i, w);
        REQUIRE(haiman_d(i, h) == w);
        REQUIRE(twisted_d(i, t) == w);
        REQUIRE(hybrid_phi(i, p) == w);
        REQUIRE((h == w) == between);
        REQUIRE((t == w) == between);
        REQUIRE((p == w) == between);
        const auto d = inverse_descent_set(w);
        REQUIRE(between == (d.contains(i - 1) == d.contains(i)));
        REQUIRE(h.word() == oracle::haiman_move(i, w.word()));
      }
}

TEST_CASE("the hybrid move keeps the positions of i-1, i, i+1") {
  for (int n = 3; n <= 7; ++n)
    for (const auto& w : permutations_of(n))
      for (int i = 2; i <= n - 1; ++i) {
        const auto u = hybrid_phi(i, w);
        std::set<int> before{w.position_of(i - 1), w.position_of(i), w.position_of(i + 1)};
        std::set<int> after{u.position_of(i - 1), u.position_of(i), u.position_of(i + 1)};
        REQUIRE(before == after);
        REQUIRE(neighbours_consecutive(i, w) == neighbours_consecutive(i, u));
      }
}

TEST_CASE("moves only touch the three letters involved") {
  for (const auto& w : permutations_of(6))
    for (int i = 2; i <= 5; ++i)
      for (const auto& u : {haiman_d(i, w), twisted_d(i, w)})
        for (int p = 1; p <= 6; ++p)
          if (w.at(p) < i - 1 || w.at(p) > i + 1) REQUIRE(u.at(p) == w.at(p));
}

TEST_CASE("lifting to tableaux") {
  const StandardYoungTableau a({{1, 3, 4}, {2}});
  CHECK(lift_to_tableaux(2, a) == StandardYoungTableau({{1, 2, 4}, {3}}));
  const StandardYoungTableau b({{1, 3}, {2, 4}});
  CHECK(lift_to_tableaux(2, b) == StandardYoungTableau({{1, 2}, {3, 4}}));
  CHECK(lift_to_tableaux(3, b) == StandardYoungTableau({{1, 2}, {3, 4}}));
  const auto row = superstandard(Partition({3}));
  CHECK(lift_to_tableaux(2, row) == row);
}

TEST_CASE("lifted moves are shape-preserving involutions whose orbits are whole shapes, n <= 6") {
  for (int n = 3; n <= 6; ++n)
    for (const auto& p : partitions_of(n)) {
      const auto all = enumerate_syt(p);
      for (const auto& t : all)
        for (int i = 2; i <= n - 1; ++i) {
          const auto u = lift_to_tableaux(i, t);
          REQUIRE(u.shape() == p);
          REQUIRE(lift_to_tableaux(i, u) == t);
        }
      std::set<StandardYoungTableau> seen{all.front()};
      std::vector<StandardYoungTableau> stack{all.front()};
      while (!stack.empty()) {
        const auto t = stack.back();
        stack.pop_back();
        for (int i = 2; i <= n - 1; ++i) {
          const auto u = lift_to_tableaux(i, t);
          if (seen.insert(u).second) stack.push_back(u);
        }
      }
      REQUIRE(seen.size() == all.size());
    }
}
