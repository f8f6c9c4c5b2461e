#include <doctest.h>

#include <set>
#include <sstream>

#include "deq/combinat.hpp"
#include "generators.hpp"

using namespace deq;

TEST_CASE("value types validate their invariants") {
  CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Composition({1, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(DescentSet(4, {4}), std::invalid_argument);
  CHECK_THROWS_AS(DescentSet(4, {0}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);

  CHECK(Partition({4, 3, 2}).size() == 9);
  CHECK(Composition({2, 3, 1, 2, 1}).size() == 9);
  CHECK(DescentSet(5, {3, 1, 3}).members() == std::vector<int>{1, 3});
}

TEST_CASE("descent sets and compositions correspond") {
  CHECK(composition_from_subset(DescentSet(9, {2, 5, 6, 8})) == Composition({2, 3, 1, 2, 1}));
  CHECK(composition_from_subset(DescentSet(4, {})) == Composition({4}));
  CHECK(composition_from_subset(DescentSet(4, {1, 2, 3})) == Composition({1, 1, 1, 1}));

  CHECK(subset_from_composition(Composition({2, 3, 1, 2, 1})) == DescentSet(9, {2, 5, 6, 8}));
  CHECK(subset_from_composition(Composition({4})) == DescentSet(4, {}));
  CHECK(subset_from_composition(Composition({1, 1, 1})) == DescentSet(3, {1, 2}));
}

TEST_CASE("the subset bijection is an identity round trip up to n = 10") {
  for (int n = 1; n <= 10; ++n)
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
      std::vector<int> d;
      for (int i = 1; i < n; ++i)
        if (mask & (1u << (i - 1))) d.push_back(i);
      const DescentSet s(n, d);
      REQUIRE(subset_from_composition(composition_from_subset(s)) == s);
    }
}

TEST_CASE("descent sets of different degrees are distinct") {
  CHECK(DescentSet(3, {1}) != DescentSet(4, {1}));
  CHECK(DescentSet(4, {1, 3}).complement() == DescentSet(4, {2}));
}

TEST_CASE("dominance on compositions") {
  CHECK(dominance_compare(Composition({2, 3, 1, 2, 1}), Composition({4, 3, 2})) == Dominance::less);
  CHECK(dominance_leq(Composition({2, 3, 1, 2, 1}), Composition({4, 3, 2})));
  CHECK(dominance_compare(Composition({3, 1}), Composition({2, 2})) == Dominance::greater);
  CHECK(dominance_compare(Composition({2, 1, 1}), Composition({1, 3})) == Dominance::incomparable);
  CHECK(dominance_compare(Composition({1, 3}), Composition({2, 1, 1})) == Dominance::incomparable);
  CHECK(dominance_compare(Composition({2, 2}), Composition({2, 2})) == Dominance::equal);
  CHECK_THROWS_AS(dominance_compare(Composition({2}), Composition({3})), std::invalid_argument);
}

TEST_CASE("dominance is a partial order on compositions up to n = 8") {
  for (int n = 1; n <= 8; ++n) {
    const auto all = compositions_of(n);
    for (const auto& a : all) {
      REQUIRE(dominance_leq(a, a));
      for (const auto& b : all) {
        if (dominance_leq(a, b) && dominance_leq(b, a)) REQUIRE(a == b);
      }
    }
    // transitivity on a strided sample keeps the cubic loop cheap at n = 8
    const std::size_t step = n <= 6 ? 1 : 3;
    for (std::size_t x = 0; x < all.size(); x += step)
      for (std::size_t y = 0; y < all.size(); ++y)
        if (dominance_leq(all[x], all[y]))
          for (std::size_t z = 0; z < all.size(); ++z)
            if (dominance_leq(all[y], all[z])) REQUIRE(dominance_leq(all[x], all[z]));
  }
}

TEST_CASE("permutation statistics") {
  CHECK(inverse_descent_set(Permutation({7, 9, 3, 4, 6, 1, 2, 5, 8})) == DescentSet(9, {2, 5, 6, 8}));
  CHECK(inverse_descent_set(Permutation::identity(5)).empty());
  CHECK(inverse_descent_set(Permutation({3, 2, 1})) == DescentSet(3, {1, 2}));

  CHECK(descent_set(Permutation({2, 1, 3})) == DescentSet(3, {1}));
  CHECK(descent_set(Permutation::identity(4)).empty());
  CHECK(descent_set(Permutation({1, 4, 2, 3})) == DescentSet(4, {2}));

  CHECK(inversions(Permutation({2, 3, 1, 4})) == 2);
  CHECK(inversions(Permutation::identity(6)) == 0);
  CHECK(inversions(Permutation({3, 2, 1})) == 3);
}

TEST_CASE("inverse descents are descents of the inverse, n <= 7") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& w : permutations_of(n)) REQUIRE(inverse_descent_set(w) == descent_set(w.inverse()));
}

TEST_CASE("subwords and standardization") {
  const Permutation w({2, 3, 1, 4});
  const std::vector<int> j{1, 2, 3};
  CHECK(subword_restrict(w, j) == std::vector<int>{2, 3, 1});
  const std::vector<int> all{1, 2, 3, 4};
  CHECK(subword_restrict(w, all) == w.word());
  CHECK(subword_restrict(w, std::vector<int>{}).empty());

  CHECK(standardize(std::vector<int>{3, 5, 2}) == Permutation({2, 3, 1}));
  CHECK(standardize(std::vector<int>{1, 4, 7}) == Permutation::identity(3));
  CHECK(standardize(std::vector<int>{9, 1}) == Permutation({2, 1}));
  CHECK_THROWS_AS(standardize(std::vector<int>{2, 2}), std::invalid_argument);
}

TEST_CASE("standardized subwords ignore relabelling of letters outside J") {
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen::uniform(3, 8);
    const Permutation w = gen::permutation(n);
    const int lo = gen::uniform(1, n - 1), hi = gen::uniform(lo, n);
    std::vector<int> j;
    for (int v = lo; v <= hi; ++v) j.push_back(v);
    // Shuffle the letters outside [lo, hi] among themselves; the relative
    // positions of J's letters do not change.
    std::vector<int> outside;
    for (int v = 1; v <= n; ++v)
      if (v < lo || v > hi) outside.push_back(v);
    std::vector<int> shuffled = outside;
    std::shuffle(shuffled.begin(), shuffled.end(), gen::rng());
    std::vector<int> u = w.word();
    for (int& x : u) {
      auto it = std::find(outside.begin(), outside.end(), x);
      if (it != outside.end()) x = shuffled[it - outside.begin()];
    }
    REQUIRE(standardize(subword_restrict(w, j)) == standardize(subword_restrict(Permutation(u), j)));
  }
}

TEST_CASE("conjugation") {
  CHECK(conjugate(Partition({3, 3, 2, 1})) == Partition({4, 3, 2}));
  CHECK(conjugate(Partition({5})) == Partition({1, 1, 1, 1, 1}));
  for (int n = 1; n <= 8; ++n)
    for (const auto& p : partitions_of(n)) REQUIRE(conjugate(conjugate(p)) == p);
}

TEST_CASE("partition predicate and enumeration") {
  CHECK_FALSE(is_partition(Composition({2, 3, 1, 2, 1})));
  CHECK(is_partition(Composition({4, 3, 2})));
  CHECK(is_partition(Composition({1})));

  const std::vector<std::size_t> counts{1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 1; n <= 8; ++n) CHECK(partitions_of(n).size() == counts[n - 1]);
  const auto p4 = partitions_of(4);
  CHECK(p4.front() == Partition({4}));
  CHECK(p4.back() == Partition({1, 1, 1, 1}));
  CHECK(compositions_of(5).size() == 16);
  CHECK(permutations_of(5).size() == 120);
}

TEST_CASE("text rendering") {
  CHECK(to_string(Permutation({2, 3, 1, 4})) == "2314");
  CHECK(to_string(Partition({3, 1})) == "(3,1)");
  CHECK(to_string(DescentSet(4, {1, 3})) == "{1,3}");
  std::ostringstream os;
  os << Composition({1, 2});
  CHECK(os.str() == "(1,2)");
}
