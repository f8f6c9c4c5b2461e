#pragma once

// Seeded random inputs for property tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "deq/combinat.hpp"

namespace gen {

inline std::mt19937& rng() {
  static std::mt19937 engine(20240607u);
  return engine;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline deq::Permutation permutation(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::shuffle(w.begin(), w.end(), rng());
  return deq::Permutation(std::move(w));
}

inline deq::DescentSet descent_set(int n) {
  std::vector<int> d;
  for (int i = 1; i < n; ++i)
    if (uniform(0, 1)) d.push_back(i);
  return deq::DescentSet(n, std::move(d));
}

inline deq::Partition partition(int n) {
  std::vector<int> parts;
  int left = n, cap = n;
  while (left > 0) {
    const int p = uniform(1, std::min(left, cap));
    parts.push_back(p);
    left -= p;
    cap = p;
  }
  return deq::Partition(std::move(parts));
}

}  // namespace gen
