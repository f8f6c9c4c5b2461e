#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace deq {

/// An ordered sequence of positive integers.
class Composition {
public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts)
      : Composition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int size() const { return size_; }
  int operator[](std::size_t k) const { return parts_[k]; }

  /// True when the parts are weakly decreasing.
  bool is_partition() const;

  auto operator<=>(const Composition&) const = default;

private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// A weakly decreasing sequence of positive integers.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}
  explicit Partition(const Composition& alpha);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int size() const { return size_; }
  int operator[](std::size_t k) const { return parts_[k]; }

  Composition as_composition() const { return Composition(parts_); }

  auto operator<=>(const Partition&) const = default;

private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// A subset of [n-1] = {1, ..., n-1} together with its ambient degree n.
/// Two descent sets compare equal only when their degrees agree.
class DescentSet {
public:
  DescentSet() = default;
  DescentSet(int n, std::vector<int> members);
  DescentSet(int n, std::initializer_list<int> members)
      : DescentSet(n, std::vector<int>(members)) {}

  int degree() const { return n_; }
  const std::vector<int>& members() const { return members_; }
  bool contains(int i) const;
  bool empty() const { return members_.empty(); }
  std::size_t count() const { return members_.size(); }

  /// [n-1] minus this set.
  DescentSet complement() const;

  auto operator<=>(const DescentSet&) const = default;

private:
  int n_ = 0;
  std::vector<int> members_;
};

/// A permutation of {1, ..., n} in one-line notation; positions are 1-based.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);
  Permutation(std::initializer_list<int> word)
      : Permutation(std::vector<int>(word)) {}

  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }
  /// Letter at 1-based position p.
  int at(int p) const { return word_[p - 1]; }
  /// 1-based position of the letter v.
  int position_of(int v) const { return pos_[v - 1]; }

  Permutation inverse() const;

  /// Permutation with the letters a and b interchanged.
  Permutation swap_values(int a, int b) const;

  auto operator<=>(const Permutation& o) const { return word_ <=> o.word_; }
  bool operator==(const Permutation& o) const { return word_ == o.word_; }

private:
  std::vector<int> word_;
  std::vector<int> pos_;
};

DescentSet subset_from_composition(const Composition& alpha);
Composition composition_from_subset(const DescentSet& d);

/// Outcome of comparing two compositions of the same size in dominance order.
enum class Dominance { equal, less, greater, incomparable };

/// Relation of `beta` to `alpha`: `less` means beta < alpha. Prefix sums of
/// the shorter composition are padded with its total. Throws
/// std::invalid_argument when the sizes differ.
Dominance dominance_compare(const Composition& beta, const Composition& alpha);

/// beta <= alpha in dominance order.
bool dominance_leq(const Composition& beta, const Composition& alpha);

/// { i : i+1 appears left of i in w }.
DescentSet inverse_descent_set(const Permutation& w);
/// { i : w_i > w_{i+1} }.
DescentSet descent_set(const Permutation& w);

long long inversions(const Permutation& w);

/// Letters of `letters` in their order of appearance in w.
std::vector<int> subword_restrict(const Permutation& w, std::span<const int> letters);

/// Order-isomorphic permutation of a word of distinct integers.
Permutation standardize(std::span<const int> word);

Partition conjugate(const Partition& lambda);

bool is_partition(const Composition& alpha);

/// Partitions of n in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Compositions of n in lexicographic order.
std::vector<Composition> compositions_of(int n);

/// All permutations of size n in lexicographic order.
std::vector<Permutation> permutations_of(int n);

std::string to_string(const Composition& alpha);
std::string to_string(const Partition& lambda);
std::string to_string(const DescentSet& d);
/// Letters concatenated when n <= 9, comma separated otherwise.
std::string to_string(const Permutation& w);

std::ostream& operator<<(std::ostream& os, const Composition& alpha);
std::ostream& operator<<(std::ostream& os, const Partition& lambda);
std::ostream& operator<<(std::ostream& os, const DescentSet& d);
std::ostream& operator<<(std::ostream& os, const Permutation& w);

}  // namespace deq
