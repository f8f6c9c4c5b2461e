#include "deq/combinat.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace deq {

namespace {

std::string join(const std::vector<int>& xs, const char* sep) {
  std::ostringstream out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out << sep;
    out << xs[k];
  }
  return out.str();
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("composition parts must be positive");
    size_ += p;
  }
}

bool Composition::is_partition() const {
  return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>());
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (k > 0 && parts_[k] > parts_[k - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ += parts_[k];
  }
}

Partition::Partition(const Composition& alpha) : Partition(alpha.parts()) {}

DescentSet::DescentSet(int n, std::vector<int> members) : n_(n), members_(std::move(members)) {
  if (n < 1) throw std::invalid_argument("descent set degree must be positive");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (int m : members_)
    if (m < 1 || m > n - 1)
      throw std::invalid_argument("descent " + std::to_string(m) + " outside [1, " +
                                  std::to_string(n - 1) + "]");
}

bool DescentSet::contains(int i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

DescentSet DescentSet::complement() const {
  std::vector<int> rest;
  for (int i = 1; i < n_; ++i)
    if (!contains(i)) rest.push_back(i);
  return DescentSet(n_, std::move(rest));
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)), pos_(word_.size(), 0) {
  const int n = static_cast<int>(word_.size());
  for (int p = 0; p < n; ++p) {
    const int v = word_[p];
    if (v < 1 || v > n || pos_[v - 1] != 0)
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    pos_[v - 1] = p + 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const { return Permutation(pos_); }

Permutation Permutation::swap_values(int a, int b) const {
  std::vector<int> w = word_;
  std::swap(w[position_of(a) - 1], w[position_of(b) - 1]);
  return Permutation(std::move(w));
}

DescentSet subset_from_composition(const Composition& alpha) {
  if (alpha.length() == 0) throw std::invalid_argument("empty composition");
  std::vector<int> d;
  int sum = 0;
  for (std::size_t k = 0; k + 1 < alpha.length(); ++k) {
    sum += alpha[k];
    d.push_back(sum);
  }
  return DescentSet(alpha.size(), std::move(d));
}

Composition composition_from_subset(const DescentSet& d) {
  std::vector<int> parts;
  int prev = 0;
  for (int m : d.members()) {
    parts.push_back(m - prev);
    prev = m;
  }
  parts.push_back(d.degree() - prev);
  return Composition(std::move(parts));
}

Dominance dominance_compare(const Composition& beta, const Composition& alpha) {
  if (alpha.size() != beta.size())
    throw std::invalid_argument("dominance comparison of compositions of different sizes");
  const std::size_t len = std::max(alpha.length(), beta.length());
  bool le = true, ge = true;
  int sa = 0, sb = 0;
  for (std::size_t k = 0; k < len; ++k) {
    sa += k < alpha.length() ? alpha[k] : 0;
    sb += k < beta.length() ? beta[k] : 0;
    if (sb > sa) le = false;
    if (sb < sa) ge = false;
  }
  if (le && ge) return Dominance::equal;
  if (le) return Dominance::less;
  if (ge) return Dominance::greater;
  return Dominance::incomparable;
}

bool dominance_leq(const Composition& beta, const Composition& alpha) {
  const Dominance r = dominance_compare(beta, alpha);
  return r == Dominance::equal || r == Dominance::less;
}

DescentSet inverse_descent_set(const Permutation& w) {
  std::vector<int> d;
  for (int i = 1; i < w.size(); ++i)
    if (w.position_of(i + 1) < w.position_of(i)) d.push_back(i);
  return DescentSet(std::max(w.size(), 1), std::move(d));
}

DescentSet descent_set(const Permutation& w) {
  std::vector<int> d;
  for (int i = 1; i < w.size(); ++i)
    if (w.at(i) > w.at(i + 1)) d.push_back(i);
  return DescentSet(std::max(w.size(), 1), std::move(d));
}

long long inversions(const Permutation& w) {
  long long inv = 0;
  const auto& x = w.word();
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = a + 1; b < x.size(); ++b)
      if (x[a] > x[b]) ++inv;
  return inv;
}

std::vector<int> subword_restrict(const Permutation& w, std::span<const int> letters) {
  std::vector<bool> keep(w.size() + 1, false);
  for (int v : letters) {
    if (v < 1 || v > w.size()) throw std::invalid_argument("letter outside 1..n");
    keep[v] = true;
  }
  std::vector<int> out;
  for (int v : w.word())
    if (keep[v]) out.push_back(v);
  return out;
}

Permutation standardize(std::span<const int> word) {
  std::vector<int> sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("standardize: repeated letter");
  std::vector<int> out;
  out.reserve(word.size());
  for (int v : word)
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                                   sorted.begin()) + 1);
  return Permutation(std::move(out));
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> parts;
  if (lambda.length() == 0) return Partition();
  for (int c = 1; c <= lambda[0]; ++c) {
    int h = 0;
    for (int p : lambda.parts())
      if (p >= c) ++h;
    parts.push_back(h);
  }
  return Partition(std::move(parts));
}

bool is_partition(const Composition& alpha) { return alpha.is_partition(); }

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  // Depth-first with parts tried largest first yields decreasing lex order.
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  if (n > 0) rec(rec, n, n);
  return out;
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = 1; p <= remaining; ++p) {
      cur.push_back(p);
      self(self, remaining - p);
      cur.pop_back();
    }
  };
  if (n > 0) rec(rec, n);
  return out;
}

std::vector<Permutation> permutations_of(int n) {
  std::vector<Permutation> out;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::string to_string(const Composition& alpha) { return "(" + join(alpha.parts(), ",") + ")"; }
std::string to_string(const Partition& lambda) { return "(" + join(lambda.parts(), ",") + ")"; }
std::string to_string(const DescentSet& d) { return "{" + join(d.members(), ",") + "}"; }

std::string to_string(const Permutation& w) {
  return join(w.word(), w.size() <= 9 ? "" : ",");
}

std::ostream& operator<<(std::ostream& os, const Composition& alpha) { return os << to_string(alpha); }
std::ostream& operator<<(std::ostream& os, const Partition& lambda) { return os << to_string(lambda); }
std::ostream& operator<<(std::ostream& os, const DescentSet& d) { return os << to_string(d); }
std::ostream& operator<<(std::ostream& os, const Permutation& w) { return os << to_string(w); }

}  // namespace deq
