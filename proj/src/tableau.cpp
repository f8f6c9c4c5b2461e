#include "deq/tableau.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace deq {

StandardYoungTableau::StandardYoungTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
  std::vector<int> lengths;
  for (const auto& r : rows_) lengths.push_back(static_cast<int>(r.size()));
  shape_ = Partition(lengths);  // throws on empty rows or non-decreasing lengths
  const int n = shape_.size();
  cells_.assign(n, {-1, -1});
  for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
    for (int c = 0; c < static_cast<int>(rows_[r].size()); ++c) {
      const int v = rows_[r][c];
      if (v < 1 || v > n || cells_[v - 1].first != -1)
        throw std::invalid_argument("tableau entries must be a bijection with 1..n");
      cells_[v - 1] = {r, c};
      if (c > 0 && rows_[r][c - 1] >= v)
        throw std::invalid_argument("tableau rows must increase");
      if (r > 0 && rows_[r - 1][c] >= v)
        throw std::invalid_argument("tableau columns must increase upward");
    }
  }
}

std::vector<StandardYoungTableau> enumerate_syt(const Partition& lambda, int bound) {
  const int n = lambda.size();
  if (n > bound)
    throw std::length_error("|lambda| = " + std::to_string(n) + " exceeds bound " +
                            std::to_string(bound));
  const int rows = static_cast<int>(lambda.length());
  std::vector<std::vector<int>> fill(rows);
  std::vector<StandardYoungTableau> out;
  auto place = [&](auto&& self, int v) -> void {
    if (v > n) {
      out.emplace_back(fill);
      return;
    }
    for (int r = 0; r < rows; ++r) {
      const auto len = static_cast<int>(fill[r].size());
      if (len >= lambda[r]) continue;
      if (r > 0 && static_cast<int>(fill[r - 1].size()) <= len) continue;
      fill[r].push_back(v);
      self(self, v + 1);
      fill[r].pop_back();
    }
  };
  if (n > 0) place(place, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StandardYoungTableau> enumerate_syt(int n, int bound) {
  std::vector<StandardYoungTableau> out;
  for (const auto& lambda : partitions_of(n)) {
    auto part = enumerate_syt(lambda, bound);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Permutation reading_word(const StandardYoungTableau& t) {
  std::vector<int> w;
  for (auto r = t.rows().rbegin(); r != t.rows().rend(); ++r) w.insert(w.end(), r->begin(), r->end());
  return Permutation(std::move(w));
}

DescentSet tableau_descents(const StandardYoungTableau& t) {
  std::vector<int> d;
  for (int i = 1; i < t.size(); ++i)
    if (t.row_of(i + 1) > t.row_of(i)) d.push_back(i);
  return DescentSet(std::max(t.size(), 1), std::move(d));
}

StandardYoungTableau superstandard(const Partition& lambda) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int len : lambda.parts()) {
    rows.emplace_back();
    for (int c = 0; c < len; ++c) rows.back().push_back(next++);
  }
  return StandardYoungTableau(std::move(rows));
}

StandardYoungTableau substandard(const Partition& lambda) {
  std::vector<std::vector<int>> rows(lambda.length());
  for (std::size_t r = 0; r < lambda.length(); ++r) rows[r].resize(lambda[r]);
  int next = 1;
  const int width = lambda.length() ? lambda[0] : 0;
  for (int c = 0; c < width; ++c)
    for (std::size_t r = 0; r < lambda.length() && lambda[r] > c; ++r) rows[r][c] = next++;
  return StandardYoungTableau(std::move(rows));
}

StandardYoungTableau tableau_from_reading_word(const Partition& shape, const Permutation& w) {
  if (w.size() != shape.size()) throw std::invalid_argument("reading word size does not match shape");
  std::vector<std::vector<int>> rows(shape.length());
  int p = 1;
  for (std::size_t k = shape.length(); k-- > 0;)
    for (int c = 0; c < shape[k]; ++c) rows[k].push_back(w.at(p++));
  return StandardYoungTableau(std::move(rows));
}

std::string to_string(const StandardYoungTableau& t) {
  std::ostringstream out;
  const bool compact = t.size() <= 9;
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (r) out << '/';
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
      if (c && !compact) out << ',';
      out << t.rows()[r][c];
    }
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const StandardYoungTableau& t) { return os << to_string(t); }

std::vector<std::pair<int, int>> Ribbon::cells() const {
  std::vector<std::pair<int, int>> out;
  int row = static_cast<int>(descents_.count());
  int col = 0;
  out.emplace_back(row, col);
  for (int i = 1; i < size(); ++i) {
    if (descents_.contains(i))
      --row;
    else
      ++col;
    out.emplace_back(row, col);
  }
  return out;
}

bool has_square_block(const std::vector<std::pair<int, int>>& cells) {
  const std::set<std::pair<int, int>> s(cells.begin(), cells.end());
  for (auto [r, c] : s)
    if (s.count({r + 1, c}) && s.count({r, c + 1}) && s.count({r + 1, c + 1})) return true;
  return false;
}

long long ribbon_maj(const Ribbon& nu) {
  long long m = 0;
  for (int i : nu.descents().members()) m += i;
  return m;
}

std::vector<Ribbon> enumerate_ribbons(int n, long long maj_target, bool last_descent_required) {
  if (n < 1) throw std::invalid_argument("ribbon length must be positive");
  std::vector<Ribbon> out;
  if (n - 1 >= 63) throw std::length_error("ribbon length too large");
  const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::vector<int> d;
    long long sum = 0;
    for (int i = 1; i < n; ++i)
      if (mask >> (i - 1) & 1) {
        d.push_back(i);
        sum += i;
      }
    if (sum != maj_target) continue;
    const bool has_last = n > 1 && (mask >> (n - 2) & 1);
    if (has_last != last_descent_required) continue;
    out.emplace_back(DescentSet(n, std::move(d)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

QSymExpr ribbon_qsym(const Ribbon& nu, int bound) {
  const int n = nu.size();
  if (n > bound)
    throw std::length_error("ribbon length " + std::to_string(n) + " exceeds bound " +
                            std::to_string(bound));
  const auto cells = nu.cells();
  // Each cell must wait for its left neighbour and the neighbour below it.
  std::vector<std::vector<int>> preds(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto [ra, ca] = cells[a];
      const auto [rb, cb] = cells[b];
      if ((rb == ra && cb == ca - 1) || (rb == ra - 1 && cb == ca)) preds[a].push_back(b);
    }

  QSymExpr result(n);
  std::vector<int> value_row(n + 1);
  std::vector<bool> filled(n, false);
  auto fill = [&](auto&& self, int v) -> void {
    if (v > n) {
      std::vector<int> d;
      for (int i = 1; i < n; ++i)
        if (value_row[i + 1] > value_row[i]) d.push_back(i);
      result.add(DescentSet(n, std::move(d)));
      return;
    }
    for (int a = 0; a < n; ++a) {
      if (filled[a]) continue;
      if (!std::all_of(preds[a].begin(), preds[a].end(), [&](int b) { return filled[b]; })) continue;
      filled[a] = true;
      value_row[v] = cells[a].first;
      self(self, v + 1);
      filled[a] = false;
    }
  };
  fill(fill, 1);
  return result;
}

SchurExpansion ribbon_schur(const Ribbon& nu, int bound) {
  auto g = greedy_schur_expand(ribbon_qsym(nu, bound));
  if (!g.succeeded()) throw std::logic_error("ribbon Schur function failed to expand");
  return g.expansion;
}

}  // namespace deq
