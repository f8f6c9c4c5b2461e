#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "deq/combinat.hpp"
#include "deq/qsym.hpp"

namespace deq {

/// Standard Young tableau in French convention. Rows are stored bottom row
/// first; entries increase along rows and up columns.
class StandardYoungTableau {
public:
  StandardYoungTableau() = default;
  /// Validates shape, bijectivity with 1..n and row/column increase.
  explicit StandardYoungTableau(std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }

  /// 0-based (row, column) of entry v; row 0 is the bottom row.
  std::pair<int, int> cell_of(int v) const { return cells_[v - 1]; }
  int row_of(int v) const { return cells_[v - 1].first; }

  auto operator<=>(const StandardYoungTableau& o) const { return rows_ <=> o.rows_; }
  bool operator==(const StandardYoungTableau& o) const { return rows_ == o.rows_; }

private:
  std::vector<std::vector<int>> rows_;
  Partition shape_;
  std::vector<std::pair<int, int>> cells_;
};

/// All SYT of shape lambda, sorted by their rows. Throws std::length_error
/// when |lambda| exceeds `bound`.
std::vector<StandardYoungTableau> enumerate_syt(const Partition& lambda,
                                                int bound = kDefaultTableauBound);

/// All SYT of size n, grouped by shape (shapes in decreasing lex order).
std::vector<StandardYoungTableau> enumerate_syt(int n, int bound = kDefaultTableauBound);

/// Rows read top to bottom, each left to right.
Permutation reading_word(const StandardYoungTableau& t);

/// Entries i with i+1 in a strictly higher row.
DescentSet tableau_descents(const StandardYoungTableau& t);

/// Fills row k with the next lambda_k integers, bottom row first.
StandardYoungTableau superstandard(const Partition& lambda);

/// Fills columns left to right, each column bottom to top.
StandardYoungTableau substandard(const Partition& lambda);

/// Rebuilds a tableau of the given shape from a reading word. Throws
/// std::invalid_argument if the word does not fill a valid SYT.
StandardYoungTableau tableau_from_reading_word(const Partition& shape, const Permutation& w);

/// Rows bottom first, separated by '/'; entries concatenated for n <= 9.
std::string to_string(const StandardYoungTableau& t);
std::ostream& operator<<(std::ostream& os, const StandardYoungTableau& t);

/// A ribbon of length n, identified by its descent set: cell i+1 lies
/// immediately south of cell i exactly when i is a descent, otherwise
/// immediately east.
class Ribbon {
public:
  explicit Ribbon(DescentSet descents) : descents_(std::move(descents)) {}
  Ribbon(int n, std::initializer_list<int> descents) : descents_(n, descents) {}

  int size() const { return descents_.degree(); }
  const DescentSet& descents() const { return descents_; }

  /// Cell coordinates (row measured upward, column), listed in label order.
  std::vector<std::pair<int, int>> cells() const;

  auto operator<=>(const Ribbon&) const = default;

private:
  DescentSet descents_;
};

/// True when the cell set contains a 2x2 block.
bool has_square_block(const std::vector<std::pair<int, int>>& cells);

long long ribbon_maj(const Ribbon& nu);

/// Ribbons of length n with maj = maj_target and n-1 a descent exactly when
/// last_descent_required.
std::vector<Ribbon> enumerate_ribbons(int n, long long maj_target, bool last_descent_required);

/// Fundamental expansion of a ribbon Schur function: sum of Q over descent
/// sets of standard fillings of the ribbon's skew diagram.
QSymExpr ribbon_qsym(const Ribbon& nu, int bound = kDefaultTableauBound);

/// Schur expansion of the ribbon Schur function.
SchurExpansion ribbon_schur(const Ribbon& nu, int bound = kDefaultTableauBound);

}  // namespace deq
