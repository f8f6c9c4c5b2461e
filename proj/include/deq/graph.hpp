#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "deq/family.hpp"
#include "deq/qsym.hpp"

namespace deq {

/// Disjoint-set forest whose representative is always the smallest index in
/// the set, so component order follows object order.
class UnionFind {
public:
  explicit UnionFind(std::size_t n);
  std::size_t find(std::size_t x);
  void unite(std::size_t a, std::size_t b);
  /// Sets sorted internally and by smallest member.
  std::vector<std::vector<std::size_t>> groups();

private:
  std::vector<std::size_t> parent_;
};

using VertexPair = std::pair<std::size_t, std::size_t>;

/// A signed, colored graph: vertices carry a sign vector of length n-1 and
/// each color 2 <= i <= n-1 carries a set of unordered vertex pairs. The
/// per-color matching property is not enforced here; check_deg_axioms
/// reports violations and graph_to_family rejects them.
class SignedColoredGraph {
public:
  /// Pairs are normalised to (min, max) and deduplicated. Throws
  /// std::invalid_argument on malformed signs, loops, unknown vertices or
  /// colors outside [2, n-1].
  SignedColoredGraph(int n, std::vector<std::string> labels, std::vector<std::vector<int>> signs,
                     std::map<int, std::vector<VertexPair>> edges);

  int degree() const { return n_; }
  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// sigma(v)_i for 1 <= i <= n-1.
  int sign(std::size_t v, int i) const { return signs_[v][i - 1]; }
  const std::vector<int>& signs(std::size_t v) const { return signs_[v]; }
  bool has_sign(int i) const { return i >= 1 && i <= n_ - 1; }

  /// Edges of color i (empty for colors outside [2, n-1]).
  const std::vector<VertexPair>& edges(int i) const;
  std::size_t edge_count() const;

  /// All i-neighbours of v.
  const std::vector<std::size_t>& neighbours(int i, std::size_t v) const;
  /// The i-neighbour of v when it has exactly one.
  std::optional<std::size_t> partner(int i, std::size_t v) const;
  bool has_edge(int i, std::size_t a, std::size_t b) const;

  /// (vertex, color) pairs where the vertex meets two or more edges of one color.
  std::vector<std::pair<std::size_t, int>> matching_violations() const;

  std::vector<int> colors() const;

  bool operator==(const SignedColoredGraph& o) const {
    return n_ == o.n_ && labels_ == o.labels_ && signs_ == o.signs_ && edges_ == o.edges_;
  }

private:
  int n_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> signs_;
  std::vector<std::vector<VertexPair>> edges_;                 // by color - 2
  std::vector<std::vector<std::vector<std::size_t>>> adjacency_;  // by color - 2, vertex
};

/// Signs from descents (+1 exactly on descents), edges {T, phi_i(T)} for
/// every non-fixed T.
SignedColoredGraph build_graph(const InvolutionFamily& f);

/// phi_i(T) is T's i-partner, or T when it has none. Throws
/// std::invalid_argument when some color is not a matching. Statistics are
/// zero and no reading words are attached.
InvolutionFamily graph_to_family(const SignedColoredGraph& g);

/// Descent set encoded by a sign vector.
DescentSet descents_from_signs(int n, const std::vector<int>& signs);

struct EquivalenceClass {
  std::vector<std::size_t> members;  ///< sorted
  std::vector<int> colors;
  QSymExpr qsym;                     ///< sum of q^stat Q_Des over the members
};

/// Connected components under the given colors, ordered by smallest member.
/// Throws std::invalid_argument for colors outside [2, n-1].
std::vector<EquivalenceClass> enumerate_classes(const InvolutionFamily& f, std::span<const int> colors);
std::vector<EquivalenceClass> enumerate_classes(const InvolutionFamily& f);

/// Components of the union of the given edge colors.
std::vector<std::vector<std::size_t>> graph_components(const SignedColoredGraph& g,
                                                       std::span<const int> colors);

/// Components of the union of the given involutions.
std::vector<std::vector<std::size_t>> family_components(const InvolutionFamily& f,
                                                        std::span<const int> colors);

/// Graphviz rendering: vertices labelled by object and signature, edges by color.
std::string to_dot(const SignedColoredGraph& g, std::string_view name = "deq");

}  // namespace deq
