#include "deq/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace deq {

UnionFind::UnionFind(std::size_t n) : parent_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

void UnionFind::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (b < a) std::swap(a, b);
  parent_[b] = a;
}

std::vector<std::vector<std::size_t>> UnionFind::groups() {
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t x = 0; x < parent_.size(); ++x) by_root[find(x)].push_back(x);
  std::vector<std::vector<std::size_t>> out;
  out.reserve(by_root.size());
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  return out;
}

SignedColoredGraph::SignedColoredGraph(int n, std::vector<std::string> labels,
                                       std::vector<std::vector<int>> signs,
                                       std::map<int, std::vector<VertexPair>> edges)
    : n_(n), labels_(std::move(labels)), signs_(std::move(signs)) {
  if (n < 1) throw std::invalid_argument("graph degree must be positive");
  const std::size_t count = labels_.size();
  if (signs_.size() != count) throw std::invalid_argument("one sign vector per vertex required");
  for (const auto& s : signs_) {
    if (static_cast<int>(s.size()) != n - 1)
      throw std::invalid_argument("sign vectors must have length n-1");
    for (int x : s)
      if (x != 1 && x != -1) throw std::invalid_argument("signs must be +1 or -1");
  }
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != count) throw std::invalid_argument("vertex labels must be unique");

  const std::size_t colors = static_cast<std::size_t>(std::max(n - 2, 0));
  edges_.assign(colors, {});
  adjacency_.assign(colors, std::vector<std::vector<std::size_t>>(count));
  for (auto& [i, pairs] : edges) {
    if (i < 2 || i > n - 1)
      throw std::invalid_argument("edge color " + std::to_string(i) + " outside [2, " +
                                  std::to_string(n - 1) + "]");
    auto& list = edges_[i - 2];
    for (auto [a, b] : pairs) {
      if (a >= count || b >= count) throw std::invalid_argument("edge endpoint out of range");
      if (a == b) throw std::invalid_argument("edges must join distinct vertices");
      list.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    for (auto [a, b] : list) {
      adjacency_[i - 2][a].push_back(b);
      adjacency_[i - 2][b].push_back(a);
    }
  }
}

const std::vector<VertexPair>& SignedColoredGraph::edges(int i) const {
  static const std::vector<VertexPair> none;
  if (i < 2 || i > n_ - 1) return none;
  return edges_[i - 2];
}

std::size_t SignedColoredGraph::edge_count() const {
  std::size_t c = 0;
  for (const auto& e : edges_) c += e.size();
  return c;
}

const std::vector<std::size_t>& SignedColoredGraph::neighbours(int i, std::size_t v) const {
  static const std::vector<std::size_t> none;
  if (i < 2 || i > n_ - 1) return none;
  return adjacency_[i - 2][v];
}

std::optional<std::size_t> SignedColoredGraph::partner(int i, std::size_t v) const {
  const auto& nb = neighbours(i, v);
  if (nb.size() != 1) return std::nullopt;
  return nb.front();
}

bool SignedColoredGraph::has_edge(int i, std::size_t a, std::size_t b) const {
  const auto& nb = neighbours(i, a);
  return std::find(nb.begin(), nb.end(), b) != nb.end();
}

std::vector<std::pair<std::size_t, int>> SignedColoredGraph::matching_violations() const {
  std::vector<std::pair<std::size_t, int>> out;
  for (int i = 2; i <= n_ - 1; ++i)
    for (std::size_t v = 0; v < size(); ++v)
      if (adjacency_[i - 2][v].size() > 1) out.emplace_back(v, i);
  return out;
}

std::vector<int> SignedColoredGraph::colors() const {
  std::vector<int> c;
  for (int i = 2; i <= n_ - 1; ++i) c.push_back(i);
  return c;
}

DescentSet descents_from_signs(int n, const std::vector<int>& signs) {
  std::vector<int> d;
  for (int i = 1; i <= n - 1; ++i)
    if (signs[i - 1] == 1) d.push_back(i);
  return DescentSet(n, std::move(d));
}

SignedColoredGraph build_graph(const InvolutionFamily& f) {
  const int n = f.degree();
  std::vector<std::string> labels;
  std::vector<std::vector<int>> signs;
  for (std::size_t t = 0; t < f.size(); ++t) {
    labels.push_back(f.label(t));
    std::vector<int> s(n - 1, -1);
    for (int m : f.des(t).members()) s[m - 1] = 1;
    signs.push_back(std::move(s));
  }
  std::map<int, std::vector<VertexPair>> edges;
  for (int i : f.colors()) {
    auto& list = edges[i];
    for (std::size_t t = 0; t < f.size(); ++t) {
      const std::size_t s = f.apply(i, t);
      if (t < s) list.emplace_back(t, s);
    }
  }
  return SignedColoredGraph(n, std::move(labels), std::move(signs), std::move(edges));
}

InvolutionFamily graph_to_family(const SignedColoredGraph& g) {
  const auto bad = g.matching_violations();
  if (!bad.empty())
    throw std::invalid_argument("color " + std::to_string(bad.front().second) +
                                " is not a matching at '" + g.label(bad.front().first) + "'");
  std::vector<InvolutionFamily::Object> objects;
  for (std::size_t v = 0; v < g.size(); ++v)
    objects.push_back({g.label(v), descents_from_signs(g.degree(), g.signs(v)), {}, std::nullopt});
  std::map<int, std::vector<std::size_t>> partners;
  for (int i : g.colors()) {
    auto& table = partners[i];
    for (std::size_t v = 0; v < g.size(); ++v) table.push_back(g.partner(i, v).value_or(v));
  }
  return InvolutionFamily(g.degree(), std::move(objects), std::move(partners), "graph");
}

namespace {

void check_colors(int n, std::span<const int> colors) {
  for (int i : colors)
    if (i < 2 || i > n - 1)
      throw std::invalid_argument("color " + std::to_string(i) + " outside [2, " +
                                  std::to_string(n - 1) + "]");
}

}  // namespace

std::vector<std::vector<std::size_t>> family_components(const InvolutionFamily& f,
                                                        std::span<const int> colors) {
  check_colors(f.degree(), colors);
  UnionFind uf(f.size());
  for (int i : colors)
    for (std::size_t t = 0; t < f.size(); ++t) uf.unite(t, f.apply(i, t));
  return uf.groups();
}

std::vector<std::vector<std::size_t>> graph_components(const SignedColoredGraph& g,
                                                       std::span<const int> colors) {
  check_colors(g.degree(), colors);
  UnionFind uf(g.size());
  for (int i : colors)
    for (auto [a, b] : g.edges(i)) uf.unite(a, b);
  return uf.groups();
}

std::vector<EquivalenceClass> enumerate_classes(const InvolutionFamily& f, std::span<const int> colors) {
  std::vector<EquivalenceClass> out;
  for (auto& members : family_components(f, colors)) {
    QSymExpr q = qsym_of(f, members);
    out.push_back({std::move(members), std::vector<int>(colors.begin(), colors.end()), std::move(q)});
  }
  return out;
}

std::vector<EquivalenceClass> enumerate_classes(const InvolutionFamily& f) {
  const auto colors = f.colors();
  return enumerate_classes(f, colors);
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const SignedColoredGraph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph \"" << dot_escape(std::string(name)) << "\" {\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    std::string sig;
    for (int s : g.signs(v)) sig += s > 0 ? '+' : '-';
    out << "  v" << v << " [label=\"" << dot_escape(g.label(v)) << "\\n" << sig << "\"];\n";
  }
  for (int i : g.colors())
    for (auto [a, b] : g.edges(i)) out << "  v" << a << " -- v" << b << " [label=\"" << i << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace deq
