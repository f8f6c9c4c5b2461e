#include "deq/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "deq/involutions.hpp"

namespace deq {

namespace {

using EdgeVisitor = std::function<void(std::size_t, std::size_t)>;
using EdgeSource = std::function<void(int, const EdgeVisitor&)>;

class Collector {
public:
  Collector(VerificationReport& report, std::size_t cap) : report_(report), cap_(cap) {}

  void add(std::optional<Witness> w) {
    if (!w) return;
    auto& count = report_.failure_counts[w->rule];
    if (count < cap_) report_.failures.push_back(std::move(*w));
    ++count;
  }

private:
  VerificationReport& report_;
  std::size_t cap_;
};

Witness make_witness(std::string rule, std::vector<std::size_t> objects, std::vector<int> indices,
                     std::string detail) {
  return Witness{std::move(rule), std::move(objects), std::move(indices), std::move(detail)};
}

bool flips(const DescentSet& a, const DescentSet& b, int j) { return a.contains(j) != b.contains(j); }

EdgeSource family_edges(const InvolutionFamily& f) {
  return [&f](int c, const EdgeVisitor& visit) {
    for (std::size_t t = 0; t < f.size(); ++t) {
      const std::size_t s = f.apply(c, t);
      if (t < s) visit(t, s);
    }
  };
}

EdgeSource graph_edges(const SignedColoredGraph& g) {
  return [&g](int c, const EdgeVisitor& visit) {
    for (auto [a, b] : g.edges(c)) visit(a, b);
  };
}

// ------------------------------------------------------------ contraction
//
// Colors h..i-1 are contracted to super-nodes. Inside each component of
// colors h..i, two vertices are joinable crossing at most one i-edge exactly
// when their super-nodes coincide or are joined by an i-edge.

struct Contraction {
  UnionFind small;
  UnionFind big;
  std::set<VertexPair> quotient;

  Contraction(std::size_t count, int h, int i, const EdgeSource& edges) : small(count), big(count) {
    for (int c = h; c <= i - 1; ++c)
      edges(c, [&](std::size_t a, std::size_t b) {
        small.unite(a, b);
        big.unite(a, b);
      });
    edges(i, [&](std::size_t a, std::size_t b) {
      big.unite(a, b);
      const std::size_t x = small.find(a), y = small.find(b);
      if (x != y) quotient.emplace(std::min(x, y), std::max(x, y));
    });
  }

  bool violates(std::size_t t, std::size_t s) {
    if (big.find(t) != big.find(s)) return false;
    const std::size_t x = small.find(t), y = small.find(s);
    return x != y && !quotient.count({std::min(x, y), std::max(x, y)});
  }

  std::vector<VertexPair> failures(std::size_t count) {
    std::map<std::size_t, std::vector<std::size_t>> supers;
    for (std::size_t v = 0; v < count; ++v)
      if (small.find(v) == v) supers[big.find(v)].push_back(v);
    std::vector<VertexPair> out;
    for (const auto& [root, nodes] : supers)
      for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t b = a + 1; b < nodes.size(); ++b)
          if (!quotient.count({nodes[a], nodes[b]})) out.emplace_back(nodes[a], nodes[b]);
    return out;
  }
};

std::vector<std::pair<int, int>> minimality_pairs(int n, MinimalityScope scope) {
  std::vector<std::pair<int, int>> out;
  for (int i = 2; i <= n - 1; ++i) {
    if (scope == MinimalityScope::full) {
      for (int h = 2; h <= i; ++h) out.emplace_back(h, i);
    } else {
      out.emplace_back(2, i);
      if (i - 2 > 2) out.emplace_back(i - 2, i);
    }
  }
  return out;
}

// ------------------------------------------------------------ local Schur positivity

struct Window {
  std::vector<int> colors;
  int lo;
  int hi;
};

std::vector<Window> positivity_windows(int n, WindowMode mode) {
  std::vector<Window> out;
  const int pad = mode == WindowMode::padded ? 1 : 0;
  for (int i = 3; i <= n - 1; ++i) out.push_back({{i - 1, i}, i - 1 - pad, i + pad});
  for (int i = 3; i <= n - 2; ++i) out.push_back({{i - 1, i, i + 1}, i - 1 - pad, i + 1 + pad});
  return out;
}

std::optional<Window> window_for(const std::vector<int>& colors, WindowMode mode) {
  if (colors.size() < 2) return std::nullopt;
  const int pad = mode == WindowMode::padded ? 1 : 0;
  return Window{colors, colors.front() - pad, colors.back() + pad};
}

/// Descents of the standardized restriction to the consecutive letters lo..hi,
/// read off the ambient descent set.
DescentSet window_descents(const DescentSet& d, int lo, int hi) {
  std::vector<int> out;
  for (int k = 1; k <= hi - lo; ++k)
    if (d.contains(k + lo - 1)) out.push_back(k);
  return DescentSet(hi - lo + 1, std::move(out));
}

std::optional<Witness> positivity_witness(const std::vector<std::size_t>& members, const Window& win,
                                          const std::function<DescentSet(std::size_t)>& local_des,
                                          const std::function<std::string(std::size_t)>& label) {
  QSymExpr q(win.hi - win.lo + 1);
  for (std::size_t t : members) q.add(local_des(t));
  const PositivityVerdict v = is_schur_positive(q);
  if (v.positive()) return std::nullopt;
  std::ostringstream detail;
  detail << "class of " << label(members.front()) << " under colors {";
  for (std::size_t k = 0; k < win.colors.size(); ++k) detail << (k ? "," : "") << win.colors[k];
  detail << "} on letters " << win.lo << ".." << win.hi << " is " << to_string(v.kind) << ": "
         << to_string(q);
  return make_witness("d", {members.front()}, win.colors, detail.str());
}

std::vector<std::size_t> component_of(std::size_t v, std::vector<std::vector<std::size_t>> comps) {
  for (auto& c : comps)
    if (std::binary_search(c.begin(), c.end(), v)) return c;
  return {v};
}

// ------------------------------------------------------------ family rules

std::optional<Witness> rule_fixed_points(const InvolutionFamily& f, std::size_t t, int i) {
  const auto& d = f.des(t);
  const bool expected = d.contains(i - 1) == d.contains(i);
  const bool fixed = f.is_fixed(i, t);
  if (fixed == expected) return std::nullopt;
  return make_witness("i", {t}, {i},
                      "phi_" + std::to_string(i) + (fixed ? " fixes " : " moves ") + f.label(t) +
                          " with Des=" + to_string(d));
}

std::optional<Witness> rule_descent_set(const InvolutionFamily& f, std::size_t t, int i) {
  const std::size_t s = f.apply(i, t);
  if (s == t) return std::nullopt;
  const auto& a = f.des(t);
  const auto& b = f.des(s);
  for (int j = 1; j <= f.degree() - 1; ++j) {
    const bool must_flip = j == i - 1 || j == i;
    const bool must_keep = j < i - 2 || j > i + 1;
    if ((must_flip && !flips(a, b, j)) || (must_keep && flips(a, b, j)))
      return make_witness("ii", {t}, {i},
                          "coordinate " + std::to_string(j) + (must_flip ? " does not flip" : " flips") +
                              ": Des(" + f.label(t) + ")=" + to_string(a) + ", Des(" + f.label(s) +
                              ")=" + to_string(b));
  }
  return std::nullopt;
}

std::optional<Witness> rule_equality(const InvolutionFamily& f, std::size_t t, int i) {
  const std::size_t s = f.apply(i, t);
  if (s == t) return std::nullopt;
  const int n = f.degree();
  const auto& a = f.des(t);
  const auto& b = f.des(s);
  for (int side : {-1, +1}) {
    const int coord = side < 0 ? i - 2 : i + 1;
    const int other = side < 0 ? i - 1 : i + 1;
    const bool lhs = coord >= 1 && coord <= n - 1 && flips(a, b, coord);
    const bool rhs = s == f.apply(other, t);
    if (lhs != rhs) {
      std::ostringstream detail;
      detail << "Des(" << f.label(t) << ")=" << to_string(a) << ", Des(phi_" << i << ")=Des("
             << f.label(s) << ")=" << to_string(b) << "; coordinate " << coord
             << (lhs ? " flips" : " does not flip") << " yet phi_" << i << "(T)=" << f.label(s)
             << (rhs ? " == " : " != ") << "phi_" << other << "(T)=" << f.label(f.apply(other, t));
      return make_witness("iii", {t}, {i}, detail.str());
    }
  }
  return std::nullopt;
}

std::optional<Witness> rule_commute(const InvolutionFamily& f, std::size_t t, int i, int j,
                                    const char* rule) {
  const std::size_t ij = f.apply(j, f.apply(i, t));
  const std::size_t ji = f.apply(i, f.apply(j, t));
  if (ij == ji) return std::nullopt;
  return make_witness(rule, {t}, {i, j},
                      "phi_" + std::to_string(j) + " phi_" + std::to_string(i) + "(" + f.label(t) +
                          ")=" + f.label(ij) + " but phi_" + std::to_string(i) + " phi_" +
                          std::to_string(j) + "=" + f.label(ji));
}

std::optional<Witness> minimality_witness(const std::string& rule, std::size_t t, std::size_t s, int h,
                                          int i, const std::function<std::string(std::size_t)>& label,
                                          bool h_index) {
  std::ostringstream detail;
  detail << label(t) << " and " << label(s) << " are connected by colors " << h << ".." << i
         << " but every connecting path crosses more than one " << i << "-edge";
  std::vector<int> idx = h_index ? std::vector<int>{h, i} : std::vector<int>{i};
  return make_witness(rule, {t, s}, std::move(idx), detail.str());
}

std::optional<Witness> rule_restriction(const InvolutionFamily& f, std::size_t t, int i) {
  const Permutation& w = f.reading_word(t);
  const Permutation& u = f.reading_word(f.apply(i, t));
  const std::vector<int> inside{i - 1, i, i + 1};
  std::vector<int> outside;
  for (int v = 1; v <= f.degree(); ++v)
    if (v < i - 1 || v > i + 1) outside.push_back(v);
  const auto u_in = subword_restrict(u, inside);
  const bool inside_ok = u_in == subword_restrict(haiman_d(i, w), inside) ||
                         u_in == subword_restrict(twisted_d(i, w), inside);
  const bool outside_ok = subword_restrict(u, outside) == subword_restrict(w, outside);
  if (inside_ok && outside_ok) return std::nullopt;
  return make_witness("a", {t}, {i},
                      "w(phi_" + std::to_string(i) + "(T))=" + to_string(u) + " from w(T)=" + to_string(w) +
                          (inside_ok ? " moves letters outside {i-1,i,i+1}"
                                     : " is neither the d_i nor the twisted d_i move"));
}

std::optional<Witness> rule_d_equality(const InvolutionFamily& f, std::size_t t, int i) {
  const std::size_t x = f.apply(i - 1, t);
  const std::size_t y = f.apply(i + 1, t);
  if (!f.is_fixed(i + 1, x) || !f.is_fixed(i - 1, y)) return std::nullopt;
  const std::size_t z = f.apply(i, t);
  if ((x == t && y == t) || z == x || z == y) return std::nullopt;
  return make_witness("b", {t}, {i},
                      "at " + f.label(t) + ": phi_" + std::to_string(i) + "=" + f.label(z) + ", phi_" +
                          std::to_string(i - 1) + "=" + f.label(x) + ", phi_" + std::to_string(i + 1) +
                          "=" + f.label(y));
}

std::optional<Witness> rule_stat(const InvolutionFamily& f, std::size_t t, int i) {
  const std::size_t s = f.apply(i, t);
  if (f.stat(s) == f.stat(t)) return std::nullopt;
  return make_witness("stat", {t}, {i}, "statistic changes along the " + std::to_string(i) + "-edge " +
                                            f.label(t) + " -- " + f.label(s));
}

DescentSet reading_window_descents(const InvolutionFamily& f, std::size_t t, int lo, int hi,
                                   DescentConvention conv) {
  std::vector<int> letters(hi - lo + 1);
  std::iota(letters.begin(), letters.end(), lo);
  const Permutation st = standardize(subword_restrict(f.reading_word(t), letters));
  return conv == DescentConvention::inverse ? inverse_descent_set(st) : descent_set(st);
}

std::optional<Witness> family_positivity(const InvolutionFamily& f, const std::vector<std::size_t>& members,
                                         const Window& win, const CheckOptions& opts) {
  return positivity_witness(
      members, win,
      [&](std::size_t t) { return reading_window_descents(f, t, win.lo, win.hi, opts.reading_convention); },
      [&](std::size_t t) { return f.label(t); });
}

// ------------------------------------------------------------ graph rules

std::string signature(const SignedColoredGraph& g, std::size_t v) {
  std::string s;
  for (int x : g.signs(v)) s += x > 0 ? '+' : '-';
  return s;
}

std::optional<Witness> rule_ax1(const SignedColoredGraph& g, std::size_t t, int i) {
  const auto& nb = g.neighbours(i, t);
  const bool opposite = g.sign(t, i - 1) == -g.sign(t, i);
  if (nb.size() > 1)
    return make_witness("ax1", {t}, {i},
                        g.label(t) + " has " + std::to_string(nb.size()) + " edges of color " +
                            std::to_string(i));
  if (opposite != !nb.empty())
    return make_witness("ax1", {t}, {i},
                        g.label(t) + " with signature " + signature(g, t) +
                            (nb.empty() ? " lacks an " : " has an unexpected ") + std::to_string(i) +
                            "-edge");
  return std::nullopt;
}

std::optional<Witness> rule_ax2(const SignedColoredGraph& g, std::size_t t, std::size_t s, int i) {
  for (int j = 1; j <= g.degree() - 1; ++j) {
    const bool must_flip = j == i - 1 || j == i;
    const bool must_keep = j < i - 2 || j > i + 1;
    const bool flipped = g.sign(t, j) == -g.sign(s, j);
    if ((must_flip && !flipped) || (must_keep && flipped))
      return make_witness("ax2", {t, s}, {i},
                          "sign " + std::to_string(j) + (must_flip ? " not flipped" : " flipped") +
                              " along " + g.label(t) + " -- " + g.label(s) + " (" + signature(g, t) +
                              " vs " + signature(g, s) + ")");
  }
  return std::nullopt;
}

std::optional<Witness> rule_ax3(const SignedColoredGraph& g, std::size_t t, std::size_t s, int i) {
  for (auto [a, b] : {std::pair{t, s}, std::pair{s, t}}) {
    if (g.has_sign(i - 2) && g.sign(a, i - 2) == -g.sign(b, i - 2) && g.sign(a, i - 2) != -g.sign(a, i - 1))
      return make_witness("ax3", {a, b}, {i},
                          "sign " + std::to_string(i - 2) + " flips along " + g.label(a) + " -- " +
                              g.label(b) + " but sigma_" + std::to_string(i - 2) + " == sigma_" +
                              std::to_string(i - 1) + " at " + g.label(a));
    if (g.has_sign(i + 1) && g.sign(a, i + 1) == -g.sign(b, i + 1) && g.sign(a, i + 1) != -g.sign(a, i))
      return make_witness("ax3", {a, b}, {i},
                          "sign " + std::to_string(i + 1) + " flips along " + g.label(a) + " -- " +
                              g.label(b) + " but sigma_" + std::to_string(i + 1) + " == sigma_" +
                              std::to_string(i) + " at " + g.label(a));
  }
  return std::nullopt;
}

struct CatalogEdge {
  int a, b, rel;  // rel = color - i
  auto operator<=>(const CatalogEdge&) const = default;
};

struct CatalogEntry {
  const char* name;
  int vertices;
  std::vector<CatalogEdge> edges;
};

const std::vector<CatalogEntry>& two_color_catalog() {
  static const std::vector<CatalogEntry> c{
      {"chain", 3, {{0, 1, -1}, {1, 2, 0}}},
      {"double edge", 2, {{0, 1, -1}, {0, 1, 0}}},
  };
  return c;
}

const std::vector<CatalogEntry>& three_color_catalog() {
  static const std::vector<CatalogEntry> c{
      {"chain", 4, {{0, 1, -2}, {1, 2, -1}, {2, 3, 0}}},
      {"double-ended chain", 5, {{0, 1, -2}, {0, 1, -1}, {1, 2, 0}, {2, 3, -2}, {3, 4, -1}, {3, 4, 0}}},
      {"hexagon", 6, {{0, 1, -1}, {1, 2, -2}, {1, 3, 0}, {2, 4, 0}, {3, 4, -2}, {4, 5, -1}}},
  };
  return c;
}

std::vector<CatalogEdge> normalised(std::vector<CatalogEdge> edges) {
  for (auto& e : edges)
    if (e.a > e.b) std::swap(e.a, e.b);
  std::sort(edges.begin(), edges.end());
  return edges;
}

bool isomorphic(int vertices, const std::vector<CatalogEdge>& edges, const CatalogEntry& entry) {
  if (vertices != entry.vertices || edges.size() != entry.edges.size()) return false;
  const auto target = normalised(entry.edges);
  std::vector<int> perm(vertices);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<CatalogEdge> mapped;
    mapped.reserve(edges.size());
    for (const auto& e : edges) mapped.push_back({perm[e.a], perm[e.b], e.rel});
    if (normalised(std::move(mapped)) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Empty when the component is trivial or matches the catalog, otherwise a
/// description of the offending component.
std::optional<std::string> catalog_mismatch(const SignedColoredGraph& g,
                                            const std::vector<std::size_t>& members, int i, int k) {
  if (members.size() < 2) return std::nullopt;
  const auto& catalog = k == 2 ? two_color_catalog() : three_color_catalog();
  std::ostringstream desc;
  desc << members.size() << "-vertex component of colors " << (i - k + 1) << ".." << i << " {";
  for (std::size_t v = 0; v < members.size(); ++v) desc << (v ? " " : "") << g.label(members[v]);
  desc << "} not in the allowed catalog";
  if (members.size() > 6) return desc.str();
  std::vector<CatalogEdge> edges;
  auto local = [&](std::size_t v) {
    return static_cast<int>(std::lower_bound(members.begin(), members.end(), v) - members.begin());
  };
  for (int c = i - k + 1; c <= i; ++c)
    for (std::size_t v : members)
      for (std::size_t u : g.neighbours(c, v))
        if (v < u) edges.push_back({local(v), local(u), c - i});
  for (const auto& entry : catalog)
    if (isomorphic(static_cast<int>(members.size()), edges, entry)) return std::nullopt;
  return desc.str();
}

std::vector<int> color_run(int lo, int hi) {
  std::vector<int> c;
  for (int x = lo; x <= hi; ++x) c.push_back(x);
  return c;
}

std::optional<Witness> rule_ax5(const SignedColoredGraph& g, std::size_t t, std::size_t s, std::size_t r,
                                int i, int j) {
  if (!g.has_edge(i, t, s) || !g.has_edge(j, s, r)) return std::nullopt;
  for (std::size_t u : g.neighbours(j, t))
    if (g.has_edge(i, u, r)) return std::nullopt;
  return make_witness("ax5", {t, s, r}, {i, j},
                      g.label(t) + " -" + std::to_string(i) + "- " + g.label(s) + " -" + std::to_string(j) +
                          "- " + g.label(r) + " has no completing square");
}

std::optional<Witness> rule_dgraph(const SignedColoredGraph& g, std::size_t w, int i,
                                   const std::vector<std::vector<std::size_t>>& comps) {
  const auto& left = g.neighbours(i - 1, w);
  const auto& right = g.neighbours(i + 1, w);
  if (left.empty() || right.empty()) return std::nullopt;
  const auto comp = component_of(w, comps);
  std::size_t edge_count = 0;
  for (int c : {i - 1, i + 1})
    for (std::size_t v : comp)
      for (std::size_t u : g.neighbours(c, v))
        if (v < u) ++edge_count;
  if (edge_count != 2) return std::nullopt;
  const std::size_t x = left.front(), y = right.front();
  if (g.has_edge(i, w, x) || g.has_edge(i, w, y)) return std::nullopt;
  return make_witness("dgraph", {w}, {i},
                      "two-edge component " + g.label(x) + " -- " + g.label(w) + " -- " + g.label(y) +
                          " but the " + std::to_string(i) + "-edge at " + g.label(w) +
                          " matches neither neighbour");
}

std::optional<Witness> graph_positivity(const SignedColoredGraph& g, const std::vector<std::size_t>& members,
                                        const Window& win) {
  return positivity_witness(
      members, win,
      [&](std::size_t t) {
        return window_descents(descents_from_signs(g.degree(), g.signs(t)), win.lo, win.hi);
      },
      [&](std::size_t t) { return g.label(t); });
}

void check_graph_pointwise(const SignedColoredGraph& g, Collector& out, bool with_ax4_ax6) {
  const int n = g.degree();
  for (int i : g.colors())
    for (std::size_t v = 0; v < g.size(); ++v) out.add(rule_ax1(g, v, i));
  for (int i : g.colors())
    for (auto [a, b] : g.edges(i)) out.add(rule_ax2(g, a, b, i));
  for (int i : g.colors())
    for (auto [a, b] : g.edges(i)) out.add(rule_ax3(g, a, b, i));
  if (with_ax4_ax6) {
    for (int k : {2, 3})
      for (int i = k + 1; i <= n - 1; ++i) {
        const auto colors = color_run(i - k + 1, i);
        for (const auto& comp : graph_components(g, colors))
          if (auto m = catalog_mismatch(g, comp, i, k))
            out.add(make_witness("ax4", {comp.front()}, {i, k}, *m));
      }
  }
  for (int i : g.colors())
    for (int j : g.colors()) {
      if (std::abs(i - j) < 3) continue;
      for (auto [a, b] : g.edges(i))
        for (auto [t, s] : {std::pair{a, b}, std::pair{b, a}})
          for (std::size_t r : g.neighbours(j, s)) out.add(rule_ax5(g, t, s, r, i, j));
    }
  if (with_ax4_ax6) {
    for (int i = 3; i <= n - 1; ++i) {
      Contraction c(g.size(), 2, i, graph_edges(g));
      for (auto [t, s] : c.failures(g.size()))
        out.add(minimality_witness("ax6", t, s, 2, i, [&](std::size_t v) { return g.label(v); }, false));
    }
  }
}

}  // namespace

// ------------------------------------------------------------ public checks

VerificationReport check_dual_equivalence(const InvolutionFamily& f, const CheckOptions& opts) {
  VerificationReport report{"dual", {{"family", f.name()}, {"minimality", to_string(opts.minimality)}}, {}, {}};
  Collector out(report, opts.max_witnesses);
  const auto colors = f.colors();
  for (int i : colors)
    for (std::size_t t = 0; t < f.size(); ++t) out.add(rule_fixed_points(f, t, i));
  for (int i : colors)
    for (std::size_t t = 0; t < f.size(); ++t) out.add(rule_descent_set(f, t, i));
  for (int i : colors)
    for (std::size_t t = 0; t < f.size(); ++t) out.add(rule_equality(f, t, i));
  for (int i : colors)
    for (int j : colors)
      if (j - i >= 3)
        for (std::size_t t = 0; t < f.size(); ++t) out.add(rule_commute(f, t, i, j, "iv"));
  for (auto [h, i] : minimality_pairs(f.degree(), opts.minimality)) {
    Contraction c(f.size(), h, i, family_edges(f));
    for (auto [t, s] : c.failures(f.size()))
      out.add(minimality_witness("v", t, s, h, i, [&](std::size_t v) { return f.label(v); }, true));
  }
  return report;
}

VerificationReport check_deg_axioms(const SignedColoredGraph& g, const CheckOptions& opts) {
  VerificationReport report{"deg", {{"vertices", std::to_string(g.size())}}, {}, {}};
  Collector out(report, opts.max_witnesses);
  check_graph_pointwise(g, out, true);
  return report;
}

VerificationReport check_d_equivalence(const InvolutionFamily& f, const CheckOptions& opts) {
  if (!f.has_reading_words()) throw std::invalid_argument("D equivalence needs reading words");
  VerificationReport report{"d-equiv", {{"family", f.name()}, {"window", to_string(opts.window)}}, {}, {}};
  Collector out(report, opts.max_witnesses);
  const auto colors = f.colors();
  for (int i : colors)
    for (std::size_t t = 0; t < f.size(); ++t) out.add(rule_restriction(f, t, i));
  for (int i : colors)
    for (std::size_t t = 0; t < f.size(); ++t) out.add(rule_d_equality(f, t, i));
  for (int i : colors)
    for (int j : colors)
      if (j - i >= 3)
        for (std::size_t t = 0; t < f.size(); ++t) out.add(rule_commute(f, t, i, j, "c"));
  for (const auto& win : positivity_windows(f.degree(), opts.window))
    for (const auto& comp : family_components(f, win.colors)) out.add(family_positivity(f, comp, win, opts));
  return report;
}

VerificationReport check_d_graph(const SignedColoredGraph& g, const CheckOptions& opts) {
  VerificationReport report{"d-graph", {{"window", to_string(opts.window)}}, {}, {}};
  Collector out(report, opts.max_witnesses);
  check_graph_pointwise(g, out, false);
  for (int i = 3; i <= g.degree() - 2; ++i) {
    const auto comps = graph_components(g, std::vector<int>{i - 1, i + 1});
    for (std::size_t w = 0; w < g.size(); ++w) out.add(rule_dgraph(g, w, i, comps));
  }
  for (const auto& win : positivity_windows(g.degree(), opts.window))
    for (const auto& comp : graph_components(g, win.colors)) out.add(graph_positivity(g, comp, win));
  return report;
}

VerificationReport check_stat_preserved(const InvolutionFamily& f) {
  VerificationReport report{"stat", {{"family", f.name()}}, {}, {}};
  Collector out(report, 25);
  for (int i : f.colors())
    for (std::size_t t = 0; t < f.size(); ++t) out.add(rule_stat(f, t, i));
  return report;
}

// ------------------------------------------------------------ replay

bool replay(const InvolutionFamily& f, const Witness& w, const CheckOptions& opts) {
  auto obj = [&](std::size_t k) { return w.objects.at(k); };
  auto idx = [&](std::size_t k) { return w.indices.at(k); };
  const std::string& r = w.rule;
  if (r == "i") return rule_fixed_points(f, obj(0), idx(0)).has_value();
  if (r == "ii") return rule_descent_set(f, obj(0), idx(0)).has_value();
  if (r == "iii") return rule_equality(f, obj(0), idx(0)).has_value();
  if (r == "iv" || r == "c") return rule_commute(f, obj(0), idx(0), idx(1), r.c_str()).has_value();
  if (r == "v") return Contraction(f.size(), idx(0), idx(1), family_edges(f)).violates(obj(0), obj(1));
  if (r == "a") return rule_restriction(f, obj(0), idx(0)).has_value();
  if (r == "b") return rule_d_equality(f, obj(0), idx(0)).has_value();
  if (r == "stat") return rule_stat(f, obj(0), idx(0)).has_value();
  if (r == "d") {
    auto win = window_for(w.indices, opts.window);
    if (!win) return false;
    const auto comp = component_of(obj(0), family_components(f, win->colors));
    return family_positivity(f, comp, *win, opts).has_value();
  }
  throw std::invalid_argument("rule '" + r + "' cannot be replayed on a family");
}

bool replay(const SignedColoredGraph& g, const Witness& w, const CheckOptions& opts) {
  auto obj = [&](std::size_t k) { return w.objects.at(k); };
  auto idx = [&](std::size_t k) { return w.indices.at(k); };
  const std::string& r = w.rule;
  if (r == "ax1") return rule_ax1(g, obj(0), idx(0)).has_value();
  if (r == "ax2") return g.has_edge(idx(0), obj(0), obj(1)) && rule_ax2(g, obj(0), obj(1), idx(0)).has_value();
  if (r == "ax3") return g.has_edge(idx(0), obj(0), obj(1)) && rule_ax3(g, obj(0), obj(1), idx(0)).has_value();
  if (r == "ax4") {
    const int i = idx(0), k = idx(1);
    const auto comp = component_of(obj(0), graph_components(g, color_run(i - k + 1, i)));
    return catalog_mismatch(g, comp, i, k).has_value();
  }
  if (r == "ax5") return rule_ax5(g, obj(0), obj(1), obj(2), idx(0), idx(1)).has_value();
  if (r == "ax6") return Contraction(g.size(), 2, idx(0), graph_edges(g)).violates(obj(0), obj(1));
  if (r == "dgraph") {
    const int i = idx(0);
    return rule_dgraph(g, obj(0), i, graph_components(g, std::vector<int>{i - 1, i + 1})).has_value();
  }
  if (r == "d") {
    auto win = window_for(w.indices, opts.window);
    if (!win) return false;
    const auto comp = component_of(obj(0), graph_components(g, win->colors));
    return graph_positivity(g, comp, *win).has_value();
  }
  throw std::invalid_argument("rule '" + r + "' cannot be replayed on a graph");
}

std::string to_string(MinimalityScope s) { return s == MinimalityScope::full ? "full" : "reduced"; }
std::string to_string(WindowMode w) { return w == WindowMode::padded ? "padded" : "literal"; }

}  // namespace deq
