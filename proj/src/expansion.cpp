#include "deq/expansion.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "deq/involutions.hpp"

namespace deq {

namespace {

std::string describe(const InvolutionFamily& f, const std::vector<std::size_t>& members) {
  std::string s = "{";
  for (std::size_t k = 0; k < members.size(); ++k) s += (k ? ", " : "") + f.label(members[k]);
  return s + "}";
}

bool dominates(const Composition& a, const Composition& b) {
  const Dominance d = dominance_compare(a, b);
  return d == Dominance::equal || d == Dominance::greater;
}

std::size_t unique_element(const InvolutionFamily& f, const std::vector<std::size_t>& members,
                           const std::vector<std::size_t>& found, const char* what) {
  if (found.size() != 1)
    throw ClassStructureError(members, "class " + describe(f, members) + " has " +
                                           std::to_string(found.size()) + " " + what + " elements");
  return found.front();
}

Partition partition_or_throw(const Composition& c, const std::vector<std::size_t>& members,
                             const std::string& context) {
  if (!c.is_partition())
    throw ClassStructureError(members, context + " " + to_string(c) + " is not a partition");
  return Partition(c);
}

}  // namespace

Composition descent_composition(const InvolutionFamily& f, std::size_t obj) {
  return composition_from_subset(f.des(obj));
}

Partition beta_shape(const InvolutionFamily& f, std::size_t obj) {
  const Composition c = composition_from_subset(f.des(obj).complement());
  return conjugate(partition_or_throw(c, {obj}, "complement composition of " + f.label(obj)));
}

std::vector<std::size_t> dominance_maxima(const InvolutionFamily& f, const std::vector<std::size_t>& members) {
  std::vector<std::size_t> out;
  for (std::size_t t : members) {
    const Composition a = descent_composition(f, t);
    bool top = true;
    for (std::size_t s : members)
      if (s != t && !dominates(a, descent_composition(f, s))) {
        top = false;
        break;
      }
    if (top) out.push_back(t);
  }
  return out;
}

std::vector<std::size_t> dominance_minima(const InvolutionFamily& f, const std::vector<std::size_t>& members) {
  std::vector<std::size_t> out;
  for (std::size_t t : members) {
    const Composition a = descent_composition(f, t);
    bool bottom = true;
    for (std::size_t s : members)
      if (s != t && !dominates(descent_composition(f, s), a)) {
        bottom = false;
        break;
      }
    if (bottom) out.push_back(t);
  }
  return out;
}

std::vector<ClassElement> dominant_elements(const InvolutionFamily& f) {
  std::vector<ClassElement> out;
  const auto classes = family_components(f, f.colors());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& members = classes[c];
    const std::size_t t = unique_element(f, members, dominance_maxima(f, members), "dominant");
    out.push_back({c, t, partition_or_throw(descent_composition(f, t), members, "dominant shape of " + f.label(t))});
  }
  return out;
}

std::vector<ClassElement> subordinate_elements(const InvolutionFamily& f) {
  std::vector<ClassElement> out;
  const auto classes = family_components(f, f.colors());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto& members = classes[c];
    const std::size_t t = unique_element(f, members, dominance_minima(f, members), "subordinate");
    const Composition comp = composition_from_subset(f.des(t).complement());
    out.push_back({c, t, conjugate(partition_or_throw(comp, members, "complement composition of " + f.label(t)))});
  }
  return out;
}

SchurExpansion schur_expansion_via_dominant(const InvolutionFamily& f) {
  SchurExpansion out(f.degree(), f.stat_arity());
  for (const auto& e : dominant_elements(f)) out.add(e.shape, QPoly::monomial(f.stat(e.object)));
  return out;
}

std::map<std::size_t, StandardYoungTableau> class_bijection_to_syt(const InvolutionFamily& f,
                                                                   const std::vector<std::size_t>& members) {
  const std::size_t root = unique_element(f, members, dominance_maxima(f, members), "dominant");
  const Partition shape = partition_or_throw(descent_composition(f, root), members, "dominant shape");
  std::map<std::size_t, StandardYoungTableau> image{{root, superstandard(shape)}};
  std::deque<std::size_t> queue{root};
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (int i : f.colors()) {
      const std::size_t v = f.apply(i, u);
      const StandardYoungTableau t = lift_to_tableaux(i, image.at(u));
      auto [it, inserted] = image.emplace(v, t);
      if (inserted) {
        queue.push_back(v);
      } else if (!(it->second == t)) {
        throw ClassStructureError(members, "walks reach " + f.label(v) + " with tableaux " +
                                               to_string(it->second) + " and " + to_string(t));
      }
    }
  }
  if (image.size() != members.size())
    throw ClassStructureError(members, "class " + describe(f, members) + " is not connected under all colors");
  std::set<StandardYoungTableau> distinct;
  for (const auto& [obj, t] : image) {
    if (!std::binary_search(members.begin(), members.end(), obj))
      throw ClassStructureError(members, "walk leaves the class at " + f.label(obj));
    if (!(tableau_descents(t) == f.des(obj)))
      throw ClassStructureError(members, f.label(obj) + " and its tableau " + to_string(t) +
                                             " have different descent sets");
    distinct.insert(t);
  }
  if (distinct.size() != image.size() || distinct.size() != enumerate_syt(shape, shape.size()).size())
    throw ClassStructureError(members, "class " + describe(f, members) + " is not in bijection with SYT" +
                                           to_string(shape));
  return image;
}

namespace {

RibbonClassResult ribbon_class(const InvolutionFamily& f, const std::vector<std::size_t>& members) {
  const int n = f.degree();
  RibbonClassResult r;
  r.members = members;
  const Permutation& w = f.reading_word(members.front());
  r.inv = inversions(w);
  r.first_exceeds_last = n >= 2 && w.at(1) > w.at(n);
  r.ribbons = enumerate_ribbons(n, r.inv, r.first_exceeds_last);

  bool inv_constant = true;
  QSymExpr q(n);
  for (std::size_t t : members) {
    q.add(f.des(t));
    inv_constant = inv_constant && inversions(f.reading_word(t)) == r.inv;
  }
  const GreedyResult g = greedy_schur_expand(q);
  r.class_expansion = g.expansion;
  r.ribbon_expansion = SchurExpansion(n);
  for (const auto& nu : r.ribbons) r.ribbon_expansion += ribbon_schur(nu, n);
  r.holds = inv_constant && g.succeeded() && r.class_expansion == r.ribbon_expansion;
  return r;
}

}  // namespace

RibbonReport ribbon_check(const InvolutionFamily& f) {
  if (!f.has_reading_words()) throw std::invalid_argument("ribbon check needs reading words");
  RibbonReport out{{"ribbon", {{"family", f.name()}}, {}, {}}, {}};
  for (const auto& members : family_components(f, f.colors())) {
    auto r = ribbon_class(f, members);
    if (!r.holds) {
      auto& count = out.report.failure_counts["ribbon"];
      if (count < 25)
        out.report.failures.push_back(
            {"ribbon", {members.front()}, {},
             "class " + describe(f, members) + " sums to " + to_string(r.class_expansion) +
                 " but its ribbons give " + to_string(r.ribbon_expansion)});
      ++count;
    }
    out.classes.push_back(std::move(r));
  }
  return out;
}

bool ribbon_class_fails(const InvolutionFamily& f, std::size_t obj) {
  for (const auto& members : family_components(f, f.colors()))
    if (std::binary_search(members.begin(), members.end(), obj)) return !ribbon_class(f, members).holds;
  return false;
}

}  // namespace deq
