#include <doctest.h>

#include "deq/expansion.hpp"
#include "deq/verify.hpp"
#include "families.hpp"

using namespace deq;

namespace {

std::vector<InvolutionFamily> builtins(int max_perm, int max_syt) {
  std::vector<InvolutionFamily> out;
  for (int n = 1; n <= max_syt; ++n) out.push_back(gen::builtin(ObjectKind::tableau, InvolutionKind::haiman, n));
  for (int n = 1; n <= max_perm; ++n)
    for (auto k : {InvolutionKind::haiman, InvolutionKind::twisted, InvolutionKind::hybrid})
      out.push_back(gen::builtin(ObjectKind::permutation, k, n));
  return out;
}

bool same_structure(const InvolutionFamily& a, const InvolutionFamily& b) {
  if (a.degree() != b.degree() || a.size() != b.size()) return false;
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (a.label(t) != b.label(t) || a.des(t) != b.des(t)) return false;
    for (int i : a.colors())
      if (a.apply(i, t) != b.apply(i, t)) return false;
  }
  return true;
}

std::vector<InvolutionFamily> random_families(int count, int max_n) {
  std::vector<InvolutionFamily> out;
  for (int k = 0; k < count; ++k) out.push_back(gen::custom_family(max_n, k % 2 == 1));
  return out;
}

/// Exactly one Schur term whose coefficient is a single monomial q^stat.
bool single_schur(const InvolutionFamily& f, const EquivalenceClass& c) {
  const auto g = greedy_schur_expand(c.qsym);
  if (!g.succeeded() || g.expansion.terms().size() != 1) return false;
  const auto& [lambda, coeff] = *g.expansion.terms().begin();
  if (!(coeff == QPoly::monomial(f.stat(c.members.front())))) return false;
  const int n = f.degree();
  return monomial_expand(c.qsym, n) == monomial_expand(g.expansion.to_qsym(), n);
}

}  // namespace

TEST_CASE("graph constructions are mutually inverse") {
  auto fams = builtins(6, 6);
  for (auto& f : random_families(30, 5)) fams.push_back(std::move(f));
  for (const auto& f : fams) {
    const auto g = build_graph(f);
    const auto back = graph_to_family(g);
    REQUIRE(same_structure(back, f));
    REQUIRE(build_graph(back) == g);
  }
}

TEST_CASE("graph axioms agree with the involution conditions") {
  auto fams = builtins(6, 6);
  for (auto& f : random_families(60, 5)) fams.push_back(std::move(f));
  int passing = 0, failing = 0;
  for (const auto& f : fams) {
    const bool dual = check_dual_equivalence(f).passed();
    const bool deg = check_deg_axioms(build_graph(f)).passed();
    INFO(f.name(), " n=", f.degree(), " size=", f.size());
    REQUIRE(dual == deg);
    (dual ? passing : failing)++;
  }
  CHECK(passing > 0);
  CHECK(failing > 0);
}

TEST_CASE("every class of a dual equivalence is a single Schur function") {
  std::vector<InvolutionFamily> fams;
  for (int n = 1; n <= 7; ++n) fams.push_back(gen::builtin(ObjectKind::tableau, InvolutionKind::haiman, n));
  for (int n = 1; n <= 6; ++n) {
    fams.push_back(gen::builtin(ObjectKind::permutation, InvolutionKind::hybrid, n));
    fams.push_back(gen::builtin(ObjectKind::permutation, InvolutionKind::haiman, n));
  }
  for (int k = 0; k < 20; ++k) fams.push_back(gen::custom_family(5, false));
  for (const auto& f : fams) {
    REQUIRE(check_dual_equivalence(f).passed());
    for (const auto& c : enumerate_classes(f)) REQUIRE(single_schur(f, c));
    REQUIRE(schur_expansion_via_dominant(f) == greedy_schur_expand(qsym_from_family(f)).expansion);
  }
}

TEST_CASE("a statistic constant on classes becomes the Schur coefficient") {
  const auto base = gen::builtin(ObjectKind::permutation, InvolutionKind::hybrid, 5);
  auto r = gen::raw(base);
  const auto classes = enumerate_classes(base);
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (auto t : classes[k].members) r.objects[t].stat = {static_cast<int>(k % 4), static_cast<int>(k % 3)};
  const auto f = r.build();
  REQUIRE(check_stat_preserved(f).passed());
  for (const auto& c : enumerate_classes(f)) REQUIRE(single_schur(f, c));
  CHECK(schur_expansion_via_dominant(f) == greedy_schur_expand(qsym_from_family(f)).expansion);
}

TEST_CASE("dominant and subordinate elements correspond") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& f : {gen::builtin(ObjectKind::tableau, InvolutionKind::haiman, n),
                          gen::builtin(ObjectKind::permutation, InvolutionKind::hybrid, n)}) {
      const auto d = dominant_elements(f);
      const auto s = subordinate_elements(f);
      REQUIRE(d.size() == s.size());
      const auto classes = enumerate_classes(f);
      for (std::size_t k = 0; k < d.size(); ++k) {
        REQUIRE(beta_shape(f, s[k].object) == d[k].shape);
        const auto img = class_bijection_to_syt(f, classes[k].members);
        REQUIRE(img.size() == classes[k].members.size());
        for (const auto& [obj, t] : img) REQUIRE(tableau_descents(t) == f.des(obj));
      }
    }
}

TEST_CASE("D equivalence classes are Schur positive") {
  for (int n = 3; n <= 6; ++n) {
    const auto f = gen::builtin(ObjectKind::permutation, InvolutionKind::twisted, n);
    REQUIRE(check_d_equivalence(f).passed());
    for (const auto& c : enumerate_classes(f)) REQUIRE(is_schur_positive(c.qsym).positive());
  }
  // dual equivalences with reading words are D equivalences as well
  for (int n = 3; n <= 6; ++n) {
    const auto f = gen::builtin(ObjectKind::tableau, InvolutionKind::haiman, n);
    CHECK(check_d_equivalence(f).passed());
  }
}

TEST_CASE("every stored witness of a failing random family replays") {
  int replayed = 0;
  for (const auto& f : random_families(40, 5)) {
    const auto r = check_dual_equivalence(f);
    for (const auto& w : r.failures) {
      REQUIRE(replay(f, w));
      ++replayed;
    }
    const auto g = build_graph(f);
    for (const auto& w : check_deg_axioms(g).failures) REQUIRE(replay(g, w));
  }
  CHECK(replayed > 0);
}
