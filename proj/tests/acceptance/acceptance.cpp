// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "deq/expansion.hpp"
#include "deq/verify.hpp"
#include "families.hpp"
#include "oracles.hpp"

using namespace deq;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

InvolutionFamily perm(InvolutionKind k, int n) { return gen::builtin(ObjectKind::permutation, k, n); }
InvolutionFamily syt(int n) { return gen::builtin(ObjectKind::tableau, InvolutionKind::haiman, n); }

using LabelSets = std::set<std::set<std::string>>;

LabelSets classes_of(const InvolutionFamily& f) {
  LabelSets out;
  for (const auto& c : enumerate_classes(f)) {
    std::set<std::string> s;
    for (auto t : c.members) s.insert(f.label(t));
    out.insert(s);
  }
  return out;
}

void expect_edge(const InvolutionFamily& f, int i, const char* a, const char* b) {
  expect(f.apply(i, *f.find(a)) == *f.find(b), std::string("missing ") + std::to_string(i) + "-edge " + a + "-" + b);
}

// ----------------------------------------------------------------- criteria

std::string reference_classes() {
  const auto h = perm(InvolutionKind::haiman, 4);
  const LabelSets haiman_s4{{"2314", "1324", "1423"}, {"2143", "3142"}, {"1432", "2431", "3421"}, {"2341", "1342", "1243"},
                       {"4312", "4213", "3214"}, {"2134", "3124", "4123"}, {"2413", "3412"}, {"4132", "4231", "3241"},
                       {"1234"},                 {"4321"}};
  expect(classes_of(h) == haiman_s4, "haiman classes of S_4 differ from the reference");
  expect_edge(h, 2, "2314", "1324");
  expect_edge(h, 3, "1324", "1423");
  expect_edge(h, 2, "2143", "3142");
  expect_edge(h, 3, "2143", "3142");

  const auto y = perm(InvolutionKind::hybrid, 4);
  const LabelSets hybrid_s4{{"2314", "3124", "4123"}, {"2143", "3142"}, {"1432", "2431", "3241"}, {"2341", "1342", "1423"},
                       {"4312", "4231", "3421"}, {"2134", "1324", "1243"}, {"2413", "3412"}, {"4132", "4213", "3214"},
                       {"1234"},                 {"4321"}};
  expect(classes_of(y) == hybrid_s4, "hybrid classes of S_4 differ from the reference");
  expect_edge(y, 2, "2314", "3124");
  expect_edge(y, 3, "3124", "4123");

  const auto t = perm(InvolutionKind::twisted, 4);
  const LabelSets twisted_s4{{"2314", "3124", "2143", "1342", "1423"},
                       {"1432", "2413", "3214"},
                       {"2341", "3142", "4123"},
                       {"4312", "4231", "3421"},
                       {"2134", "1324", "1243"},
                       {"4132", "4213", "3412", "2431", "3241"},
                       {"1234"},
                       {"4321"}};
  expect(classes_of(t) == twisted_s4, "twisted classes of S_4 differ from the reference");
  expect_edge(t, 2, "2314", "3124");
  expect_edge(t, 3, "3124", "2143");
  expect_edge(t, 2, "2143", "1342");
  expect_edge(t, 3, "1342", "1423");

  const auto h3 = perm(InvolutionKind::haiman, 3);
  const auto t3 = perm(InvolutionKind::twisted, 3);
  expect(classes_of(h3) == LabelSets{{"213", "312"}, {"231", "132"}, {"123"}, {"321"}}, "haiman S_3 differs from the reference");
  expect(classes_of(t3) == LabelSets{{"213", "132"}, {"231", "312"}, {"123"}, {"321"}}, "twisted S_3 differs from the reference");
  return "S_4 classes under haiman (10), hybrid (10), twisted (8) and S_3 structure match exactly";
}

std::vector<InvolutionFamily> passing_families() {
  std::vector<InvolutionFamily> out;
  for (int n = 3; n <= 7; ++n) out.push_back(syt(n));
  for (int n = 3; n <= 6; ++n) out.push_back(perm(InvolutionKind::hybrid, n));
  return out;
}

std::string dual_equivalences() {
  for (const auto& f : passing_families()) {
    const auto r = check_dual_equivalence(f);
    expect(r.passed(), f.name() + " fails the dual equivalence check");
  }
  return "haiman on SYT(n), n=3..7, and hybrid on S_n, n=3..6, pass";
}

std::string single_schur() {
  std::size_t classes = 0;
  for (const auto& f : passing_families()) {
    const int n = f.degree();
    for (const auto& c : enumerate_classes(f)) {
      const auto g = greedy_schur_expand(c.qsym);
      expect(g.succeeded() && g.expansion.terms().size() == 1 &&
                 g.expansion.terms().begin()->second == QPoly::constant(1),
             f.name() + ": class of " + f.label(c.members.front()) + " is " + to_string(g.expansion));
      expect(monomial_expand(c.qsym, n) == monomial_expand(g.expansion.to_qsym(), n),
             f.name() + ": monomial expansions differ for class of " + f.label(c.members.front()));
      ++classes;
    }
  }
  return std::to_string(classes) + " classes, each exactly one Schur function";
}

std::string dominant_elements_check() {
  std::size_t bijections = 0;
  for (const auto& f : passing_families()) {
    const auto classes = enumerate_classes(f);
    const auto dom = dominant_elements(f);
    const auto sub = subordinate_elements(f);
    expect(dom.size() == classes.size() && sub.size() == classes.size(), f.name() + ": class count mismatch");
    for (std::size_t k = 0; k < classes.size(); ++k) {
      expect(dominance_maxima(f, classes[k].members).size() == 1, f.name() + ": dominant element not unique");
      expect(descent_composition(f, dom[k].object) == Composition(dom[k].shape.parts()),
             f.name() + ": alpha of the dominant element is not a partition");
      expect(beta_shape(f, sub[k].object) == dom[k].shape, f.name() + ": beta(subordinate) != alpha(dominant)");
      if (f.degree() <= 6) {
        const auto img = class_bijection_to_syt(f, classes[k].members);
        std::set<std::string> images;
        for (const auto& [obj, t] : img) {
          expect(tableau_descents(t) == f.des(obj), f.name() + ": bijection does not preserve descents");
          images.insert(to_string(t));
        }
        expect(images.size() == classes[k].members.size(), f.name() + ": bijection not injective");
        ++bijections;
      }
    }
    expect(schur_expansion_via_dominant(f) == greedy_schur_expand(qsym_from_family(f)).expansion,
           f.name() + ": expansion via dominant elements differs");
  }
  return "unique dominant per class, expansions agree, beta/alpha agree, " + std::to_string(bijections) +
         " class bijections verified";
}

std::string negative_control() {
  const auto f = perm(InvolutionKind::twisted, 4);
  const auto r = check_dual_equivalence(f);
  expect(!r.passed(), "twisted S_4 passes the dual equivalence check");
  for (const auto& w : r.failures) expect(replay(f, w), "witness " + w.rule + " does not replay");
  const auto g = build_graph(f);
  const auto a = check_deg_axioms(g);
  expect(a.failed_rule("ax4"), "twisted S_4 graph does not fail ax4");
  std::set<std::string> chain{"1342", "1423", "2143", "2314", "3124"};
  bool on_chain = false;
  for (const auto& w : a.failures) {
    expect(replay(g, w), "witness " + w.rule + " does not replay");
    if (w.rule != "ax4") continue;
    const auto comp = family_components(f, std::vector<int>{2, 3});
    for (const auto& c : comp) {
      if (!std::binary_search(c.begin(), c.end(), w.objects.front())) continue;
      std::set<std::string> labels;
      for (auto t : c) labels.insert(f.label(t));
      on_chain = on_chain || labels == chain;
    }
  }
  expect(on_chain, "no ax4 witness on the 5-vertex chain");
  return "dual check fails (first rule " + r.failures.front().rule + "), ax4 fails on the 5-vertex chain, " +
         std::to_string(r.failures.size() + a.failures.size()) + " witnesses replay";
}

std::string d_equivalence() {
  std::size_t classes = 0;
  for (int n = 3; n <= 6; ++n) {
    const auto f = perm(InvolutionKind::twisted, n);
    expect(check_d_equivalence(f).passed(), f.name() + " fails the D equivalence check");
    expect(check_d_graph(build_graph(f)).passed(), f.name() + " graph fails the D graph check");
    for (const auto& c : enumerate_classes(f)) {
      expect(is_schur_positive(c.qsym).positive(), f.name() + ": class of " + f.label(c.members.front()) +
                                                       " is not Schur positive");
      ++classes;
    }
  }
  return "twisted S_n, n=3..6, passes both checks; " + std::to_string(classes) + " classes Schur positive";
}

std::string ribbons() {
  for (int n = 3; n <= 6; ++n) {
    const auto r = ribbon_check(perm(InvolutionKind::twisted, n));
    expect(r.passed(), "ribbon identity fails for n=" + std::to_string(n));
  }
  const auto f = perm(InvolutionKind::twisted, 4);
  SchurExpansion expected(4);
  expected.add(Partition({3, 1}));
  expected.add(Partition({2, 2}));
  bool seen = false;
  for (const auto& c : ribbon_check(f).classes)
    if (c.members.size() == 5 && std::binary_search(c.members.begin(), c.members.end(), *f.find("2314"))) {
      expect(c.ribbon_expansion == expected && c.class_expansion == expected,
             "five-element class gives " + to_string(c.class_expansion));
      seen = true;
    }
  expect(seen, "five-element class not found");
  return "n=3..6 pass; five-element class of S_4 is s(3,1) + s(2,2)";
}

std::map<std::vector<int>, long long> plain(const MonomialPoly& p) {
  std::map<std::vector<int>, long long> out;
  for (const auto& [x, c] : p.terms()) {
    expect(c.terms().size() == 1 && c.terms().begin()->first == Exponents{0}, "unexpected q-coefficient");
    out[x] = c.terms().begin()->second.convert_to<long long>();
  }
  return out;
}

std::string oracles() {
  int shapes = 0;
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : partitions_of(n)) {
      for (int m : {n, n + 1})
        expect(plain(monomial_expand(schur_via_gessel(p), m)) == oracle::ssyt_polynomial(p.parts(), m),
               "Gessel expansion of " + to_string(p) + " differs at " + std::to_string(m) + " variables");
      ++shapes;
    }
  for (int trial = 0; trial < 50; ++trial) {
    const int n = gen::uniform(1, 6);
    SchurExpansion s(n);
    for (const auto& p : partitions_of(n))
      if (gen::uniform(0, 2) == 0) s.add(p, Integer(gen::uniform(1, 5)));
    const auto g = greedy_schur_expand(s.to_qsym());
    expect(g.succeeded() && g.expansion == s, "round trip failed for " + to_string(s));
  }
  return std::to_string(shapes) + " shapes agree with the SSYT oracle; 50 random round trips exact";
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

std::string round_trips() {
  std::vector<InvolutionFamily> fams;
  for (int n = 1; n <= 5; ++n) {
    fams.push_back(syt(n));
    for (auto k : {InvolutionKind::haiman, InvolutionKind::twisted, InvolutionKind::hybrid}) fams.push_back(perm(k, n));
  }
  const std::size_t builtin_count = fams.size();
  for (int k = 0; k < 20; ++k) fams.push_back(gen::custom_family(5, k % 2 == 1));
  int pass = 0, fail = 0;
  for (const auto& f : fams) {
    const auto g = build_graph(f);
    expect(same_structure(graph_to_family(g), f) && build_graph(graph_to_family(g)) == g,
           f.name() + ": graph round trip is not the identity");
    const bool dual = check_dual_equivalence(f).passed();
    expect(dual == check_deg_axioms(g).passed(), f.name() + " n=" + std::to_string(f.degree()) +
                                                     ": graph axioms and involution conditions disagree");
    (dual ? pass : fail)++;
  }
  std::ostringstream out;
  out << builtin_count << " built-in + 20 custom families agree (" << pass << " pass, " << fail << " fail)";
  return out.str();
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget;
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "reference class structure", 1, reference_classes},
      {2, "dual equivalences", 30, dual_equivalences},
      {3, "classes are single Schur functions", 60, single_schur},
      {4, "dominant and subordinate elements", 60, dominant_elements_check},
      {5, "negative control", 60, negative_control},
      {6, "D equivalence", 60, d_equivalence},
      {7, "ribbon identity", 60, ribbons},
      {8, "oracle equivalence", 60, oracles},
      {9, "constructions round-trip", 60, round_trips},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string msg;
    bool ok = true;
    try {
      msg = c.run();
    } catch (const std::exception& e) {
      ok = false;
      msg = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.budget) {
      ok = false;
      msg += "; over the " + std::to_string(static_cast<int>(c.budget)) + " s budget";
    }
    std::printf("%s criterion %d (%s): %s [%.2f s]\n", ok ? "PASS" : "FAIL", c.id, c.name, msg.c_str(), secs);
    failed += !ok;
  }
  std::fflush(stdout);
  return failed ? 1 : 0;
}
