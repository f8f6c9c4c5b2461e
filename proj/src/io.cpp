#include "deq/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace deq::io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw FormatError(msg); }

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) fail(std::string("missing field '") + key + "'");
  return doc.at(key);
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(where + ": expected an integer");
  return v.get<int>();
}

std::vector<int> int_list(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where + ": expected an array of integers");
  std::vector<int> out;
  for (const auto& x : v) out.push_back(as_int(x, where));
  return out;
}

std::string as_id(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  fail(where + ": object ids must be strings or integers");
}

void only_keys(const json& doc, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!doc.is_object()) fail(where + ": expected an object");
  for (const auto& [key, value] : doc.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) fail(where + ": unknown field '" + key + "'");
  }
}

Integer parse_value(const json& v) {
  if (v.is_number_integer()) return Integer(v.get<long long>());
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    const bool digits = !s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) == std::string::npos &&
                        s != "-";
    if (!digits) fail("coefficient value '" + s + "' is not an integer");
    return Integer(s);
  }
  fail("coefficient value must be an integer or a decimal string");
}

json value_json(const Integer& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
    return c.convert_to<long long>();
  return c.str();
}

json qpoly_json(const QPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"exponents", e}, {"value", value_json(c)}});
  return out;
}

QPoly qpoly_from(const json& coeff, std::size_t& arity, bool& arity_known, const std::string& where) {
  if (!coeff.is_array()) fail(where + ": 'coeff' must be an array");
  std::vector<std::pair<Exponents, Integer>> terms;
  for (const auto& t : coeff) {
    only_keys(t, {"exponents", "value"}, where);
    Exponents e = int_list(require(t, "exponents"), where + " exponents");
    if (!arity_known) {
      arity = e.size();
      arity_known = true;
    }
    if (e.size() != arity) fail(where + ": exponent vectors of different lengths");
    for (int x : e)
      if (x < 0) fail(where + ": negative exponent");
    terms.emplace_back(std::move(e), parse_value(require(t, "value")));
  }
  QPoly p(arity_known ? arity : 1);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

DescentSet descents_from(const json& v, int n, const std::string& where) {
  const auto members = int_list(v, where);
  for (int d : members)
    if (d < 1 || d > n - 1) fail(where + ": descent " + std::to_string(d) + " outside [1, " + std::to_string(n - 1) + "]");
  if (std::set<int>(members.begin(), members.end()).size() != members.size()) fail(where + ": repeated descent");
  return DescentSet(n, members);
}

std::vector<std::pair<std::vector<int>, json>> parse_terms(const json& doc, const char* key, int& n,
                                                           std::size_t& arity) {
  only_keys(doc, {"n", "terms"}, "document");
  n = as_int(require(doc, "n"), "n");
  if (n < 1) fail("n must be positive");
  const json& terms = require(doc, "terms");
  if (!terms.is_array()) fail("'terms' must be an array");
  std::vector<std::pair<std::vector<int>, json>> out;
  bool known = false;
  arity = 1;
  for (const auto& t : terms) {
    only_keys(t, {key, "coeff"}, "term");
    const auto& c = require(t, "coeff");
    if (c.is_array())
      for (const auto& x : c)
        if (x.is_object() && x.contains("exponents") && x.at("exponents").is_array()) {
          if (!known) arity = x.at("exponents").size(), known = true;
        }
    out.emplace_back(int_list(require(t, key), key), c);
  }
  return out;
}

}  // namespace

// ------------------------------------------------------------ families

InvolutionFamily family_from_json(const json& doc) {
  only_keys(doc, {"n", "objects", "des", "stat", "words", "involutions"}, "family");
  const int n = as_int(require(doc, "n"), "n");
  if (n < 1) fail("n must be positive");

  const json& ids = require(doc, "objects");
  if (!ids.is_array()) fail("'objects' must be an array");
  std::vector<std::string> labels;
  std::map<std::string, std::size_t> index;
  for (const auto& v : ids) {
    labels.push_back(as_id(v, "objects"));
    if (!index.emplace(labels.back(), labels.size() - 1).second) fail("duplicate object id '" + labels.back() + "'");
  }
  auto lookup = [&](const std::string& id, const std::string& where) {
    auto it = index.find(id);
    if (it == index.end()) fail(where + ": unknown object id '" + id + "'");
    return it->second;
  };
  auto per_object = [&](const char* key, bool required) -> std::vector<const json*> {
    std::vector<const json*> out(labels.size(), nullptr);
    if (!doc.contains(key)) {
      if (required) fail(std::string("missing field '") + key + "'");
      return out;
    }
    const json& m = doc.at(key);
    if (!m.is_object()) fail(std::string("'") + key + "' must map object ids to arrays");
    for (const auto& [id, v] : m.items()) out[lookup(id, key)] = &v;
    for (std::size_t k = 0; k < labels.size(); ++k)
      if (!out[k] && (required || !m.empty())) fail(std::string("'") + key + "' has no entry for '" + labels[k] + "'");
    return out;
  };

  const auto des = per_object("des", true);
  const auto stat = per_object("stat", false);
  const auto words = per_object("words", false);
  std::vector<InvolutionFamily::Object> objects;
  std::optional<std::size_t> arity;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    InvolutionFamily::Object o{labels[k], descents_from(*des[k], n, "des of '" + labels[k] + "'"), {}, std::nullopt};
    if (stat[k]) {
      o.stat = int_list(*stat[k], "stat of '" + labels[k] + "'");
      if (o.stat.empty()) fail("stat of '" + labels[k] + "' is empty");
      if (arity && *arity != o.stat.size()) fail("statistics of different lengths");
      arity = o.stat.size();
    }
    if (words[k]) {
      auto w = int_list(*words[k], "word of '" + labels[k] + "'");
      std::vector<int> sorted = w;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t p = 0; p < sorted.size(); ++p)
        if (sorted[p] != static_cast<int>(p) + 1 || static_cast<int>(sorted.size()) != n)
          fail("word of '" + labels[k] + "' is not a permutation of 1.." + std::to_string(n));
      o.word = Permutation(std::move(w));
    }
    objects.push_back(std::move(o));
  }

  std::map<int, std::vector<std::size_t>> partners;
  if (doc.contains("involutions")) {
    const json& inv = doc.at("involutions");
    if (!inv.is_object()) fail("'involutions' must be an object keyed by color");
    for (const auto& [key, table] : inv.items()) {
      int i = 0;
      try {
        std::size_t used = 0;
        i = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        fail("involution key '" + key + "' is not an integer");
      }
      if (i < 2 || i > n - 1) fail("involution " + key + " outside [2, " + std::to_string(n - 1) + "]");
      if (!table.is_object()) fail("involution " + key + " must map ids to ids");
      std::vector<std::size_t> row(labels.size());
      for (std::size_t k = 0; k < row.size(); ++k) row[k] = k;
      for (const auto& [from, to] : table.items())
        row[lookup(from, "involution " + key)] = lookup(as_id(to, "involution " + key), "involution " + key);
      for (std::size_t k = 0; k < row.size(); ++k)
        if (row[row[k]] != k)
          fail("involution " + key + " is not an involution at '" + labels[k] + "' (maps to '" + labels[row[k]] +
               "', which maps to '" + labels[row[row[k]]] + "')");
      partners[i] = std::move(row);
    }
  }
  try {
    return InvolutionFamily(n, std::move(objects), std::move(partners));
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

json family_to_json(const InvolutionFamily& f) {
  json doc;
  doc["n"] = f.degree();
  doc["objects"] = labels_of(f);
  json des = json::object(), stat = json::object(), words = json::object();
  for (std::size_t t = 0; t < f.size(); ++t) {
    des[f.label(t)] = f.des(t).members();
    stat[f.label(t)] = f.stat(t);
    if (f.has_reading_words()) words[f.label(t)] = f.reading_word(t).word();
  }
  doc["des"] = des;
  doc["stat"] = stat;
  if (f.has_reading_words()) doc["words"] = words;
  json inv = json::object();
  for (int i : f.colors()) {
    json table = json::object();
    for (std::size_t t = 0; t < f.size(); ++t)
      if (!f.is_fixed(i, t)) table[f.label(t)] = f.label(f.apply(i, t));
    inv[std::to_string(i)] = table;
  }
  doc["involutions"] = inv;
  return doc;
}

// ------------------------------------------------------------ QSym / Schur

QSymExpr qsym_from_json(const json& doc) {
  int n = 0;
  std::size_t arity = 1;
  const auto terms = parse_terms(doc, "descents", n, arity);
  QSymExpr e(n, arity);
  bool known = true;
  for (const auto& [d, coeff] : terms) {
    json set = d;
    e.add(descents_from(set, n, "descents"), qpoly_from(coeff, arity, known, "term"));
  }
  return e;
}

json qsym_to_json(const QSymExpr& e) {
  json terms = json::array();
  for (const auto& [d, c] : e.terms()) terms.push_back({{"descents", d.members()}, {"coeff", qpoly_json(c)}});
  return {{"n", e.degree()}, {"terms", terms}};
}

json schur_to_json(const SchurExpansion& s) {
  json terms = json::array();
  for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it)
    terms.push_back({{"partition", it->first.parts()}, {"coeff", qpoly_json(it->second)}});
  return {{"n", s.degree()}, {"terms", terms}};
}

SchurExpansion schur_from_json(const json& doc) {
  int n = 0;
  std::size_t arity = 1;
  const auto terms = parse_terms(doc, "partition", n, arity);
  SchurExpansion s(n, arity);
  bool known = true;
  for (const auto& [parts, coeff] : terms) {
    for (std::size_t k = 0; k < parts.size(); ++k)
      if (parts[k] <= 0 || (k && parts[k] > parts[k - 1])) fail("partition entries must be positive and weakly decreasing");
    const Partition lambda(parts);
    if (lambda.size() != n) fail("partition " + to_string(lambda) + " does not have size n");
    s.add(lambda, qpoly_from(coeff, arity, known, "term"));
  }
  return s;
}

json verdict_to_json(const PositivityVerdict& v) {
  json out{{"verdict", to_string(v.kind)},
           {"symmetric", v.kind != PositivityVerdict::Kind::not_symmetric},
           {"expansion", schur_to_json(v.expansion)}};
  if (v.witness) out["negative_at"] = v.witness->parts();
  if (!v.remainder.is_zero()) out["remainder"] = qsym_to_json(v.remainder);
  return out;
}

// ------------------------------------------------------------ reports

json report_to_json(const VerificationReport& r, const std::vector<std::string>& labels) {
  json settings = json::object();
  for (const auto& [k, v] : r.settings) settings[k] = v;
  json failures = json::array();
  for (const auto& w : r.failures) {
    json objects = json::array();
    for (std::size_t o : w.objects) objects.push_back(o < labels.size() ? labels[o] : std::to_string(o));
    failures.push_back({{"rule", w.rule}, {"objects", objects}, {"indices", w.indices}, {"detail", w.detail}});
  }
  json counts = json::object();
  for (const auto& [rule, c] : r.failure_counts) counts[rule] = c;
  return {{"check", r.check},
          {"verdict", r.passed() ? "pass" : "fail"},
          {"settings", settings},
          {"failure_counts", counts},
          {"failures", failures}};
}

std::vector<std::string> labels_of(const InvolutionFamily& f) {
  std::vector<std::string> out;
  for (std::size_t t = 0; t < f.size(); ++t) out.push_back(f.label(t));
  return out;
}

json classes_to_json(const InvolutionFamily& f) {
  json classes = json::array();
  std::size_t nontrivial = 0;
  for (const auto& c : enumerate_classes(f)) {
    const auto maxima = dominance_maxima(f, c.members);
    const auto minima = dominance_minima(f, c.members);
    json members = json::array();
    for (std::size_t t : c.members) {
      members.push_back({{"object", f.label(t)},
                         {"des", f.des(t).members()},
                         {"alpha", descent_composition(f, t).parts()},
                         {"stat", f.stat(t)},
                         {"dominant", std::find(maxima.begin(), maxima.end(), t) != maxima.end()},
                         {"subordinate", std::find(minima.begin(), minima.end(), t) != minima.end()}});
    }
    if (c.members.size() > 1) ++nontrivial;
    json entry{{"size", c.members.size()}, {"members", members}, {"qsym", qsym_to_json(c.qsym)}};
    const GreedyResult g = greedy_schur_expand(c.qsym);
    if (g.succeeded()) entry["schur"] = schur_to_json(g.expansion);
    classes.push_back(std::move(entry));
  }
  return {{"family", f.name()},
          {"n", f.degree()},
          {"colors", f.colors()},
          {"class_count", classes.size()},
          {"nontrivial_count", nontrivial},
          {"classes", classes}};
}

json dominant_table_to_json(const InvolutionFamily& f, const std::vector<ClassElement>& dominants) {
  json rows = json::array();
  for (const auto& d : dominants)
    rows.push_back({{"class", d.class_index}, {"object", f.label(d.object)}, {"alpha", d.shape.parts()},
                    {"stat", f.stat(d.object)}});
  return rows;
}

json ribbon_report_to_json(const InvolutionFamily& f, const RibbonReport& r) {
  json classes = json::array();
  for (const auto& c : r.classes) {
    json members = json::array();
    for (std::size_t t : c.members) members.push_back(f.label(t));
    json ribbons = json::array();
    for (const auto& nu : c.ribbons) ribbons.push_back(nu.descents().members());
    classes.push_back({{"members", members},
                       {"inv", c.inv},
                       {"first_exceeds_last", c.first_exceeds_last},
                       {"ribbons", ribbons},
                       {"class_expansion", schur_to_json(c.class_expansion)},
                       {"ribbon_expansion", schur_to_json(c.ribbon_expansion)},
                       {"holds", c.holds}});
  }
  json out = report_to_json(r.report, labels_of(f));
  out["classes"] = classes;
  return out;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace deq::io
