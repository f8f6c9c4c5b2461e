// Command-line front end: verify, classes, schur, ribbon-check.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "deq/expansion.hpp"
#include "deq/io.hpp"
#include "deq/verify.hpp"

namespace {

using deq::io::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FamilyOptions {
  std::string objects = "perm";
  std::string family = "haiman";
  int n = 0;
  std::string shape;
  std::string custom;
  std::string stat = "none";
  bool direct_descents = false;
  int max_n = 0;
};

struct Output {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
  }
};

void add_family_options(CLI::App* cmd, FamilyOptions& o) {
  cmd->add_option("--objects", o.objects, "Object kind")->check(CLI::IsMember({"perm", "syt"}));
  cmd->add_option("--family", o.family, "Involution family")
      ->check(CLI::IsMember({"haiman", "twisted", "hybrid", "custom"}));
  cmd->add_option("--n", o.n, "Degree");
  cmd->add_option("--shape", o.shape, "Tableau shape, e.g. 3,2,1 (syt only)");
  cmd->add_option("--custom", o.custom, "Custom family JSON file (with --family custom)");
  cmd->add_option("--stat", o.stat, "Statistic on reading words")->check(CLI::IsMember({"none", "inv"}));
  cmd->add_flag("--direct-descents", o.direct_descents,
                "Use descents of the permutation instead of its inverse (perm only)");
  cmd->add_option("--max-n", o.max_n, "Raise the size bound (perm default 8, syt default 10)");
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("'" + text + "' is not a comma-separated list of integers");
    }
  }
  return out;
}

deq::InvolutionFamily load_family(const FamilyOptions& o) {
  if (o.family == "custom") {
    if (o.custom.empty()) throw UsageError("--family custom needs --custom FILE");
    return deq::io::family_from_json(deq::io::parse_file(o.custom));
  }
  if (!o.custom.empty()) throw UsageError("--custom is only valid with --family custom");

  deq::FamilySpec spec;
  spec.objects = o.objects == "syt" ? deq::ObjectKind::tableau : deq::ObjectKind::permutation;
  spec.involution = o.family == "twisted" ? deq::InvolutionKind::twisted
                    : o.family == "hybrid" ? deq::InvolutionKind::hybrid
                                           : deq::InvolutionKind::haiman;
  spec.n = o.n;
  spec.stat = o.stat == "inv" ? deq::StatKind::inversions : deq::StatKind::none;
  spec.convention = o.direct_descents ? deq::DescentConvention::direct : deq::DescentConvention::inverse;
  if (!o.shape.empty()) {
    if (spec.objects != deq::ObjectKind::tableau) throw UsageError("--shape requires --objects syt");
    try {
      spec.shape = deq::Partition(parse_int_list(o.shape));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("bad --shape: ") + e.what());
    }
  }
  if (!spec.shape && spec.n < 1) throw UsageError("--n is required");
  if (o.max_n > 0) {
    std::cerr << "warning: --max-n " << o.max_n << " overrides the default size bound; runs may be slow\n";
    spec.bound = o.max_n;
  }
  return deq::family_of(spec);
}

deq::CheckOptions check_options(bool full_minimality, bool literal_window) {
  deq::CheckOptions opts;
  opts.minimality = full_minimality ? deq::MinimalityScope::full : deq::MinimalityScope::reduced;
  opts.window = literal_window ? deq::WindowMode::literal : deq::WindowMode::padded;
  return opts;
}

void report_failures(const deq::VerificationReport& r) {
  if (r.passed()) return;
  std::cerr << r.check << ": FAIL";
  for (const auto& [rule, count] : r.failure_counts) std::cerr << " (" << rule << ": " << count << ")";
  std::cerr << "\n";
  if (!r.failures.empty()) std::cerr << "  first witness [" << r.failures.front().rule << "] " << r.failures.front().detail << "\n";
}

int run_verify(const FamilyOptions& fo, const std::string& mode, const deq::CheckOptions& opts, const Output& out) {
  const auto f = load_family(fo);
  const auto labels = deq::io::labels_of(f);
  deq::VerificationReport r;
  if (mode == "dual") {
    r = deq::check_dual_equivalence(f, opts);
  } else if (mode == "deg") {
    r = deq::check_deg_axioms(deq::build_graph(f), opts);
  } else if (mode == "d-equiv") {
    if (!f.has_reading_words()) throw UsageError("--mode d-equiv needs reading words for every object");
    r = deq::check_d_equivalence(f, opts);
  } else if (mode == "d-graph") {
    r = deq::check_d_graph(deq::build_graph(f), opts);
  } else {
    r = deq::check_stat_preserved(f);
  }
  json doc = deq::io::report_to_json(r, labels);
  doc["family"] = f.name();
  out.write(deq::io::dump(doc));
  report_failures(r);
  return r.passed() ? kPass : kFail;
}

deq::SignedColoredGraph restrict_colors(const deq::SignedColoredGraph& g, const std::vector<int>& colors) {
  std::vector<std::vector<int>> signs;
  for (std::size_t v = 0; v < g.size(); ++v) signs.push_back(g.signs(v));
  std::map<int, std::vector<deq::VertexPair>> edges;
  for (int i : colors) edges[i] = g.edges(i);
  return deq::SignedColoredGraph(g.degree(), g.labels(), std::move(signs), std::move(edges));
}

int run_classes(const FamilyOptions& fo, const std::string& format, const std::string& colors_text,
                const Output& out) {
  const auto f = load_family(fo);
  std::vector<int> colors = f.colors();
  if (!colors_text.empty()) colors = parse_int_list(colors_text);
  for (int i : colors)
    if (i < 2 || i > f.degree() - 1)
      throw UsageError("color " + std::to_string(i) + " outside [2, " + std::to_string(f.degree() - 1) + "]");

  if (format == "dot") {
    out.write(deq::to_dot(restrict_colors(deq::build_graph(f), colors), f.name()));
    return kPass;
  }
  json doc;
  if (colors_text.empty()) {
    doc = deq::io::classes_to_json(f);
  } else {
    // Restricting the colors changes the classes; rebuild the family with
    // only those involutions so the listing matches.
    std::vector<deq::InvolutionFamily::Object> objects;
    for (std::size_t t = 0; t < f.size(); ++t) objects.push_back(f.object(t));
    std::map<int, std::vector<std::size_t>> partners;
    for (int i : colors)
      for (std::size_t t = 0; t < f.size(); ++t) partners[i].push_back(f.apply(i, t));
    const deq::InvolutionFamily sub(f.degree(), std::move(objects), std::move(partners), f.name());
    doc = deq::io::classes_to_json(sub);
    doc["colors"] = colors;
  }
  out.write(deq::io::dump(doc));
  return kPass;
}

int run_schur(const FamilyOptions& fo, const std::string& qsym_file, const Output& out) {
  if (!qsym_file.empty()) {
    const auto e = deq::io::qsym_from_json(deq::io::parse_file(qsym_file));
    const auto v = deq::is_schur_positive(e);
    json doc = deq::io::verdict_to_json(v);
    doc["input"] = deq::io::qsym_to_json(e);
    out.write(deq::io::dump(doc));
    if (v.kind == deq::PositivityVerdict::Kind::not_symmetric) {
      std::cerr << "input is not symmetric; remainder " << deq::to_string(v.remainder) << "\n";
      return kFail;
    }
    return kPass;
  }

  const auto f = load_family(fo);
  const auto e = deq::qsym_from_family(f);
  const auto v = deq::is_schur_positive(e);
  json doc = deq::io::verdict_to_json(v);
  doc["family"] = f.name();
  int code = v.kind == deq::PositivityVerdict::Kind::not_symmetric ? kFail : kPass;
  try {
    const auto dominants = deq::dominant_elements(f);
    doc["dominant"] = deq::io::dominant_table_to_json(f, dominants);
    const auto via = deq::schur_expansion_via_dominant(f);
    doc["via_dominant"] = deq::io::schur_to_json(via);
    doc["via_dominant_agrees"] = via == v.expansion;
  } catch (const deq::ClassStructureError& err) {
    doc["dominant_error"] = err.what();
    std::cerr << "dominant elements: " << err.what() << "\n";
    code = kFail;
  }
  out.write(deq::io::dump(doc));
  return code;
}

int run_ribbon(const FamilyOptions& fo, const Output& out) {
  FamilyOptions o = fo;
  o.objects = "perm";
  o.family = "twisted";
  const auto f = load_family(o);
  const auto r = deq::ribbon_check(f);
  out.write(deq::io::dump(deq::io::ribbon_report_to_json(f, r)));
  report_failures(r.report);
  return r.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual equivalence checker"};
  app.require_subcommand(1);

  FamilyOptions fo;
  Output out;
  std::string mode = "dual";
  bool full_minimality = false;
  bool literal_window = false;
  std::size_t max_witnesses = 25;
  std::string format = "json";
  std::string colors;
  std::string qsym_file;

  auto* verify = app.add_subcommand("verify", "Check an axiom system on a family");
  add_family_options(verify, fo);
  verify->add_option("--mode", mode, "dual | deg | d-equiv | d-graph | stat")
      ->check(CLI::IsMember({"dual", "deg", "d-equiv", "d-graph", "stat"}));
  verify->add_flag("--full-minimality", full_minimality, "Check minimality for every 2 <= h <= i");
  verify->add_flag("--literal-window", literal_window, "Local positivity on the literal index window");
  verify->add_option("--max-witnesses", max_witnesses, "Witnesses stored per rule");
  verify->add_option("--output,-o", out.path, "Write the report here instead of stdout");

  auto* classes = app.add_subcommand("classes", "List equivalence classes or export the graph");
  add_family_options(classes, fo);
  classes->add_option("--format", format, "json | dot")->check(CLI::IsMember({"json", "dot"}));
  classes->add_option("--colors", colors, "Comma-separated colors (default: all)");
  classes->add_option("--output,-o", out.path, "Write here instead of stdout");

  auto* schur = app.add_subcommand("schur", "Schur expansion of a family or a QSym file");
  add_family_options(schur, fo);
  schur->add_option("--qsym", qsym_file, "QSym JSON file");
  schur->add_option("--output,-o", out.path, "Write here instead of stdout");

  auto* ribbon = app.add_subcommand("ribbon-check", "Ribbon identity for the twisted family on S_n");
  ribbon->add_option("--n", fo.n, "Degree")->required();
  ribbon->add_option("--max-n", fo.max_n, "Raise the size bound");
  ribbon->add_option("--output,-o", out.path, "Write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    auto opts = check_options(full_minimality, literal_window);
    opts.max_witnesses = max_witnesses;
    if (*verify) return run_verify(fo, mode, opts, out);
    if (*classes) return run_classes(fo, format, colors, out);
    if (*schur) return run_schur(fo, qsym_file, out);
    return run_ribbon(fo, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const deq::io::FormatError& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << " (use --max-n to raise it)\n";
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kUsage;
}
