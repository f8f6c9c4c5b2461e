#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "deq/family.hpp"
#include "deq/graph.hpp"

namespace deq {

/// One replayable violation. `objects` and `indices` are enough to re-run
/// the rule locally; their meaning depends on the rule:
///
///   i, ii, iii, a, b, stat      objects {T}         indices {i}
///   iv, c                       objects {T}         indices {i, j}
///   v                           objects {T, S}      indices {h, i}
///   ax1                         objects {T}         indices {i}
///   ax2, ax3                    objects {T, S}      indices {i}
///   ax4                         objects {T}         indices {i, colors}   (colors = 2 or 3)
///   ax5                         objects {T, S, R}   indices {i, j}
///   ax6                         objects {T, S}      indices {i}
///   dgraph                      objects {w}         indices {i}
///   d                           objects {T}         indices {colors of the window...}
struct Witness {
  std::string rule;
  std::vector<std::size_t> objects;
  std::vector<int> indices;
  std::string detail;
};

struct VerificationReport {
  std::string check;
  std::vector<std::pair<std::string, std::string>> settings;
  /// Stored witnesses, at most CheckOptions::max_witnesses per rule.
  std::vector<Witness> failures;
  /// Total violations per rule, including those not stored.
  std::map<std::string, std::size_t> failure_counts;

  bool passed() const { return failure_counts.empty(); }
  bool failed_rule(const std::string& rule) const { return failure_counts.count(rule) > 0; }
};

/// Which (h, i) pairs the minimality condition inspects: h in {2, i-2} or
/// every 2 <= h <= i.
enum class MinimalityScope { reduced, full };

/// Letter window for local Schur positivity. `padded` widens the involution
/// index set J to {min J - 1, ..., max J + 1}; `literal` uses J itself.
enum class WindowMode { padded, literal };

struct CheckOptions {
  MinimalityScope minimality = MinimalityScope::reduced;
  WindowMode window = WindowMode::padded;
  /// Descent convention applied to standardized reading subwords.
  DescentConvention reading_convention = DescentConvention::inverse;
  std::size_t max_witnesses = 25;
};

/// Fixed points, descent flips, equality, commutativity and minimality.
VerificationReport check_dual_equivalence(const InvolutionFamily& f, const CheckOptions& opts = {});

/// Axioms ax1 to ax6 of a dual equivalence graph.
VerificationReport check_deg_axioms(const SignedColoredGraph& g, const CheckOptions& opts = {});

/// Restriction, equality, commutativity and local Schur positivity against
/// the family's reading words. Throws std::invalid_argument when the family
/// has none.
VerificationReport check_d_equivalence(const InvolutionFamily& f, const CheckOptions& opts = {});

/// Axioms 1, 2, 3, 5, the two-edge condition and local Schur positivity.
VerificationReport check_d_graph(const SignedColoredGraph& g, const CheckOptions& opts = {});

VerificationReport check_stat_preserved(const InvolutionFamily& f);

/// Re-runs the witness's rule at the recorded objects and indices; true when
/// the violation reproduces.
bool replay(const InvolutionFamily& f, const Witness& w, const CheckOptions& opts = {});
bool replay(const SignedColoredGraph& g, const Witness& w, const CheckOptions& opts = {});

std::string to_string(MinimalityScope s);
std::string to_string(WindowMode w);

}  // namespace deq
