#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "deq/family.hpp"
#include "deq/graph.hpp"
#include "deq/qsym.hpp"
#include "deq/tableau.hpp"
#include "deq/verify.hpp"

namespace deq {

/// Raised when a class lacks the structure a dual equivalence guarantees:
/// no unique dominant or subordinate element, a non-partition shape, or an
/// ill-defined bijection to tableaux.
class ClassStructureError : public std::runtime_error {
public:
  ClassStructureError(std::vector<std::size_t> members, const std::string& what)
      : std::runtime_error(what), members_(std::move(members)) {}
  const std::vector<std::size_t>& members() const { return members_; }

private:
  std::vector<std::size_t> members_;
};

/// alpha(T): the composition of Des(T).
Composition descent_composition(const InvolutionFamily& f, std::size_t obj);

/// beta(T): conjugate of the composition of the complement of Des(T).
/// Throws ClassStructureError when that composition is not a partition.
Partition beta_shape(const InvolutionFamily& f, std::size_t obj);

/// Members whose alpha dominates (resp. is dominated by) every other
/// member's alpha. No uniqueness is asserted.
std::vector<std::size_t> dominance_maxima(const InvolutionFamily& f, const std::vector<std::size_t>& members);
std::vector<std::size_t> dominance_minima(const InvolutionFamily& f, const std::vector<std::size_t>& members);

struct ClassElement {
  std::size_t class_index;  ///< position in enumerate_classes(f)
  std::size_t object;
  Partition shape;          ///< alpha for dominant, beta for subordinate
};

/// One entry per class, in class order. Throws ClassStructureError.
std::vector<ClassElement> dominant_elements(const InvolutionFamily& f);
std::vector<ClassElement> subordinate_elements(const InvolutionFamily& f);

/// sum over dominant T of q^stat(T) s_alpha(T).
SchurExpansion schur_expansion_via_dominant(const InvolutionFamily& f);

/// Dominant element goes to the superstandard tableau of its shape, and each
/// edge of color i is mirrored by Haiman's d_i on tableaux. Throws
/// ClassStructureError on path dependence, non-bijectivity or a descent
/// mismatch.
std::map<std::size_t, StandardYoungTableau> class_bijection_to_syt(const InvolutionFamily& f,
                                                                   const std::vector<std::size_t>& members);

struct RibbonClassResult {
  std::vector<std::size_t> members;
  long long inv = 0;
  bool first_exceeds_last = false;
  std::vector<Ribbon> ribbons;
  SchurExpansion class_expansion;
  SchurExpansion ribbon_expansion;
  bool holds = false;
};

struct RibbonReport {
  VerificationReport report;
  std::vector<RibbonClassResult> classes;
  bool passed() const { return report.passed(); }
};

/// Compares each class's fundamental sum with the ribbon Schur functions of
/// the ribbons picked out by (inv, w_1 > w_n). Needs reading words; failures
/// carry rule id "ribbon" and the class's first member.
RibbonReport ribbon_check(const InvolutionFamily& f);

/// Recomputes the ribbon comparison for the class containing obj; true when
/// it fails.
bool ribbon_class_fails(const InvolutionFamily& f, std::size_t obj);

}  // namespace deq
