#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "deq/expansion.hpp"
#include "deq/family.hpp"
#include "deq/graph.hpp"
#include "deq/qsym.hpp"
#include "deq/verify.hpp"

namespace deq::io {

using json = nlohmann::json;

/// Malformed or inconsistent input document.
class FormatError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Custom family document:
///   {"n": 4, "objects": ["a", ...], "des": {"a": [2], ...},
///    "stat": {"a": [0], ...}, "words": {"a": [2,1,3,4], ...},
///    "involutions": {"2": {"a": "b", "b": "a"}, ...}}
/// "stat" and "words" are optional; partners left out are fixed points.
/// Everything is validated before the family is returned.
InvolutionFamily family_from_json(const json& doc);
json family_to_json(const InvolutionFamily& f);

/// {"n": 3, "terms": [{"descents": [1], "coeff": [{"exponents": [0], "value": 1}]}]}
/// Values may be integers or decimal strings (for large coefficients).
QSymExpr qsym_from_json(const json& doc);
json qsym_to_json(const QSymExpr& e);

/// Same layout as QSym with "partition" in place of "descents"; terms are
/// listed from the largest partition down.
json schur_to_json(const SchurExpansion& s);
SchurExpansion schur_from_json(const json& doc);

json verdict_to_json(const PositivityVerdict& v);

/// Witness objects are rendered through `labels`.
json report_to_json(const VerificationReport& r, const std::vector<std::string>& labels);

/// Classes under all colors with members, descents, alpha and
/// dominant/subordinate flags.
json classes_to_json(const InvolutionFamily& f);

json dominant_table_to_json(const InvolutionFamily& f, const std::vector<ClassElement>& dominants);

json ribbon_report_to_json(const InvolutionFamily& f, const RibbonReport& r);

std::vector<std::string> labels_of(const InvolutionFamily& f);

/// Two-space indented dump with a trailing newline; key order is sorted.
std::string dump(const json& doc);

json parse_file(const std::string& path);

}  // namespace deq::io
