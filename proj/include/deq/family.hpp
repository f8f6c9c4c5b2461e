#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "deq/combinat.hpp"
#include "deq/qsym.hpp"

namespace deq {

inline constexpr int kDefaultPermutationBound = 8;

/// A finite object set with descents, a statistic and involutions
/// phi_2, ..., phi_{n-1}. Objects are addressed by index in [0, size()).
/// Immutable once constructed; construction validates closure, involutivity
/// and descent degrees and throws std::invalid_argument on violation.
class InvolutionFamily {
public:
  struct Object {
    std::string label;
    DescentSet des;
    Exponents stat;  ///< empty means all-zero of arity 1
    std::optional<Permutation> word;
  };

  /// `partners[i][T]` is phi_i(T); colors missing from the map act as the
  /// identity.
  InvolutionFamily(int n, std::vector<Object> objects,
                   std::map<int, std::vector<std::size_t>> partners, std::string name = "custom");

  int degree() const { return n_; }
  std::size_t size() const { return objects_.size(); }
  const std::string& name() const { return name_; }

  /// phi_i(T); the identity for i outside [2, n-1].
  std::size_t apply(int i, std::size_t obj) const {
    if (i < 2 || i > n_ - 1) return obj;
    return partners_[i - 2][obj];
  }
  bool is_fixed(int i, std::size_t obj) const { return apply(i, obj) == obj; }

  const DescentSet& des(std::size_t obj) const { return objects_[obj].des; }
  const Exponents& stat(std::size_t obj) const { return objects_[obj].stat; }
  std::size_t stat_arity() const { return arity_; }
  const std::string& label(std::size_t obj) const { return objects_[obj].label; }
  const Object& object(std::size_t obj) const { return objects_[obj]; }
  std::optional<std::size_t> find(std::string_view label) const;

  bool has_reading_words() const { return has_words_; }
  const Permutation& reading_word(std::size_t obj) const { return *objects_[obj].word; }

  /// 2, ..., n-1.
  std::vector<int> colors() const;

private:
  int n_;
  std::string name_;
  std::vector<Object> objects_;
  std::vector<std::vector<std::size_t>> partners_;
  std::size_t arity_ = 1;
  bool has_words_ = false;
  std::unordered_map<std::string, std::size_t> index_;
};

enum class ObjectKind { permutation, tableau };
enum class InvolutionKind { haiman, twisted, hybrid };
enum class StatKind { none, inversions };
enum class DescentConvention { inverse, direct };

struct FamilySpec {
  ObjectKind objects = ObjectKind::permutation;
  InvolutionKind involution = InvolutionKind::haiman;
  int n = 0;
  /// Tableau families only: restrict to a single shape.
  std::optional<Partition> shape;
  StatKind stat = StatKind::none;
  DescentConvention convention = DescentConvention::inverse;
  /// Size cap; 0 selects the default for the object kind.
  int bound = 0;
};

/// Builds one of the built-in families. Tableau objects only support
/// Haiman's involutions; the statistic option applies to reading words.
InvolutionFamily family_of(const FamilySpec& spec);

/// Objects of `a` followed by those of `b`; labels must not collide.
InvolutionFamily disjoint_union(const InvolutionFamily& a, const InvolutionFamily& b);

/// sum over T of q^stat(T) Q_Des(T).
QSymExpr qsym_from_family(const InvolutionFamily& f);

/// Same sum restricted to the given objects.
QSymExpr qsym_of(const InvolutionFamily& f, std::span<const std::size_t> members);

std::string to_string(InvolutionKind k);
std::string to_string(ObjectKind k);

}  // namespace deq
