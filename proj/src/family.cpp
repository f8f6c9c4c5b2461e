#include "deq/family.hpp"

#include <set>
#include <stdexcept>

#include "deq/involutions.hpp"
#include "deq/tableau.hpp"

namespace deq {

InvolutionFamily::InvolutionFamily(int n, std::vector<Object> objects,
                                   std::map<int, std::vector<std::size_t>> partners,
                                   std::string name)
    : n_(n), name_(std::move(name)), objects_(std::move(objects)) {
  if (n < 1) throw std::invalid_argument("family degree must be positive");
  const std::size_t count = objects_.size();

  bool any_stat = false;
  for (const auto& o : objects_)
    if (!o.stat.empty()) {
      arity_ = o.stat.size();
      any_stat = true;
      break;
    }
  std::size_t words = 0;
  for (std::size_t k = 0; k < count; ++k) {
    auto& o = objects_[k];
    if (!index_.emplace(o.label, k).second)
      throw std::invalid_argument("duplicate object id '" + o.label + "'");
    if (o.des.degree() != n)
      throw std::invalid_argument("object '" + o.label + "' has descent degree " +
                                  std::to_string(o.des.degree()) + ", expected " + std::to_string(n));
    if (o.stat.empty()) o.stat.assign(arity_, 0);
    if (any_stat && o.stat.size() != arity_)
      throw std::invalid_argument("object '" + o.label + "' has statistic of arity " +
                                  std::to_string(o.stat.size()) + ", expected " +
                                  std::to_string(arity_));
    if (o.word) {
      if (o.word->size() != n)
        throw std::invalid_argument("object '" + o.label + "' has a reading word of wrong length");
      ++words;
    }
  }
  if (words != 0 && words != count)
    throw std::invalid_argument("reading words must be given for all objects or none");
  has_words_ = count > 0 && words == count;

  partners_.assign(std::max(n - 2, 0), {});
  for (int i = 2; i <= n - 1; ++i) {
    auto& table = partners_[i - 2];
    auto it = partners.find(i);
    if (it == partners.end()) {
      table.resize(count);
      for (std::size_t k = 0; k < count; ++k) table[k] = k;
      continue;
    }
    table = std::move(it->second);
    if (table.size() != count)
      throw std::invalid_argument("involution " + std::to_string(i) + " has wrong table size");
    for (std::size_t k = 0; k < count; ++k) {
      if (table[k] >= count)
        throw std::invalid_argument("involution " + std::to_string(i) + " leaves the object set at '" +
                                    objects_[k].label + "'");
    }
    for (std::size_t k = 0; k < count; ++k)
      if (table[table[k]] != k)
        throw std::invalid_argument("map " + std::to_string(i) + " is not an involution at '" +
                                    objects_[k].label + "'");
  }
  for (const auto& [i, table] : partners)
    if (i < 2 || i > n - 1)
      throw std::invalid_argument("involution index " + std::to_string(i) + " outside [2, " +
                                  std::to_string(n - 1) + "]");
}

std::optional<std::size_t> InvolutionFamily::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> InvolutionFamily::colors() const {
  std::vector<int> c;
  for (int i = 2; i <= n_ - 1; ++i) c.push_back(i);
  return c;
}

namespace {

Exponents stat_of(StatKind kind, const Permutation& w) {
  if (kind == StatKind::inversions) return {static_cast<int>(inversions(w))};
  return {0};
}

DescentSet des_of(DescentConvention c, const Permutation& w) {
  return c == DescentConvention::inverse ? inverse_descent_set(w) : descent_set(w);
}

InvolutionFamily permutation_family(const FamilySpec& spec) {
  const int bound = spec.bound > 0 ? spec.bound : kDefaultPermutationBound;
  if (spec.n < 1) throw std::invalid_argument("permutation degree must be positive");
  if (spec.n > bound)
    throw std::length_error("n = " + std::to_string(spec.n) + " exceeds permutation bound " +
                            std::to_string(bound));
  const auto perms = permutations_of(spec.n);
  std::map<Permutation, std::size_t> index;
  std::vector<InvolutionFamily::Object> objects;
  for (std::size_t k = 0; k < perms.size(); ++k) {
    index.emplace(perms[k], k);
    objects.push_back({to_string(perms[k]), des_of(spec.convention, perms[k]),
                       stat_of(spec.stat, perms[k]), perms[k]});
  }
  std::map<int, std::vector<std::size_t>> partners;
  for (int i = 2; i <= spec.n - 1; ++i) {
    auto& table = partners[i];
    for (const auto& w : perms) {
      Permutation image;
      switch (spec.involution) {
        case InvolutionKind::haiman: image = haiman_d(i, w); break;
        case InvolutionKind::twisted: image = twisted_d(i, w); break;
        case InvolutionKind::hybrid: image = hybrid_phi(i, w); break;
      }
      table.push_back(index.at(image));
    }
  }
  return InvolutionFamily(spec.n, std::move(objects), std::move(partners),
                          to_string(spec.involution) + "-perm(" + std::to_string(spec.n) + ")");
}

InvolutionFamily tableau_family(const FamilySpec& spec) {
  if (spec.involution != InvolutionKind::haiman)
    throw std::invalid_argument("tableau families support only Haiman's involutions");
  const int bound = spec.bound > 0 ? spec.bound : kDefaultTableauBound;
  const int n = spec.shape ? spec.shape->size() : spec.n;
  if (n < 1) throw std::invalid_argument("tableau size must be positive");
  if (spec.shape && spec.n != 0 && spec.n != n)
    throw std::invalid_argument("shape size does not match n");
  const auto tableaux = spec.shape ? enumerate_syt(*spec.shape, bound) : enumerate_syt(n, bound);

  std::map<StandardYoungTableau, std::size_t> index;
  std::vector<InvolutionFamily::Object> objects;
  for (std::size_t k = 0; k < tableaux.size(); ++k) {
    index.emplace(tableaux[k], k);
    const Permutation w = reading_word(tableaux[k]);
    objects.push_back({to_string(tableaux[k]), tableau_descents(tableaux[k]), stat_of(spec.stat, w), w});
  }
  std::map<int, std::vector<std::size_t>> partners;
  for (int i = 2; i <= n - 1; ++i)
    for (const auto& t : tableaux) partners[i].push_back(index.at(lift_to_tableaux(i, t)));
  const std::string arg = spec.shape ? to_string(*spec.shape) : std::to_string(n);
  return InvolutionFamily(n, std::move(objects), std::move(partners), "haiman-syt(" + arg + ")");
}

}  // namespace

InvolutionFamily family_of(const FamilySpec& spec) {
  return spec.objects == ObjectKind::permutation ? permutation_family(spec) : tableau_family(spec);
}

InvolutionFamily disjoint_union(const InvolutionFamily& a, const InvolutionFamily& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("disjoint union of different degrees");
  std::vector<InvolutionFamily::Object> objects;
  for (std::size_t k = 0; k < a.size(); ++k) objects.push_back(a.object(k));
  for (std::size_t k = 0; k < b.size(); ++k) objects.push_back(b.object(k));
  if (a.has_reading_words() != b.has_reading_words())
    for (auto& o : objects) o.word.reset();
  std::map<int, std::vector<std::size_t>> partners;
  for (int i : a.colors()) {
    auto& table = partners[i];
    for (std::size_t k = 0; k < a.size(); ++k) table.push_back(a.apply(i, k));
    for (std::size_t k = 0; k < b.size(); ++k) table.push_back(a.size() + b.apply(i, k));
  }
  return InvolutionFamily(a.degree(), std::move(objects), std::move(partners),
                          a.name() + "+" + b.name());
}

QSymExpr qsym_of(const InvolutionFamily& f, std::span<const std::size_t> members) {
  QSymExpr e(f.degree(), f.stat_arity());
  for (std::size_t t : members) e.add(f.des(t), QPoly::monomial(f.stat(t)));
  return e;
}

QSymExpr qsym_from_family(const InvolutionFamily& f) {
  std::vector<std::size_t> all(f.size());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  return qsym_of(f, all);
}

std::string to_string(InvolutionKind k) {
  switch (k) {
    case InvolutionKind::haiman: return "haiman";
    case InvolutionKind::twisted: return "twisted";
    case InvolutionKind::hybrid: return "hybrid";
  }
  return "unknown";
}

std::string to_string(ObjectKind k) { return k == ObjectKind::permutation ? "perm" : "syt"; }

}  // namespace deq
