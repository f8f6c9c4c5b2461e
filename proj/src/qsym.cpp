#include "deq/qsym.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "deq/tableau.hpp"

namespace deq {

// ---------------------------------------------------------------- QPoly

QPoly QPoly::constant(const Integer& c, std::size_t arity) {
  QPoly p(arity);
  p.add_term(Exponents(arity, 0), c);
  return p;
}

QPoly QPoly::monomial(const Exponents& e, const Integer& c) {
  if (e.empty()) throw std::invalid_argument("q-exponent vector must be nonempty");
  QPoly p(e.size());
  p.add_term(e, c);
  return p;
}

bool QPoly::is_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second >= 0; });
}

void QPoly::check_arity(std::size_t a) const {
  if (a != arity_)
    throw std::invalid_argument("statistic arity mismatch: " + std::to_string(a) + " vs " +
                                std::to_string(arity_));
}

void QPoly::add_term(const Exponents& e, const Integer& c) {
  check_arity(e.size());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (&o == this) return *this *= 2;
  check_arity(o.arity_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (&o == this) return *this *= 0;
  check_arity(o.arity_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QPoly& QPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly p = *this;
  return p *= -1;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  a.check_arity(b.arity_);
  QPoly p(a.arity_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      p.add_term(e, ca * cb);
    }
  return p;
}

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool is_const = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (is_const || mag != 1) out << mag;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      out << "q";
      if (e.size() > 1) out << (k + 1);
      if (e[k] != 1) out << "^" << e[k];
    }
  }
  return out.str();
}

// ---------------------------------------------------------------- QSymExpr

QSymExpr::QSymExpr(int n, std::size_t arity) : n_(n), arity_(arity) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  if (arity < 1) throw std::invalid_argument("statistic arity must be positive");
}

QPoly QSymExpr::coefficient(const DescentSet& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? QPoly(arity_) : it->second;
}

void QSymExpr::add(const DescentSet& d, const QPoly& c) {
  if (d.degree() != n_)
    throw std::invalid_argument("descent set of degree " + std::to_string(d.degree()) +
                                " added to degree " + std::to_string(n_) + " expression");
  if (c.arity() != arity_) throw std::invalid_argument("statistic arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void QSymExpr::add(const DescentSet& d, const Integer& c) { add(d, QPoly::constant(c, arity_)); }

void QSymExpr::check_compatible(const QSymExpr& o) const {
  if (o.n_ != n_) throw std::invalid_argument("degree mismatch");
  if (o.arity_ != arity_) throw std::invalid_argument("statistic arity mismatch");
}

QSymExpr& QSymExpr::operator+=(const QSymExpr& o) {
  if (&o == this) return *this += QSymExpr(o);
  check_compatible(o);
  for (const auto& [d, c] : o.terms_) add(d, c);
  return *this;
}

QSymExpr& QSymExpr::operator-=(const QSymExpr& o) {
  if (&o == this) return *this -= QSymExpr(o);
  check_compatible(o);
  for (const auto& [d, c] : o.terms_) add(d, -c);
  return *this;
}

QSymExpr& QSymExpr::scale(const QPoly& c) {
  if (c.arity() != arity_) throw std::invalid_argument("statistic arity mismatch");
  std::map<DescentSet, QPoly> next;
  for (const auto& [d, p] : terms_) {
    QPoly prod = p * c;
    if (!prod.is_zero()) next.emplace(d, std::move(prod));
  }
  terms_ = std::move(next);
  return *this;
}

std::string to_string(const QSymExpr& e) {
  if (e.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [d, c] : e.terms()) {
    if (!first) out << " + ";
    first = false;
    const std::string coeff = to_string(c);
    if (coeff != "1") out << (c.terms().size() > 1 ? "(" + coeff + ")" : coeff) << "*";
    out << "Q" << to_string(d);
  }
  return out.str();
}

// ---------------------------------------------------------------- SchurExpansion

QPoly SchurExpansion::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? QPoly(arity_) : it->second;
}

void SchurExpansion::add(const Partition& lambda, const QPoly& c) {
  if (lambda.size() != n_)
    throw std::invalid_argument("partition " + to_string(lambda) + " has wrong size for degree " +
                                std::to_string(n_));
  if (c.arity() != arity_) throw std::invalid_argument("statistic arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SchurExpansion::add(const Partition& lambda, const Integer& c) {
  add(lambda, QPoly::constant(c, arity_));
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& o) {
  if (&o == this) return *this += SchurExpansion(o);
  if (o.n_ != n_ || o.arity_ != arity_) throw std::invalid_argument("incompatible Schur expansions");
  for (const auto& [lambda, c] : o.terms_) add(lambda, c);
  return *this;
}

bool SchurExpansion::is_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.is_nonnegative(); });
}

QSymExpr SchurExpansion::to_qsym() const {
  QSymExpr out(n_, arity_);
  for (const auto& [lambda, c] : terms_) {
    QSymExpr s = schur_via_gessel(lambda, std::max(n_, kDefaultTableauBound));
    for (const auto& [d, count] : s.terms()) out.add(d, c * count.terms().begin()->second);
  }
  return out;
}

std::string to_string(const SchurExpansion& s) {
  if (s.terms().empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Largest shapes first, matching the elimination order.
  for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
    if (!first) out << " + ";
    first = false;
    const std::string coeff = to_string(it->second);
    if (coeff != "1") out << (it->second.terms().size() > 1 ? "(" + coeff + ")" : coeff) << "*";
    out << "s" << to_string(it->first);
  }
  return out.str();
}

// ---------------------------------------------------------------- MonomialPoly

QPoly MonomialPoly::coefficient(const std::vector<int>& x_exponents) const {
  auto it = terms_.find(x_exponents);
  return it == terms_.end() ? QPoly(arity_) : it->second;
}

void MonomialPoly::add(const std::vector<int>& x_exponents, const QPoly& c) {
  if (static_cast<int>(x_exponents.size()) != m_) throw std::invalid_argument("variable count mismatch");
  if (c.arity() != arity_) throw std::invalid_argument("statistic arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x_exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MonomialPoly monomial_expand(const QSymExpr& e, int m) {
  if (m < 1) throw std::invalid_argument("variable count must be positive");
  const int n = e.degree();
  MonomialPoly out(m, e.arity());
  std::vector<int> x(m, 0);
  for (const auto& [d, c] : e.terms()) {
    // i_1 <= ... <= i_n with a strict step after every position in d.
    auto rec = [&](auto&& self, int j, int prev) -> void {
      if (j > n) {
        out.add(x, c);
        return;
      }
      const int lo = j == 1 ? 1 : (d.contains(j - 1) ? prev + 1 : prev);
      for (int v = lo; v <= m; ++v) {
        ++x[v - 1];
        self(self, j + 1, v);
        --x[v - 1];
      }
    };
    rec(rec, 1, 1);
  }
  return out;
}

// ---------------------------------------------------------------- Schur functions

QSymExpr schur_via_gessel(const Partition& lambda, int bound) {
  static std::mutex mu;
  static std::map<Partition, QSymExpr> cache;
  if (lambda.size() > bound)
    throw std::length_error("|lambda| = " + std::to_string(lambda.size()) + " exceeds bound " +
                            std::to_string(bound));
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(lambda); it != cache.end()) return it->second;
  }
  QSymExpr s(lambda.size());
  for (const auto& t : enumerate_syt(lambda, bound)) s.add(tableau_descents(t));
  std::lock_guard lock(mu);
  cache.emplace(lambda, s);
  return s;
}

GreedyResult greedy_schur_expand(const QSymExpr& e) {
  const int n = e.degree();
  GreedyResult r{SchurExpansion(n, e.arity()), e};
  for (const auto& lambda : partitions_of(n)) {
    const QPoly c = r.remainder.coefficient(subset_from_composition(lambda.as_composition()));
    if (c.is_zero()) continue;
    r.expansion.add(lambda, c);
    const QSymExpr s = schur_via_gessel(lambda, std::max(n, kDefaultTableauBound));
    for (const auto& [d, count] : s.terms())
      r.remainder.add(d, c * Integer(-count.terms().begin()->second));
  }
  return r;
}

bool is_symmetric(const QSymExpr& e) {
  if (e.is_zero()) return true;
  const int m = e.degree();
  const MonomialPoly p = monomial_expand(e, m);
  for (const auto& [x, c] : p.terms())
    for (int k = 0; k + 1 < m; ++k) {
      if (x[k] == x[k + 1]) continue;
      auto y = x;
      std::swap(y[k], y[k + 1]);
      if (p.coefficient(y) != c) return false;
    }
  return true;
}

PositivityVerdict is_schur_positive(const QSymExpr& e) {
  GreedyResult g = greedy_schur_expand(e);
  PositivityVerdict v{PositivityVerdict::Kind::positive, g.expansion, std::nullopt, g.remainder};
  if (!g.succeeded()) {
    v.kind = PositivityVerdict::Kind::not_symmetric;
    return v;
  }
  for (auto it = g.expansion.terms().rbegin(); it != g.expansion.terms().rend(); ++it) {
    if (!it->second.is_nonnegative()) {
      v.kind = PositivityVerdict::Kind::negative;
      v.witness = it->first;
      break;
    }
  }
  return v;
}

std::string to_string(PositivityVerdict::Kind k) {
  switch (k) {
    case PositivityVerdict::Kind::positive: return "positive";
    case PositivityVerdict::Kind::negative: return "negative";
    case PositivityVerdict::Kind::not_symmetric: return "not_symmetric";
  }
  return "unknown";
}

}  // namespace deq
