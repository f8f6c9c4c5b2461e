#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "deq/combinat.hpp"

namespace deq {

using Integer = boost::multiprecision::cpp_int;

/// Exponent vector of a q-monomial (one entry per statistic coordinate).
using Exponents = std::vector<int>;

/// Polynomial in q = (q_1, ..., q_k) with integer coefficients. The arity k
/// is fixed at construction; mixing arities throws std::invalid_argument.
/// Zero coefficients are never stored.
class QPoly {
public:
  explicit QPoly(std::size_t arity = 1) : arity_(arity) {}

  static QPoly constant(const Integer& c, std::size_t arity = 1);
  /// c * q^e.
  static QPoly monomial(const Exponents& e, const Integer& c = 1);

  std::size_t arity() const { return arity_; }
  const std::map<Exponents, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Every coefficient is >= 0.
  bool is_nonnegative() const;

  void add_term(const Exponents& e, const Integer& c);

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const Integer& c);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const Integer& c) { return a *= c; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const;

  bool operator==(const QPoly& o) const = default;

private:
  void check_arity(std::size_t a) const;

  std::size_t arity_;
  std::map<Exponents, Integer> terms_;
};

std::string to_string(const QPoly& p);

/// A homogeneous degree-n quasisymmetric function in the fundamental basis,
/// sum over D of c_D(q) Q_D.
class QSymExpr {
public:
  explicit QSymExpr(int n = 1, std::size_t arity = 1);

  int degree() const { return n_; }
  std::size_t arity() const { return arity_; }
  const std::map<DescentSet, QPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of Q_D (zero polynomial when absent).
  QPoly coefficient(const DescentSet& d) const;

  void add(const DescentSet& d, const QPoly& c);
  void add(const DescentSet& d, const Integer& c = 1);

  QSymExpr& operator+=(const QSymExpr& o);
  QSymExpr& operator-=(const QSymExpr& o);
  /// Scales by a polynomial in q (product of q-polynomials).
  QSymExpr& scale(const QPoly& c);

  friend QSymExpr operator+(QSymExpr a, const QSymExpr& b) { return a += b; }
  friend QSymExpr operator-(QSymExpr a, const QSymExpr& b) { return a -= b; }

  bool operator==(const QSymExpr& o) const = default;

private:
  void check_compatible(const QSymExpr& o) const;

  int n_;
  std::size_t arity_;
  std::map<DescentSet, QPoly> terms_;
};

std::string to_string(const QSymExpr& e);

/// sum over lambda of c_lambda(q) s_lambda, all |lambda| = n.
class SchurExpansion {
public:
  explicit SchurExpansion(int n = 1, std::size_t arity = 1) : n_(n), arity_(arity) {}

  int degree() const { return n_; }
  std::size_t arity() const { return arity_; }
  const std::map<Partition, QPoly>& terms() const { return terms_; }
  QPoly coefficient(const Partition& lambda) const;

  void add(const Partition& lambda, const QPoly& c);
  void add(const Partition& lambda, const Integer& c = 1);
  SchurExpansion& operator+=(const SchurExpansion& o);

  bool is_nonnegative() const;

  /// Back to the fundamental basis through Gessel's formula.
  QSymExpr to_qsym() const;

  bool operator==(const SchurExpansion& o) const = default;

private:
  int n_;
  std::size_t arity_;
  std::map<Partition, QPoly> terms_;
};

std::string to_string(const SchurExpansion& s);

/// A polynomial in x_1..x_m with q-polynomial coefficients.
class MonomialPoly {
public:
  explicit MonomialPoly(int m = 1, std::size_t arity = 1) : m_(m), arity_(arity) {}

  int variables() const { return m_; }
  std::size_t arity() const { return arity_; }
  const std::map<std::vector<int>, QPoly>& terms() const { return terms_; }
  QPoly coefficient(const std::vector<int>& x_exponents) const;

  void add(const std::vector<int>& x_exponents, const QPoly& c);

  bool operator==(const MonomialPoly& o) const = default;

private:
  int m_;
  std::size_t arity_;
  std::map<std::vector<int>, QPoly> terms_;
};

/// Expands each Q_D into monomials in m variables.
MonomialPoly monomial_expand(const QSymExpr& e, int m);

/// Default cap on |lambda| for tableau enumeration.
inline constexpr int kDefaultTableauBound = 10;

/// s_lambda = sum over SYT(lambda) of Q_Des(T).
QSymExpr schur_via_gessel(const Partition& lambda, int bound = kDefaultTableauBound);

struct GreedyResult {
  SchurExpansion expansion;
  /// Zero exactly when the input was symmetric.
  QSymExpr remainder;

  bool succeeded() const { return remainder.is_zero(); }
};

/// Triangular elimination against the Schur basis, partitions visited in
/// decreasing lexicographic order.
GreedyResult greedy_schur_expand(const QSymExpr& e);

/// Symmetry of the n-variable truncation under adjacent transpositions.
bool is_symmetric(const QSymExpr& e);

struct PositivityVerdict {
  enum class Kind { positive, negative, not_symmetric };
  Kind kind;
  SchurExpansion expansion;
  /// First partition carrying a negative coefficient (negative verdict only).
  std::optional<Partition> witness;
  QSymExpr remainder;

  bool positive() const { return kind == Kind::positive; }
};

PositivityVerdict is_schur_positive(const QSymExpr& e);

std::string to_string(PositivityVerdict::Kind k);

}  // namespace deq
