#pragma once

#include "gl6j/indexcore.hpp"
#include "gl6j/rational.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace gl6j {

// A variable of the sparse polynomial ring. Three universes share one type:
// determinant variables x_X, matrix elements x_i^j, and the formal Z
// variables naming determinant monomials of a bracket expansion.
class Variable {
public:
  enum class Kind : int { Det = 0, Matrix = 1, Z = 2 };

  static Variable det(Symbol sym, IndexSet set);
  static Variable matrix(Symbol sym, int lower, int upper);
  static Variable zvar(int factor, std::string id);

  Kind kind() const { return kind_; }
  const Symbol &symbol() const { return sym_; }
  const IndexSet &set() const;  // Det only
  int lower() const { return lower_; } // Matrix: column index i
  int upper() const { return upper_; } // Matrix: row index j
  int z_factor() const { return z_factor_; }
  const std::string &z_id() const { return z_id_; }

  std::string render() const;

  // Total order. Matrix variables compare by (upper, lower) so that the
  // lex-leading term of a determinant expansion is its diagonal.
  static int compare(const Variable &a, const Variable &b);
  friend bool operator<(const Variable &a, const Variable &b) {
    return compare(a, b) < 0;
  }
  friend bool operator==(const Variable &a, const Variable &b) {
    return compare(a, b) == 0;
  }

private:
  Variable() : set_(1, {1}) {}

  Kind kind_ = Kind::Det;
  Symbol sym_;
  IndexSet set_;
  int lower_ = 0, upper_ = 0;
  int z_factor_ = 0;
  std::string z_id_;
};

// Exponent map with strictly positive entries and deterministic order.
class Monomial {
public:
  Monomial() = default;
  static Monomial one() { return Monomial(); }
  static Monomial of(const Variable &v, int e = 1);

  bool is_one() const { return exps_.empty(); }
  int exponent(const Variable &v) const;
  const std::map<Variable, int> &exponents() const { return exps_; }
  int degree() const;

  Monomial times(const Variable &v, int e) const; // e may be negative
  Monomial times(const Monomial &m) const;
  Monomial pow(int e) const;

  // Sub-monomial of the variables satisfying the predicate.
  Monomial filter(const std::function<bool(const Variable &)> &pred) const;

  std::string render() const; // "a{1,2}^2 b{3}", "1" for the empty monomial

  // Lexicographic: scan variables in ascending order; the first variable
  // where exponents differ decides, larger exponent meaning larger monomial.
  static int compare(const Monomial &a, const Monomial &b);
  friend bool operator<(const Monomial &a, const Monomial &b) {
    return compare(a, b) < 0;
  }
  friend bool operator==(const Monomial &a, const Monomial &b) {
    return compare(a, b) == 0;
  }

private:
  std::map<Variable, int> exps_;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Immutable value semantics; no zero coefficients are stored.
class SparsePoly {
public:
  SparsePoly() = default;
  static SparsePoly zero() { return SparsePoly(); }
  static SparsePoly constant(const Rat &c);
  static SparsePoly term(const Monomial &m, const Rat &c);
  static SparsePoly variable(const Variable &v);

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rat> &terms() const { return terms_; }
  Rat coefficient(const Monomial &m) const;
  Rat constant_term() const { return coefficient(Monomial::one()); }
  const Monomial &leading_monomial() const; // max in monomial order

  SparsePoly operator+(const SparsePoly &o) const;
  SparsePoly operator-(const SparsePoly &o) const;
  SparsePoly operator*(const SparsePoly &o) const;
  SparsePoly operator-() const;
  SparsePoly scaled(const Rat &c) const;
  SparsePoly pow(int e) const;

  // Replaces every variable by image(v); used for Z -> determinant monomial
  // and letter -> 6j family substitutions.
  SparsePoly substituted(
      const std::function<SparsePoly(const Variable &)> &image) const;

  void add_term(const Monomial &m, const Rat &c); // builder use only

  std::string render() const; // leading term first, "p/q" coefficients

  friend bool operator==(const SparsePoly &a, const SparsePoly &b) {
    return a.terms_ == b.terms_;
  }

private:
  std::map<Monomial, Rat> terms_;
};

// f(d/dA) applied to g: every variable of f acts as the partial-derivative
// operator in that variable.
SparsePoly apply_diff(const SparsePoly &f, const SparsePoly &g);

// Apolar pairing <f,g> = f(d/dA) g |_{A=0}. Production path: the closed
// form sum over common monomials of c_f * c_g * m! (multi-index factorial).
Rat pairing(const SparsePoly &f, const SparsePoly &g);

// Same value computed through apply_diff; kept as an independent route for
// self-checks.
Rat pairing_by_operator(const SparsePoly &f, const SparsePoly &g);

} // namespace gl6j
