#pragma once

#include "gl6j/glaction.hpp"
#include "gl6j/polyalg.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace gl6j {

// ---- bracket semi-invariant specifications ------------------------------

struct Slot {
  Letter letter = Letter::A;
  int upper = 1;
};

struct Bracket {
  std::vector<Slot> slots; // exactly n slots in a valid spec
};

struct Factor {
  std::vector<Bracket> brackets;
  int power = 1;
};

struct BracketSpec {
  int n = 0;
  std::vector<Factor> factors;

  std::string render() const; // "((a1 a2 a3 b1)(b2 c1 c2 c3))^2"
};

// Empty result means the spec satisfies every invariant; otherwise the
// diagnostics are ordered with the first violation first.
std::vector<std::string> validate(const BracketSpec &spec);

// Per letter, the multiset of upper indexes over the whole spec (powers
// counted), padded with zeros to length n. Index 0 = letter a.
std::array<Weight, 3> infer_weights(const BracketSpec &spec);

// ---- chains -------------------------------------------------------------

// A chain groups, for one letter of one factor, one slot per upper index
// 1..height; its assigned lower indexes form one determinant variable.
struct SlotRef {
  int bracket = 0;
  int pos = 0;
};

struct ChainAssignment {
  // per factor, per letter: chain -> slot of each upper index (1-based by
  // position in the inner vector)
  std::vector<std::array<std::vector<std::vector<SlotRef>>, 3>> factors;
};

ChainAssignment chain_assign(const BracketSpec &spec);

// ---- expansion into Z variables -----------------------------------------

struct ZVarInfo {
  int factor = 0;        // which factor of the spec produced it
  Monomial monomial;     // determinant monomial over letters a,b,c
  std::string id;        // canonical rendering, "[a{1,2}b{3}c{4}]"
  Int z;                 // expansion coefficient
  Variable var;          // the Z variable itself

  ZVarInfo() : var(Variable::zvar(0, "")) {}
};

struct Expansion {
  BracketSpec spec;
  SparsePoly zpoly;               // f as a polynomial in Z variables
  std::vector<ZVarInfo> registry; // canonical order (factor, id)
  std::vector<std::string> warnings;

  const ZVarInfo *find(const Variable &v) const;
};

// Bracket antisymmetrization with chain grouping, collected into integer
// z coefficients per factor. Each single-factor expansion is divided by the
// gcd of its coefficients and sign-fixed so the lexicographically smallest
// Z variable has a positive coefficient; powers contribute 1/t!.
Expansion expand(const BracketSpec &spec);

// Z variables substituted back by their determinant monomials.
SparsePoly to_determinant_poly(const Expansion &e);

// ---- support lattice -----------------------------------------------------

// Integer exponent vectors over Z variables; entries may be negative in
// lattice generators.
using ExpVec = std::map<Variable, int>;

ExpVec expvec_of(const Monomial &m);
ExpVec expvec_add(const ExpVec &a, const ExpVec &b);
ExpVec expvec_sub(const ExpVec &a, const ExpVec &b);

struct SupportLattice {
  ExpVec kappa;               // a fixed support point
  std::vector<ExpVec> basis;  // generators of the lattice B
};

// kappa is the identity-permutation assignment of each bracket when that
// monomial survives collection; otherwise the first surviving Z variable of
// the factor. basis holds the differences e_a - e_b within each factor.
SupportLattice support_lattice(const Expansion &e);

// All points of (kappa + B) inside [0, box] — BFS over the generators,
// staying inside the box.
std::vector<ExpVec> lattice_points_in_box(const SupportLattice &lat,
                                          const ExpVec &box);

} // namespace gl6j
