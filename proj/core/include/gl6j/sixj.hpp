#pragma once

#include "gl6j/seminv.hpp"

#include <array>
#include <map>
#include <vector>

namespace gl6j {

// The fixed pairing of the six variable families between the four factors.
// Family j links a derivative-role factor with a variable-role factor:
//   A1: f1 d / f4 v   A2: f1 d / f3 v   A3: f2 d / f3 v
//   A4: f2 d / f1 v   A5: f4 d / f2 v   A6: f3 d / f4 v
// Slot letters map per factor as
//   f1: a->A1 b->A2 c->A4,  f2: a->A4 b->A3 c->A5,
//   f3: a->A2 b->A3 c->A6,  f4: a->A1 b->A6 c->A5.
struct FamilyRole {
  int family = 0;
  bool derivative = false;
};

FamilyRole family_slot(int factor, Letter letter); // factor 0..3

struct FamilySides {
  int deriv = 0;
  int var = 0;
};

FamilySides family_sides(int family); // family 1..6

// Representation labels, in the conventional order
//   V1 = a(f1), V2 = b(f1), V3 = b(f2), U = c(f1), W = c(f2), H = c(f3).
std::array<std::pair<std::string, Weight>, 6>
representation_weights(const std::array<std::array<Weight, 3>, 4> &lw);

struct SixJProblem {
  int n = 0;
  std::array<BracketSpec, 4> specs;
  std::array<Expansion, 4> expansions;
  std::array<std::array<Weight, 3>, 4> letter_weights;
  std::vector<std::string> warnings; // paired-slot weight mismatches
};

// Expands all four specs and checks that paired slots carry identical
// upper-index multiplicity patterns; mismatches are warnings (the value is
// then 0), not errors.
SixJProblem build_problem(int n, const std::array<BracketSpec, 4> &specs);

// One support point of one factor's Z polynomial, with its exponents pushed
// through the letter -> family substitution.
struct SupportPoint {
  Monomial zmono;
  Rat coeff; // z^x / x! as collected in the Z polynomial
  // famexp[j] for j = 1..6: exponent map over family-j variables
  std::array<std::map<Variable, int>, 7> famexp;
};

struct SelectionSet {
  std::array<std::vector<SupportPoint>, 4> supports;
  // indexes into the four support vectors; deterministic order
  std::vector<std::array<int, 4>> quadruples;
};

// Filtered product of the four supports: a quadruple survives iff every
// family variable has equal total exponent on its derivative and variable
// sides. Equals the shifted lattice H ∩ pr^{-1}(D).
SelectionSet selection_set(const SixJProblem &p);

// Closed form: sum over the selection set of
//   (multi-index factorial of the family exponents, each family variable
//    counted once) * product of the four Z-polynomial coefficients.
// threads > 1 splits the quadruple list into fixed chunks whose exact
// partial sums are combined in order, so the result is identical to the
// sequential one.
Rat sixj_value(const SixJProblem &p);
Rat sixj_value(const SixJProblem &p, const SelectionSet &sel,
               int threads = 1);

// Factor i's expansion written in its family variables (letters replaced
// per the slot table).
SparsePoly family_polynomial(const SixJProblem &p, int factor);

// The raw four-fold contraction of explicit family polynomials: derivative
// sides against variable sides, family by family, with apolar pairing
// kernels. Exposed for experiments with perturbed factors.
Rat contract_families(const std::array<SparsePoly, 4> &f);

// Independent route: contract_families applied to the four family
// polynomials.
Rat sixj_oracle(const SixJProblem &p);

} // namespace gl6j
