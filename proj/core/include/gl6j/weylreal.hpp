#pragma once

#include "gl6j/glaction.hpp"
#include "gl6j/polyalg.hpp"

#include <stdexcept>

namespace gl6j {

// Tableau of a non-negative weakly decreasing weight: row r has length
// weight[r-1] and is filled with the entry r.
struct YoungTableau {
  Weight weight;

  explicit YoungTableau(Weight w); // validates shape
  int rows() const;
  int row_length(int r) const;    // 1-based
  int column_height(int c) const; // 1-based, conjugate partition
};

// The k x k determinant with rows 1..k and columns X, as a signed sum of
// k! matrix-element monomials.
SparsePoly expand_determinant(Symbol sym, const IndexSet &cols);

// v0 = x_{1}^{m1-m2} x_{1,2}^{m2-m3} ... x_{1..n}^{mn} over determinant
// variables.
SparsePoly highest_vector(Symbol sym, const Weight &weight);

// Young symmetrizer applied to the upper indexes of a single-symbol matrix
// monomial: columns antisymmetrized first, then rows symmetrized. No
// normalization by group orders.
SparsePoly young_overlay(const Monomial &m, const Weight &weight);

// True iff every monomial of p (over determinant variables of one symbol)
// has homogeneous degree m_k - m_{k+1} in size-k variables for every k.
bool membership_check(const SparsePoly &p, const Weight &weight);

// Determinant variables replaced by their matrix-element expansions.
SparsePoly expand_to_matrix(const SparsePoly &det_poly);

struct CollectError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rewrites a single-symbol matrix polynomial as a polynomial in determinant
// variables by repeated leading-term pattern matching. Throws CollectError
// when the input is not a polynomial in determinants.
SparsePoly collect_determinants(const SparsePoly &matrix_poly);

} // namespace gl6j
