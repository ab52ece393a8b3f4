#pragma once

#include "gl6j/polyalg.hpp"

#include <optional>
#include <vector>

namespace gl6j {

// Cartan eigenvalues (E_{1,1}, ..., E_{n,n}).
using Weight = std::vector<int>;

std::string render_weight(const Weight &w); // "[1,1,0,0]"

// E_{i,j} applied to a polynomial over determinant or matrix variables:
// the substitution j -> i on lower indexes of each variable, extended by
// the Leibnitz rule, with signs from re-normalizing index sets. For i == j
// this is the diagonal action (each monomial scaled by its i-count).
SparsePoly act_root(int i, int j, const SparsePoly &p);

// Component i = occurrences of lower index i, counted with exponents.
Weight weight_of(const Monomial &m, int n);

struct SemiInvariance {
  bool is_semi_invariant = false;
  std::optional<Weight> weight;
};

// True iff all E_{i,j}, i != j, annihilate p and every monomial has the
// same weight. All n(n-1) root pairs are swept, not only simple roots.
SemiInvariance check_semi_invariant(const SparsePoly &p, int n);

} // namespace gl6j
