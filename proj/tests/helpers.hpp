#pragma once

#include "gl6j/weylreal.hpp"

#include <random>

namespace testutil {

using namespace gl6j;

// Linear extension of the Young overlay to polynomials.
inline SparsePoly overlay_poly(const SparsePoly &p, const Weight &w) {
  SparsePoly out;
  for (const auto &[m, c] : p.terms())
    out = out + young_overlay(m, w).scaled(c);
  return out;
}

// Random sparse polynomial over the determinant variables of one rank,
// with small integer coefficients. Deterministic for a given engine state.
inline SparsePoly random_det_poly(std::mt19937_64 &rng, int n, int maxTerms) {
  std::uniform_int_distribution<int> termCount(1, maxTerms);
  std::uniform_int_distribution<int> letterDist(0, 2);
  std::uniform_int_distribution<int> coeffDist(-3, 3);
  std::uniform_int_distribution<int> varCount(1, 3);
  std::uniform_int_distribution<int> bit(0, 1);

  SparsePoly p;
  int terms = termCount(rng);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int vars = varCount(rng);
    for (int v = 0; v < vars; ++v) {
      std::vector<int> elems;
      for (int k = 1; k <= n; ++k)
        if (bit(rng))
          elems.push_back(k);
      if (elems.empty())
        elems.push_back(1 + (letterDist(rng) % n));
      Letter l = static_cast<Letter>(letterDist(rng));
      m = m.times(Variable::det(Symbol::plain(l), IndexSet(n, elems)), 1);
    }
    int c = coeffDist(rng);
    if (c == 0)
      c = 1;
    p.add_term(m, Rat(c));
  }
  return p;
}

} // namespace testutil
