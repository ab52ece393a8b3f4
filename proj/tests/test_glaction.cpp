#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gl6j/glaction.hpp"

#include "helpers.hpp"

#include <random>

using namespace gl6j;

namespace {

SparsePoly detv(int n, std::initializer_list<int> elems, Letter l = Letter::A) {
  return SparsePoly::variable(
      Variable::det(Symbol::plain(l), IndexSet(n, elems)));
}

} // namespace

TEST_CASE("root action substitutes the lower index") {
  SparsePoly A1 = detv(2, {1});
  SparsePoly A2 = detv(2, {2});
  CHECK(act_root(1, 2, A2) == A1);
  CHECK(act_root(1, 2, A1).is_zero());
}

TEST_CASE("root action picks up normalization signs") {
  // E_{3,1} a_{1,2} = a_{3,2} = -a_{2,3}
  SparsePoly a12 = detv(3, {1, 2});
  SparsePoly a23 = detv(3, {2, 3});
  CHECK(act_root(3, 1, a12) == -a23);
  // duplicate index kills the variable: E_{2,1} a_{1,2} = a_{2,2} = 0
  CHECK(act_root(2, 1, a12).is_zero());
}

TEST_CASE("the 2x2 determinant is a lowest-weight direction for E_{2,1}") {
  SparsePoly A1 = detv(2, {1});
  SparsePoly A2 = detv(2, {2});
  SparsePoly B1 = detv(2, {1}, Letter::B);
  SparsePoly B2 = detv(2, {2}, Letter::B);
  SparsePoly det = A1 * B2 - A2 * B1;

  // Term by term: E_{2,1}(A1 B2) = A2 B2 and E_{2,1}(A2 B1) = A2 B2.
  CHECK(act_root(2, 1, A1 * B2) == A2 * B2);
  CHECK(act_root(2, 1, A2 * B1) == A2 * B2);
  CHECK(act_root(2, 1, det).is_zero());
  CHECK(act_root(1, 2, det).is_zero());
}

TEST_CASE("weight_of counts lower indexes") {
  Monomial m = Monomial::of(Variable::det(Symbol::plain(Letter::A),
                                          IndexSet(3, {1, 2})))
                   .times(Variable::det(Symbol::plain(Letter::B),
                                        IndexSet(3, {3})),
                          1);
  CHECK(weight_of(m, 3) == Weight{1, 1, 1});

  Monomial sq = Monomial::of(Variable::det(Symbol::plain(Letter::A),
                                           IndexSet(2, {1})),
                             2);
  CHECK(weight_of(sq, 2) == Weight{2, 0});

  Monomial inv4 = Monomial::of(Variable::det(Symbol::plain(Letter::A),
                                             IndexSet(4, {1, 2, 3})))
                      .times(Variable::det(Symbol::plain(Letter::B),
                                           IndexSet(4, {1, 4})),
                             1)
                      .times(Variable::det(Symbol::plain(Letter::C),
                                           IndexSet(4, {2, 3, 4})),
                             1);
  CHECK(weight_of(inv4, 4) == Weight{2, 2, 2, 2});
}

TEST_CASE("Cartan action is diagonal with the weight as eigenvalue") {
  SparsePoly p = detv(3, {1, 2}) * detv(3, {1}, Letter::B);
  Weight w = weight_of(p.terms().begin()->first, 3);
  for (int i = 1; i <= 3; ++i)
    CHECK(act_root(i, i, p) == p.scaled(Rat(w[i - 1])));
}

TEST_CASE("check_semi_invariant on the 2x2 determinant and its reversal") {
  SparsePoly A1 = detv(2, {1});
  SparsePoly A2 = detv(2, {2});
  SparsePoly B1 = detv(2, {1}, Letter::B);
  SparsePoly B2 = detv(2, {2}, Letter::B);

  SemiInvariance good = check_semi_invariant(A1 * B2 - A2 * B1, 2);
  CHECK(good.is_semi_invariant);
  CHECK(*good.weight == Weight{1, 1});

  SparsePoly bad = A1 * B2 + A2 * B1;
  CHECK(act_root(1, 2, bad) == (A1 * B1).scaled(Rat(2)));
  CHECK(!check_semi_invariant(bad, 2).is_semi_invariant);

  CHECK_THROWS_AS(check_semi_invariant(SparsePoly::zero(), 2),
                  std::invalid_argument);
}

TEST_CASE("act_root is a derivation") {
  std::mt19937_64 rng(211);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + trial % 2;
    SparsePoly p = testutil::random_det_poly(rng, n, 2);
    SparsePoly q = testutil::random_det_poly(rng, n, 2);
    int i = 1 + static_cast<int>(rng() % n);
    int j = 1 + static_cast<int>(rng() % n);
    if (i == j)
      continue;
    CHECK(act_root(i, j, p * q) ==
          act_root(i, j, p) * q + p * act_root(i, j, q));
  }
}

TEST_CASE("pairing transposes the root action without a sign") {
  // <E_{i,j} f, g> = <f, E_{j,i} g> holds identically for the substitution
  // action and the apolar pairing; see also the acceptance suite, which
  // records the stated sign-flipped variant as unattainable.
  std::mt19937_64 rng(223);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + trial % 2;
    SparsePoly f = testutil::random_det_poly(rng, n, 3);
    SparsePoly g = testutil::random_det_poly(rng, n, 3);
    int i = 1 + static_cast<int>(rng() % n);
    int j = 1 + static_cast<int>(rng() % n);
    if (i == j)
      continue;
    Rat lhs = pairing(act_root(i, j, f), g);
    Rat rhs = pairing(f, act_root(j, i, g));
    CHECK(lhs == rhs);
    if (lhs != 0)
      ++checked;
  }
  CHECK(checked > 0); // the identity was exercised on nonzero pairings
}
