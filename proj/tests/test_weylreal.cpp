#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gl6j/weylreal.hpp"

#include "helpers.hpp"

using namespace gl6j;

namespace {

Variable mat(Letter l, int lower, int upper) {
  return Variable::matrix(Symbol::plain(l), lower, upper);
}

Variable deta(int n, std::initializer_list<int> elems) {
  return Variable::det(Symbol::plain(Letter::A), IndexSet(n, elems));
}

} // namespace

TEST_CASE("determinant expansion") {
  Symbol a = Symbol::plain(Letter::A);

  SparsePoly d1 = expand_determinant(a, IndexSet(2, {1}));
  CHECK(d1 == SparsePoly::variable(mat(Letter::A, 1, 1)));

  SparsePoly d12 = expand_determinant(a, IndexSet(2, {1, 2}));
  SparsePoly expected =
      SparsePoly::term(Monomial::of(mat(Letter::A, 1, 1)).times(
                           mat(Letter::A, 2, 2), 1),
                       Rat(1)) +
      SparsePoly::term(Monomial::of(mat(Letter::A, 2, 1)).times(
                           mat(Letter::A, 1, 2), 1),
                       Rat(-1));
  CHECK(d12 == expected);

  SparsePoly d23 = expand_determinant(a, IndexSet(3, {2, 3}));
  SparsePoly expected23 =
      SparsePoly::term(Monomial::of(mat(Letter::A, 2, 1)).times(
                           mat(Letter::A, 3, 2), 1),
                       Rat(1)) +
      SparsePoly::term(Monomial::of(mat(Letter::A, 3, 1)).times(
                           mat(Letter::A, 2, 2), 1),
                       Rat(-1));
  CHECK(d23 == expected23);
}

TEST_CASE("young overlay of the three-letter example") {
  // a1^1 a2^1 a3^2 with weight [2,1,0]
  Monomial m = Monomial::of(mat(Letter::A, 1, 1))
                   .times(mat(Letter::A, 2, 1), 1)
                   .times(mat(Letter::A, 3, 2), 1);
  SparsePoly got = young_overlay(m, Weight{2, 1, 0});

  SparsePoly expected =
      SparsePoly::term(m, Rat(2)) +
      SparsePoly::term(Monomial::of(mat(Letter::A, 1, 2))
                           .times(mat(Letter::A, 2, 1), 1)
                           .times(mat(Letter::A, 3, 1), 1),
                       Rat(-1)) +
      SparsePoly::term(Monomial::of(mat(Letter::A, 1, 1))
                           .times(mat(Letter::A, 2, 2), 1)
                           .times(mat(Letter::A, 3, 1), 1),
                       Rat(-1));
  CHECK(got == expected);

  // The collected determinant form is one representative among those that
  // differ by straightening relations; a_1 a_{2,3} + a_2 a_{1,3} is another.
  // They must agree as matrix polynomials and share the degree profile.
  SparsePoly dets = collect_determinants(got);
  CHECK(expand_to_matrix(dets) == got);
  SparsePoly paperForm =
      SparsePoly::term(Monomial::of(deta(3, {1})).times(deta(3, {2, 3}), 1),
                       Rat(1)) +
      SparsePoly::term(Monomial::of(deta(3, {2})).times(deta(3, {1, 3}), 1),
                       Rat(1));
  CHECK(expand_to_matrix(paperForm) == got);
  CHECK(membership_check(dets, Weight{2, 1, 0}));
}

TEST_CASE("single-cell overlay is the identity") {
  Monomial m = Monomial::of(mat(Letter::A, 1, 1));
  CHECK(young_overlay(m, Weight{1, 0}) == SparsePoly::term(m, Rat(1)));
}

TEST_CASE("overlay of a determinant expansion is proportional to it") {
  SparsePoly expn = expand_determinant(Symbol::plain(Letter::A),
                                       IndexSet(2, {1, 2}));
  SparsePoly got = testutil::overlay_poly(expn, Weight{1, 1});
  CHECK(got == expn.scaled(Rat(2)));
}

TEST_CASE("overlay rejects multiplicity mismatches") {
  Monomial m = Monomial::of(mat(Letter::A, 1, 1)).times(mat(Letter::A, 2, 1), 1);
  CHECK_THROWS_AS(young_overlay(m, Weight{1, 1}), std::invalid_argument);
}

TEST_CASE("membership check on degree profiles") {
  // a1^2 * a_{1,2} with weight [3,1,0]
  SparsePoly p = SparsePoly::term(
      Monomial::of(deta(3, {1}), 2).times(deta(3, {1, 2}), 1), Rat(1));
  CHECK(membership_check(p, Weight{3, 1, 0}));

  SparsePoly q = SparsePoly::variable(deta(2, {1, 2}));
  CHECK(!membership_check(q, Weight{1, 0}));

  SparsePoly v0 = highest_vector(Symbol::plain(Letter::A), Weight{2, 1, 1});
  SparsePoly expected = SparsePoly::term(
      Monomial::of(deta(3, {1})).times(deta(3, {1, 2, 3}), 1), Rat(1));
  CHECK(v0 == expected);
  CHECK(membership_check(v0, Weight{2, 1, 1}));

  CHECK_THROWS_AS(membership_check(SparsePoly::zero(), Weight{1, 0}),
                  std::invalid_argument);
}

TEST_CASE("highest vectors are killed by raising operators") {
  for (const Weight &w :
       {Weight{3, 1}, Weight{2, 2}, Weight{2, 1, 1}, Weight{3, 2, 1}}) {
    int n = static_cast<int>(w.size());
    SparsePoly v0 = highest_vector(Symbol::plain(Letter::A), w);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        CHECK(act_root(i, j, v0).is_zero());
    CHECK(weight_of(v0.terms().begin()->first, n) == w);

    // same checks through the matrix-element realization
    SparsePoly vm = expand_to_matrix(v0);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        CHECK(act_root(i, j, vm).is_zero());
  }
}

TEST_CASE("collection inverts expansion on determinant polynomials") {
  SparsePoly p =
      SparsePoly::term(Monomial::of(deta(3, {1})).times(deta(3, {2, 3}), 1),
                       Rat(2)) +
      SparsePoly::term(Monomial::of(deta(3, {1, 2}), 2), Rat(-3)) +
      SparsePoly::term(Monomial::of(deta(3, {1, 2, 3})), Rat(5));
  CHECK(collect_determinants(expand_to_matrix(p)) == p);
}

TEST_CASE("collection rejects non-determinant polynomials") {
  // A bare matrix element with upper index 2 cannot be a determinant
  // diagonal: there is no upper-index-1 occurrence to start a chain.
  SparsePoly bad = SparsePoly::variable(mat(Letter::A, 1, 2));
  CHECK_THROWS_AS(collect_determinants(bad), CollectError);
}

TEST_CASE("tableau shapes") {
  YoungTableau t(Weight{3, 1, 0});
  CHECK(t.rows() == 2);
  CHECK(t.row_length(1) == 3);
  CHECK(t.column_height(1) == 2);
  CHECK(t.column_height(2) == 1);
  CHECK_THROWS_AS(YoungTableau(Weight{1, 2}), std::invalid_argument);
}
