#pragma once

// Deterministic corpus of bracket specifications and 6j problems shared by
// the unit tests and the acceptance suite.

#include "gl6j/parse.hpp"
#include "gl6j/seminv.hpp"
#include "gl6j/sixj.hpp"

#include <array>
#include <string>
#include <vector>

namespace corpus {

struct SpecEntry {
  int n;
  const char *expr;
};

inline std::vector<SpecEntry> specs() {
  return {
      // n = 2
      {2, "((a1 b1))"},
      {2, "((a1 c1))"},
      {2, "((b1 c1))"},
      {2, "((a1 a2))"},
      {2, "((b1 b2))"},
      {2, "((c1 c2))"},
      {2, "((a1 b1)(a2 c1)(b2 c2))"},
      {2, "((a1 c1)(a2 b1)(c2 b2))"},
      {2, "((a1 b1)(a2 b2))"},
      {2, "((a1 c1)(a2 c2))"},
      {2, "((b1 c1)(b2 c2))"},
      {2, "((a1 b1))^2"},
      {2, "((a1 b1)(a2 c1)(b2 c2))^2"},
      {2, "((a1 b1))((a1 c1))"},
      // n = 3
      {3, "((a1 b1 c1))"},
      {3, "((a1 a2 b1))"},
      {3, "((a1 a2 c1))"},
      {3, "((b1 b2 c1))"},
      {3, "((a1 b1 b2))"},
      {3, "((a1 a2 a3))"},
      {3, "((a1 a1 a2))"},
      {3, "((a1 b1 c1))^2"},
      {3, "((a1 a2 c1)(c2 b1 b2))"},
      {3, "((a1 a2 b1)(b2 c1 c2))"},
      {3, "((c1 c2 b2)(b1 a1 a2))"},
      // n = 4
      {4, "((a1 a2 b1 c1))"},
      {4, "((a1 b1 b2 c1))"},
      {4, "((a1 b1 c1 c2))"},
      {4, "((a1 a2 b1 b2))"},
      {4, "((a1 a2 a3 b1)(b2 c1 c2 c3))"},
      {4, "((a1 a2 b1 c1))^2"},
  };
}

struct Problem {
  int n;
  std::array<std::string, 4> exprs;
  bool weight_compatible;
};

// True iff all six paired letter weights agree, per the family table.
inline bool weights_compatible(const std::array<std::array<gl6j::Weight, 3>, 4>
                                   &lw) {
  using gl6j::Letter;
  auto w = [&lw](int factor, Letter l) -> const gl6j::Weight & {
    return lw[factor][static_cast<int>(l)];
  };
  return w(0, Letter::A) == w(3, Letter::A) && // A1
         w(0, Letter::B) == w(2, Letter::A) && // A2
         w(1, Letter::B) == w(2, Letter::B) && // A3
         w(0, Letter::C) == w(1, Letter::A) && // A4
         w(1, Letter::C) == w(3, Letter::C) && // A5
         w(2, Letter::C) == w(3, Letter::B);   // A6
}

// Deterministic problem list: for each rank, quadruples of pool specs are
// scanned in lexicographic order and the first compatible and first
// incompatible combinations are kept; a hand-picked set of powered and
// mixed-shape problems is appended.
inline std::vector<Problem> problems() {
  struct Caps {
    int n, compatible, incompatible;
  };
  const std::vector<Caps> caps = {{2, 16, 8}, {3, 12, 6}, {4, 6, 6}};

  std::vector<Problem> out;
  for (const Caps &cap : caps) {
    std::vector<std::string> pool;
    std::vector<std::array<gl6j::Weight, 3>> weights;
    for (const SpecEntry &e : specs()) {
      if (e.n != cap.n)
        continue;
      pool.push_back(e.expr);
      weights.push_back(
          gl6j::infer_weights(gl6j::parse_bracket_expr(e.expr, e.n)));
    }
    int nc = 0, ni = 0;
    const size_t m = pool.size();
    for (size_t i1 = 0; i1 < m && (nc < cap.compatible ||
                                   ni < cap.incompatible);
         ++i1)
      for (size_t i2 = 0; i2 < m; ++i2)
        for (size_t i3 = 0; i3 < m; ++i3)
          for (size_t i4 = 0; i4 < m; ++i4) {
            bool compat = weights_compatible(
                {weights[i1], weights[i2], weights[i3], weights[i4]});
            if (compat && nc < cap.compatible) {
              out.push_back({cap.n,
                             {pool[i1], pool[i2], pool[i3], pool[i4]},
                             true});
              ++nc;
            } else if (!compat && ni < cap.incompatible) {
              out.push_back({cap.n,
                             {pool[i1], pool[i2], pool[i3], pool[i4]},
                             false});
              ++ni;
            }
            if (nc >= cap.compatible && ni >= cap.incompatible)
              goto next_rank;
          }
  next_rank:;
  }

  const char *e2 = "((a1 b1)(a2 c1)(b2 c2))^2";
  out.push_back({2, {e2, e2, e2, e2}, true});
  const char *aabc2 = "((a1 a2 b1 c1))^2";
  const char *abbc2 = "((a1 b1 b2 c1))^2";
  out.push_back({4, {aabc2, abbc2, abbc2, aabc2}, true});
  out.push_back({4,
                 {"((a1 b1 c1 c2))", "((a1 a2 b1 c1))", "((a1 b1 c1 c2))",
                  "((a1 b1 b2 c1))"},
                 true});
  out.push_back({2,
                 {"((a1 b1)(a2 b2))", "((b1 c1)(b2 c2))", "((a1 b1)(a2 b2))",
                  "((a1 c1)(a2 c2))"},
                 true});
  out.push_back({3,
                 {"((a1 a1 a2))", "((b1 b1 b2))", "((b1 b1 b2))",
                  "((a1 a1 a2))"},
                 true});
  return out;
}

inline gl6j::SixJProblem build(const Problem &pr) {
  std::array<gl6j::BracketSpec, 4> specs;
  for (int i = 0; i < 4; ++i)
    specs[i] = gl6j::parse_bracket_expr(pr.exprs[i], pr.n);
  return gl6j::build_problem(pr.n, specs);
}

} // namespace corpus
