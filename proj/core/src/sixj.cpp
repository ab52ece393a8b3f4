#include "gl6j/sixj.hpp"

#include <algorithm>
#include <future>

namespace gl6j {

namespace {

// Slot letter -> family per factor, and the derivative role flags.
constexpr int kFamily[4][3] = {{1, 2, 4}, {4, 3, 5}, {2, 3, 6}, {1, 6, 5}};
constexpr bool kDerivative[4][3] = {{true, true, false},
                                    {true, true, false},
                                    {false, false, true},
                                    {false, false, true}};

} // namespace

FamilyRole family_slot(int factor, Letter letter) {
  if (factor < 0 || factor > 3)
    throw std::invalid_argument("family_slot: factor out of range");
  int l = static_cast<int>(letter);
  return FamilyRole{kFamily[factor][l], kDerivative[factor][l]};
}

FamilySides family_sides(int family) {
  FamilySides sides;
  bool haveD = false, haveV = false;
  for (int f = 0; f < 4; ++f)
    for (int l = 0; l < 3; ++l)
      if (kFamily[f][l] == family) {
        if (kDerivative[f][l]) {
          sides.deriv = f;
          haveD = true;
        } else {
          sides.var = f;
          haveV = true;
        }
      }
  if (!haveD || !haveV)
    throw std::invalid_argument("family_sides: family out of range");
  return sides;
}

std::array<std::pair<std::string, Weight>, 6>
representation_weights(const std::array<std::array<Weight, 3>, 4> &lw) {
  return {{{"V1", lw[0][0]},
           {"V2", lw[0][1]},
           {"V3", lw[1][1]},
           {"U", lw[0][2]},
           {"W", lw[1][2]},
           {"H", lw[2][2]}}};
}

SixJProblem build_problem(int n, const std::array<BracketSpec, 4> &specs) {
  SixJProblem p;
  p.n = n;
  p.specs = specs;
  for (int i = 0; i < 4; ++i) {
    if (specs[i].n != n)
      throw std::invalid_argument("build_problem: rank mismatch in f" +
                                  std::to_string(i + 1));
    std::vector<std::string> diag = validate(specs[i]);
    if (!diag.empty())
      throw std::invalid_argument("f" + std::to_string(i + 1) + ": " +
                                  diag.front());
    p.expansions[i] = expand(specs[i]);
    p.letter_weights[i] = infer_weights(specs[i]);
    for (const std::string &w : p.expansions[i].warnings)
      p.warnings.push_back("f" + std::to_string(i + 1) + ": " + w);
  }

  // Paired slots must carry identical upper-index multiplicity patterns;
  // a mismatch only means the value is 0.
  for (int family = 1; family <= 6; ++family) {
    FamilySides sides = family_sides(family);
    auto letter_of = [family](int factor) {
      for (int l = 0; l < 3; ++l)
        if (kFamily[factor][l] == family)
          return l;
      throw std::logic_error("family not present in factor");
    };
    const Weight &wd = p.letter_weights[sides.deriv][letter_of(sides.deriv)];
    const Weight &wv = p.letter_weights[sides.var][letter_of(sides.var)];
    if (wd != wv)
      p.warnings.push_back(
          "family A" + std::to_string(family) + ": weight mismatch between f" +
          std::to_string(sides.deriv + 1) + " " + render_weight(wd) +
          " and f" + std::to_string(sides.var + 1) + " " + render_weight(wv));
  }
  return p;
}

namespace {

std::vector<SupportPoint> factor_support(const SixJProblem &p, int factor) {
  const Expansion &e = p.expansions[factor];
  std::map<Variable, const ZVarInfo *> lookup;
  for (const ZVarInfo &info : e.registry)
    lookup[info.var] = &info;

  std::vector<SupportPoint> out;
  out.reserve(e.zpoly.term_count());
  for (const auto &[zmono, coeff] : e.zpoly.terms()) {
    SupportPoint sp;
    sp.zmono = zmono;
    sp.coeff = coeff;
    for (const auto &[zv, xe] : zmono.exponents()) {
      const ZVarInfo *info = lookup.at(zv);
      for (const auto &[dv, k] : info->monomial.exponents()) {
        FamilyRole role = family_slot(factor, dv.symbol().letter);
        Variable famVar =
            Variable::det(Symbol::of_family(role.family), dv.set());
        sp.famexp[role.family][famVar] += k * xe;
      }
    }
    out.push_back(std::move(sp));
  }
  return out;
}

} // namespace

SelectionSet selection_set(const SixJProblem &p) {
  SelectionSet sel;
  for (int i = 0; i < 4; ++i)
    sel.supports[i] = factor_support(p, i);

  using Key = std::map<Variable, int>;
  // f2 joined on A4, f3 on (A2, A3), f4 on (A1, A6, A5).
  std::map<Key, std::vector<int>> byA4;
  for (size_t i = 0; i < sel.supports[1].size(); ++i)
    byA4[sel.supports[1][i].famexp[4]].push_back(static_cast<int>(i));
  std::map<std::pair<Key, Key>, std::vector<int>> byA2A3;
  for (size_t i = 0; i < sel.supports[2].size(); ++i)
    byA2A3[{sel.supports[2][i].famexp[2], sel.supports[2][i].famexp[3]}]
        .push_back(static_cast<int>(i));
  std::map<std::tuple<Key, Key, Key>, std::vector<int>> byA1A6A5;
  for (size_t i = 0; i < sel.supports[3].size(); ++i)
    byA1A6A5[{sel.supports[3][i].famexp[1], sel.supports[3][i].famexp[6],
              sel.supports[3][i].famexp[5]}]
        .push_back(static_cast<int>(i));

  for (size_t i1 = 0; i1 < sel.supports[0].size(); ++i1) {
    const SupportPoint &m1 = sel.supports[0][i1];
    auto it2 = byA4.find(m1.famexp[4]);
    if (it2 == byA4.end())
      continue;
    for (int i2 : it2->second) {
      const SupportPoint &m2 = sel.supports[1][i2];
      auto it3 = byA2A3.find({m1.famexp[2], m2.famexp[3]});
      if (it3 == byA2A3.end())
        continue;
      for (int i3 : it3->second) {
        const SupportPoint &m3 = sel.supports[2][i3];
        auto it4 = byA1A6A5.find({m1.famexp[1], m3.famexp[6], m2.famexp[5]});
        if (it4 == byA1A6A5.end())
          continue;
        for (int i4 : it4->second)
          sel.quadruples.push_back(
              {static_cast<int>(i1), i2, i3, static_cast<int>(i4)});
      }
    }
  }
  return sel;
}

Rat sixj_value(const SixJProblem &p) { return sixj_value(p, selection_set(p)); }

namespace {

Rat quadruple_contribution(const SelectionSet &sel,
                           const std::array<int, 4> &q) {
  Rat contrib = 1;
  for (int i = 0; i < 4; ++i)
    contrib *= sel.supports[i][q[i]].coeff;
  // Numerator factorials: each family variable counted once, taken from
  // the derivative side (equal to the variable side inside the set).
  for (int family = 1; family <= 6; ++family) {
    int d = family_sides(family).deriv;
    for (const auto &[famVar, e] : sel.supports[d][q[d]].famexp[family])
      contrib *= factorial(e);
  }
  return contrib;
}

} // namespace

Rat sixj_value(const SixJProblem &, const SelectionSet &sel, int threads) {
  const size_t m = sel.quadruples.size();
  if (threads <= 1 || m < 64) {
    Rat total = 0;
    for (const std::array<int, 4> &q : sel.quadruples)
      total += quadruple_contribution(sel, q);
    return total;
  }

  const size_t chunks = std::min<size_t>(threads, m);
  std::vector<std::future<Rat>> partial;
  partial.reserve(chunks);
  for (size_t c = 0; c < chunks; ++c) {
    size_t lo = m * c / chunks, hi = m * (c + 1) / chunks;
    partial.push_back(std::async(std::launch::async, [&sel, lo, hi] {
      Rat sum = 0;
      for (size_t k = lo; k < hi; ++k)
        sum += quadruple_contribution(sel, sel.quadruples[k]);
      return sum;
    }));
  }
  Rat total = 0;
  for (auto &f : partial)
    total += f.get();
  return total;
}

SparsePoly family_polynomial(const SixJProblem &p, int factor) {
  const Expansion &e = p.expansions[factor];
  return e.zpoly.substituted([&](const Variable &zv) {
    const ZVarInfo *info = e.find(zv);
    if (info == nullptr)
      throw std::logic_error("Z variable missing from registry");
    Monomial img;
    for (const auto &[dv, k] : info->monomial.exponents()) {
      FamilyRole role = family_slot(factor, dv.symbol().letter);
      img = img.times(Variable::det(Symbol::of_family(role.family), dv.set()),
                      k);
    }
    return SparsePoly::term(img, Rat(1));
  });
}

namespace {

struct OracleTerm {
  Rat coeff;
  std::array<Monomial, 7> part; // per family
};

std::vector<OracleTerm> oracle_terms(const SparsePoly &fam) {
  std::vector<OracleTerm> out;
  out.reserve(fam.term_count());
  for (const auto &[m, c] : fam.terms()) {
    OracleTerm t;
    t.coeff = c;
    for (int family = 1; family <= 6; ++family)
      t.part[family] = m.filter([family](const Variable &v) {
        return v.symbol().family == family;
      });
    out.push_back(std::move(t));
  }
  return out;
}

// Pairing kernel of one family: the apolar pairing of the derivative-side
// part against the variable-side part.
Rat kernel(const Monomial &deriv, const Monomial &var) {
  return pairing(SparsePoly::term(deriv, Rat(1)),
                 SparsePoly::term(var, Rat(1)));
}

} // namespace

Rat contract_families(const std::array<SparsePoly, 4> &polys) {
  std::array<std::vector<OracleTerm>, 4> f;
  for (int i = 0; i < 4; ++i)
    f[i] = oracle_terms(polys[i]);

  Rat total = 0;
  for (const OracleTerm &t1 : f[0]) {
    for (const OracleTerm &t2 : f[1]) {
      Rat k4 = kernel(t2.part[4], t1.part[4]); // A4: f2 derivative, f1 variable
      if (k4 == 0)
        continue;
      for (const OracleTerm &t3 : f[2]) {
        Rat k2 = kernel(t1.part[2], t3.part[2]); // A2: f1 d, f3 v
        if (k2 == 0)
          continue;
        Rat k3 = kernel(t2.part[3], t3.part[3]); // A3: f2 d, f3 v
        if (k3 == 0)
          continue;
        for (const OracleTerm &t4 : f[3]) {
          Rat k1 = kernel(t1.part[1], t4.part[1]); // A1: f1 d, f4 v
          if (k1 == 0)
            continue;
          Rat k5 = kernel(t4.part[5], t2.part[5]); // A5: f4 d, f2 v
          if (k5 == 0)
            continue;
          Rat k6 = kernel(t3.part[6], t4.part[6]); // A6: f3 d, f4 v
          if (k6 == 0)
            continue;
          total += t1.coeff * t2.coeff * t3.coeff * t4.coeff * k1 * k2 * k3 *
                   k4 * k5 * k6;
        }
      }
    }
  }
  return total;
}

Rat sixj_oracle(const SixJProblem &p) {
  return contract_families({family_polynomial(p, 0), family_polynomial(p, 1),
                            family_polynomial(p, 2),
                            family_polynomial(p, 3)});
}

} // namespace gl6j
