#include "gl6j/seminv.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gl6j {

// ---- rendering ------------------------------------------------------------

std::string BracketSpec::render() const {
  std::ostringstream os;
  for (const Factor &f : factors) {
    os << '(';
    for (const Bracket &b : f.brackets) {
      os << '(';
      for (size_t s = 0; s < b.slots.size(); ++s) {
        if (s)
          os << ' ';
        os << letter_char(b.slots[s].letter) << b.slots[s].upper;
      }
      os << ')';
    }
    os << ')';
    if (f.power != 1)
      os << '^' << f.power;
  }
  return os.str();
}

// ---- validation -------------------------------------------------------------

namespace {

// Multiplicity vector of a letter's upper indexes within one factor,
// truncated at the largest upper index present.
std::vector<int> upper_multiplicities(const Factor &f, Letter l) {
  int maxU = 0;
  for (const Bracket &b : f.brackets)
    for (const Slot &s : b.slots)
      if (s.letter == l)
        maxU = std::max(maxU, s.upper);
  std::vector<int> mult(maxU, 0);
  for (const Bracket &b : f.brackets)
    for (const Slot &s : b.slots)
      if (s.letter == l && s.upper >= 1)
        ++mult[s.upper - 1];
  return mult;
}

std::string render_mult(const std::vector<int> &m) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < m.size(); ++i) {
    if (i)
      os << ',';
    os << m[i];
  }
  os << ')';
  return os.str();
}

} // namespace

std::vector<std::string> validate(const BracketSpec &spec) {
  std::vector<std::string> out;
  if (spec.n < 2)
    out.push_back("rank n must be at least 2");
  if (spec.factors.empty())
    out.push_back("specification has no factors");

  for (size_t fi = 0; fi < spec.factors.size(); ++fi) {
    const Factor &f = spec.factors[fi];
    std::string where = "factor " + std::to_string(fi + 1) + ": ";
    if (f.power < 1)
      out.push_back(where + "power must be positive");
    if (f.brackets.empty()) {
      out.push_back(where + "factor has no brackets");
      continue;
    }
    int slots = 0;
    for (size_t bi = 0; bi < f.brackets.size(); ++bi) {
      const Bracket &b = f.brackets[bi];
      slots += static_cast<int>(b.slots.size());
      if (static_cast<int>(b.slots.size()) != spec.n)
        out.push_back(where + "bracket " + std::to_string(bi + 1) +
                      " has size " + std::to_string(b.slots.size()) +
                      " != n");
      for (const Slot &s : b.slots)
        if (s.upper < 1)
          out.push_back(where + "upper index must be at least 1");
    }
    if (spec.n >= 1 && slots % spec.n != 0)
      out.push_back(where + "total slot count " + std::to_string(slots) +
                    " not divisible by n");
    for (Letter l : {Letter::A, Letter::B, Letter::C}) {
      std::vector<int> mult = upper_multiplicities(f, l);
      if (static_cast<int>(mult.size()) > spec.n) {
        out.push_back(where + "letter " + letter_char(l) +
                      std::string(" has upper index ") +
                      std::to_string(mult.size()) + " exceeding rank");
        continue;
      }
      for (size_t i = 1; i < mult.size(); ++i)
        if (mult[i] > mult[i - 1]) {
          out.push_back(where + "letter " + letter_char(l) +
                        " has upper-index multiplicities " +
                        render_mult(mult) + " not weakly decreasing");
          break;
        }
    }
  }
  return out;
}

std::array<Weight, 3> infer_weights(const BracketSpec &spec) {
  std::array<Weight, 3> w;
  for (auto &v : w)
    v.assign(spec.n, 0);
  for (const Factor &f : spec.factors)
    for (const Bracket &b : f.brackets)
      for (const Slot &s : b.slots) {
        if (s.upper < 1 || s.upper > spec.n)
          throw std::invalid_argument("infer_weights: invalid upper index");
        w[static_cast<int>(s.letter)][s.upper - 1] += f.power;
      }
  return w;
}

// ---- chains ------------------------------------------------------------------

ChainAssignment chain_assign(const BracketSpec &spec) {
  ChainAssignment out;
  out.factors.resize(spec.factors.size());
  for (size_t fi = 0; fi < spec.factors.size(); ++fi) {
    const Factor &f = spec.factors[fi];
    for (Letter l : {Letter::A, Letter::B, Letter::C}) {
      std::vector<int> mult = upper_multiplicities(f, l);
      int numChains = mult.empty() ? 0 : mult[0];
      // Column heights of the letter's tableau (conjugate partition).
      std::vector<int> height(numChains, 0);
      for (int c = 0; c < numChains; ++c)
        for (int m : mult)
          if (m >= c + 1)
            ++height[c];
      auto &chains = out.factors[fi][static_cast<int>(l)];
      chains.assign(numChains, {});
      for (int c = 0; c < numChains; ++c)
        chains[c].assign(height[c], SlotRef{-1, -1});
      // Reading order: an occurrence of upper index u extends the
      // lowest-numbered chain still awaiting u.
      for (size_t bi = 0; bi < f.brackets.size(); ++bi)
        for (size_t pi = 0; pi < f.brackets[bi].slots.size(); ++pi) {
          const Slot &s = f.brackets[bi].slots[pi];
          if (s.letter != l)
            continue;
          bool placed = false;
          for (int c = 0; c < numChains && !placed; ++c)
            if (s.upper <= height[c] &&
                chains[c][s.upper - 1].bracket < 0) {
              chains[c][s.upper - 1] =
                  SlotRef{static_cast<int>(bi), static_cast<int>(pi)};
              placed = true;
            }
          if (!placed)
            throw std::logic_error("chain_assign: no chain awaits slot");
        }
    }
  }
  return out;
}

// ---- expansion ----------------------------------------------------------------

namespace {

struct PermTable {
  std::vector<std::vector<int>> perms; // lexicographic, values 1..n
  std::vector<int> signs;
};

PermTable permutations(int n) {
  PermTable t;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  do {
    long long inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[i] > p[j])
          ++inv;
    t.perms.push_back(p);
    t.signs.push_back(inv % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(p.begin(), p.end()));
  return t;
}

std::string zvar_body(const Monomial &m) {
  std::ostringstream os;
  for (const auto &[v, e] : m.exponents()) {
    os << v.render();
    if (e != 1)
      os << '^' << e;
  }
  return os.str();
}

struct FactorExpansion {
  // Determinant monomial -> integer coefficient, content- and
  // sign-normalized.
  std::map<Monomial, Int> coeffs;
  Monomial identity_monomial; // identity-permutation assignment, if alive
  bool identity_alive = false;
};

FactorExpansion expand_factor(const BracketSpec &spec, int fi,
                              const ChainAssignment &assignment,
                              const PermTable &pt) {
  const Factor &f = spec.factors[fi];
  const int B = static_cast<int>(f.brackets.size());
  const auto &chains = assignment.factors[fi];

  FactorExpansion out;
  std::vector<size_t> digit(B, 0);
  const size_t np = pt.perms.size();
  while (true) {
    int sign = 1;
    for (int b = 0; b < B; ++b)
      sign *= pt.signs[digit[b]];
    bool identity = true;
    for (int b = 0; b < B; ++b)
      if (digit[b] != 0)
        identity = false;

    Monomial mono;
    bool dead = false;
    for (int letter = 0; letter < 3 && !dead; ++letter)
      for (const auto &chain : chains[letter]) {
        std::vector<int> lowers;
        lowers.reserve(chain.size());
        for (const SlotRef &ref : chain)
          lowers.push_back(pt.perms[digit[ref.bracket]][ref.pos]);
        SignedIndexSet s = normalize(spec.n, lowers);
        if (s.sign == 0) {
          dead = true;
          break;
        }
        sign *= s.sign;
        mono = mono.times(
            Variable::det(Symbol::plain(static_cast<Letter>(letter)), *s.set),
            1);
      }
    if (!dead) {
      auto [it, inserted] = out.coeffs.emplace(mono, Int(sign));
      if (!inserted) {
        it->second += sign;
        if (it->second == 0)
          out.coeffs.erase(it);
      }
      if (identity) {
        out.identity_monomial = mono;
        out.identity_alive = true;
      }
    }

    int b = 0;
    for (; b < B; ++b) {
      if (++digit[b] < np)
        break;
      digit[b] = 0;
    }
    if (b == B)
      break;
  }

  if (out.coeffs.empty())
    return out;
  if (out.identity_alive && !out.coeffs.count(out.identity_monomial))
    out.identity_alive = false; // cancelled during collection

  // Content normalization: coefficients divided by their gcd, then the
  // lexicographically smallest Z variable id made positive.
  Int g = 0;
  for (const auto &[m, c] : out.coeffs)
    g = boost::multiprecision::gcd(g, abs(c));
  std::string smallest;
  Int smallestCoeff = 0;
  for (auto &[m, c] : out.coeffs) {
    c /= g;
    std::string id = zvar_body(m);
    if (smallest.empty() || id < smallest) {
      smallest = id;
      smallestCoeff = c;
    }
  }
  if (smallestCoeff < 0)
    for (auto &[m, c] : out.coeffs)
      c = -c;
  return out;
}

} // namespace

Expansion expand(const BracketSpec &spec) {
  {
    std::vector<std::string> diag = validate(spec);
    if (!diag.empty())
      throw std::invalid_argument("invalid bracket specification: " +
                                  diag.front());
  }
  ChainAssignment assignment = chain_assign(spec);
  PermTable pt = permutations(spec.n);

  Expansion out;
  out.spec = spec;
  const bool multiFactor = spec.factors.size() > 1;

  SparsePoly product = SparsePoly::constant(Rat(1));
  bool anyDead = false;
  for (size_t fi = 0; fi < spec.factors.size(); ++fi) {
    FactorExpansion fe =
        expand_factor(spec, static_cast<int>(fi), assignment, pt);
    if (fe.coeffs.empty()) {
      anyDead = true;
      out.warnings.push_back("factor " + std::to_string(fi + 1) +
                             ": expansion cancels to zero");
      continue;
    }

    // Registry entries in id order, then the factor's linear Z polynomial.
    std::vector<ZVarInfo> entries;
    for (const auto &[m, c] : fe.coeffs) {
      ZVarInfo info;
      info.factor = static_cast<int>(fi);
      info.monomial = m;
      info.id = (multiFactor ? "f" + std::to_string(fi + 1) + ":" : "") +
                "[" + zvar_body(m) + "]";
      info.z = c;
      info.var = Variable::zvar(static_cast<int>(fi), info.id);
      entries.push_back(std::move(info));
    }
    std::sort(entries.begin(), entries.end(),
              [](const ZVarInfo &a, const ZVarInfo &b) { return a.id < b.id; });

    SparsePoly linear;
    for (const ZVarInfo &info : entries)
      linear.add_term(Monomial::of(info.var), Rat(info.z));
    const int t = spec.factors[fi].power;
    product = product * linear.pow(t).scaled(Rat(Int(1), factorial(t)));

    for (ZVarInfo &info : entries)
      out.registry.push_back(std::move(info));
  }

  out.zpoly = anyDead ? SparsePoly::zero() : product;
  if (out.zpoly.is_zero())
    out.warnings.push_back("zero expansion");
  return out;
}

const ZVarInfo *Expansion::find(const Variable &v) const {
  for (const ZVarInfo &info : registry)
    if (info.var == v)
      return &info;
  return nullptr;
}

SparsePoly to_determinant_poly(const Expansion &e) {
  return e.zpoly.substituted([&e](const Variable &v) {
    const ZVarInfo *info = e.find(v);
    if (info == nullptr)
      throw std::logic_error("Z variable missing from registry");
    return SparsePoly::term(info->monomial, Rat(1));
  });
}

// ---- support lattice ------------------------------------------------------------

ExpVec expvec_of(const Monomial &m) {
  ExpVec v;
  for (const auto &[var, e] : m.exponents())
    v[var] = e;
  return v;
}

namespace {

void expvec_accumulate(ExpVec &a, const ExpVec &b, int scale) {
  for (const auto &[var, e] : b) {
    int ne = (a.count(var) ? a[var] : 0) + scale * e;
    if (ne == 0)
      a.erase(var);
    else
      a[var] = ne;
  }
}

} // namespace

ExpVec expvec_add(const ExpVec &a, const ExpVec &b) {
  ExpVec r = a;
  expvec_accumulate(r, b, 1);
  return r;
}

ExpVec expvec_sub(const ExpVec &a, const ExpVec &b) {
  ExpVec r = a;
  expvec_accumulate(r, b, -1);
  return r;
}

SupportLattice support_lattice(const Expansion &e) {
  if (e.zpoly.is_zero())
    throw std::invalid_argument("support lattice of a zero expansion");

  SupportLattice lat;
  ChainAssignment assignment = chain_assign(e.spec);
  PermTable pt = permutations(e.spec.n);

  for (size_t fi = 0; fi < e.spec.factors.size(); ++fi) {
    // The factor's registry slice, in canonical order.
    std::vector<const ZVarInfo *> entries;
    for (const ZVarInfo &info : e.registry)
      if (info.factor == static_cast<int>(fi))
        entries.push_back(&info);
    if (entries.empty())
      throw std::logic_error("support lattice: factor without Z variables");

    // kappa contribution: the identity-permutation assignment when it
    // survives, otherwise the first surviving Z variable.
    FactorExpansion fe =
        expand_factor(e.spec, static_cast<int>(fi), assignment, pt);
    const ZVarInfo *base = entries.front();
    if (fe.identity_alive)
      for (const ZVarInfo *info : entries)
        if (info->monomial == fe.identity_monomial) {
          base = info;
          break;
        }
    expvec_accumulate(lat.kappa, ExpVec{{base->var, 1}},
                      e.spec.factors[fi].power);

    for (size_t i = 0; i < entries.size(); ++i)
      for (size_t j = i + 1; j < entries.size(); ++j)
        lat.basis.push_back(expvec_sub(ExpVec{{entries[i]->var, 1}},
                                       ExpVec{{entries[j]->var, 1}}));
  }
  return lat;
}

std::vector<ExpVec> lattice_points_in_box(const SupportLattice &lat,
                                          const ExpVec &box) {
  auto inside = [&box](const ExpVec &v) {
    for (const auto &[var, e] : v) {
      if (e < 0)
        return false;
      auto it = box.find(var);
      int bound = it == box.end() ? 0 : it->second;
      if (e > bound)
        return false;
    }
    return true;
  };

  std::set<ExpVec> seen;
  std::vector<ExpVec> queue;
  if (!inside(lat.kappa))
    return {};
  seen.insert(lat.kappa);
  queue.push_back(lat.kappa);
  while (!queue.empty()) {
    ExpVec cur = queue.back();
    queue.pop_back();
    for (const ExpVec &g : lat.basis)
      for (int dir : {1, -1}) {
        ExpVec nxt = cur;
        expvec_accumulate(nxt, g, dir);
        if (inside(nxt) && seen.insert(nxt).second)
          queue.push_back(nxt);
      }
  }
  return std::vector<ExpVec>(seen.begin(), seen.end());
}

} // namespace gl6j
