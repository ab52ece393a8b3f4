#include "gl6j/glaction.hpp"

#include <sstream>

namespace gl6j {

std::string render_weight(const Weight &w) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < w.size(); ++i) {
    if (i)
      os << ',';
    os << w[i];
  }
  os << ']';
  return os.str();
}

namespace {

// E_{i,j} applied to one variable; returns 0, or a signed variable.
struct VarImage {
  int sign = 0;
  std::optional<Variable> var;
};

VarImage act_on_variable(int i, int j, const Variable &v) {
  switch (v.kind()) {
  case Variable::Kind::Det: {
    const IndexSet &X = v.set();
    if (!X.contains(j))
      return {};
    std::vector<int> raw = X.elements();
    for (int &e : raw)
      if (e == j)
        e = i;
    SignedIndexSet s = normalize(X.rank(), raw);
    if (s.sign == 0)
      return {};
    return {s.sign, Variable::det(v.symbol(), *s.set)};
  }
  case Variable::Kind::Matrix: {
    if (v.lower() != j)
      return {};
    return {1, Variable::matrix(v.symbol(), i, v.upper())};
  }
  case Variable::Kind::Z:
    throw std::invalid_argument("act_root on a Z variable universe");
  }
  return {};
}

int lower_count(const Monomial &m, int i) {
  int c = 0;
  for (const auto &[v, e] : m.exponents()) {
    switch (v.kind()) {
    case Variable::Kind::Det:
      if (v.set().contains(i))
        c += e;
      break;
    case Variable::Kind::Matrix:
      if (v.lower() == i)
        c += e;
      break;
    case Variable::Kind::Z:
      throw std::invalid_argument("weight of a Z variable universe");
    }
  }
  return c;
}

} // namespace

SparsePoly act_root(int i, int j, const SparsePoly &p) {
  if (i < 1 || j < 1)
    throw std::invalid_argument("act_root: indexes must be positive");
  SparsePoly r;
  for (const auto &[m, c] : p.terms()) {
    if (i == j) {
      // Cartan case: diagonal with eigenvalue = count of lower index i.
      int cnt = lower_count(m, i);
      if (cnt != 0)
        r.add_term(m, c * cnt);
      continue;
    }
    // Leibnitz over the monomial's variable occurrences.
    for (const auto &[v, e] : m.exponents()) {
      VarImage img = act_on_variable(i, j, v);
      if (img.sign == 0)
        continue;
      Monomial t = m.times(v, -1).times(*img.var, 1);
      r.add_term(t, c * e * img.sign);
    }
  }
  return r;
}

Weight weight_of(const Monomial &m, int n) {
  for (const auto &[v, e] : m.exponents())
    if (v.kind() == Variable::Kind::Det && v.set().rank() != n)
      throw std::invalid_argument("weight_of: mixed ranks in one monomial");
  Weight w(n, 0);
  for (int i = 1; i <= n; ++i)
    w[i - 1] = lower_count(m, i);
  return w;
}

SemiInvariance check_semi_invariant(const SparsePoly &p, int n) {
  if (p.is_zero())
    throw std::invalid_argument("check_semi_invariant: zero polynomial");

  Weight w = weight_of(p.terms().begin()->first, n);
  for (const auto &[m, c] : p.terms())
    if (weight_of(m, n) != w)
      return {false, std::nullopt};

  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j && !act_root(i, j, p).is_zero())
        return {false, std::nullopt};

  return {true, w};
}

} // namespace gl6j
