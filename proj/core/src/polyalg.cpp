#include "gl6j/polyalg.hpp"

#include <sstream>
#include <stdexcept>

namespace gl6j {

// ---- Variable -------------------------------------------------------------

Variable Variable::det(Symbol sym, IndexSet set) {
  Variable v;
  v.kind_ = Kind::Det;
  v.sym_ = sym;
  v.set_ = std::move(set);
  return v;
}

Variable Variable::matrix(Symbol sym, int lower, int upper) {
  if (lower < 1 || upper < 1)
    throw std::invalid_argument("matrix variable indexes must be positive");
  Variable v;
  v.kind_ = Kind::Matrix;
  v.sym_ = sym;
  v.lower_ = lower;
  v.upper_ = upper;
  return v;
}

Variable Variable::zvar(int factor, std::string id) {
  Variable v;
  v.kind_ = Kind::Z;
  v.z_factor_ = factor;
  v.z_id_ = std::move(id);
  return v;
}

const IndexSet &Variable::set() const {
  if (kind_ != Kind::Det)
    throw std::logic_error("set() on a non-determinant variable");
  return set_;
}

std::string Variable::render() const {
  switch (kind_) {
  case Kind::Det:
    return sym_.render() + set_.render();
  case Kind::Matrix:
    return sym_.render() + std::to_string(lower_) + "^" +
           std::to_string(upper_);
  case Kind::Z:
    return z_id_;
  }
  return "?";
}

int Variable::compare(const Variable &a, const Variable &b) {
  if (a.kind_ != b.kind_)
    return static_cast<int>(a.kind_) < static_cast<int>(b.kind_) ? -1 : 1;
  switch (a.kind_) {
  case Kind::Det: {
    if (int c = Symbol::compare(a.sym_, b.sym_))
      return c;
    return IndexSet::compare(a.set_, b.set_);
  }
  case Kind::Matrix: {
    if (int c = Symbol::compare(a.sym_, b.sym_))
      return c;
    if (a.upper_ != b.upper_)
      return a.upper_ < b.upper_ ? -1 : 1;
    if (a.lower_ != b.lower_)
      return a.lower_ < b.lower_ ? -1 : 1;
    return 0;
  }
  case Kind::Z: {
    if (a.z_factor_ != b.z_factor_)
      return a.z_factor_ < b.z_factor_ ? -1 : 1;
    if (a.z_id_ != b.z_id_)
      return a.z_id_ < b.z_id_ ? -1 : 1;
    return 0;
  }
  }
  return 0;
}

// ---- Monomial ---------------------------------------------------------------

Monomial Monomial::of(const Variable &v, int e) {
  return Monomial().times(v, e);
}

int Monomial::exponent(const Variable &v) const {
  auto it = exps_.find(v);
  return it == exps_.end() ? 0 : it->second;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto &[v, e] : exps_)
    d += e;
  return d;
}

Monomial Monomial::times(const Variable &v, int e) const {
  Monomial r = *this;
  int ne = r.exponent(v) + e;
  if (ne < 0)
    throw std::invalid_argument("negative exponent in monomial");
  if (ne == 0)
    r.exps_.erase(v);
  else
    r.exps_[v] = ne;
  return r;
}

Monomial Monomial::times(const Monomial &m) const {
  Monomial r = *this;
  for (const auto &[v, e] : m.exps_) {
    int ne = r.exponent(v) + e;
    if (ne == 0)
      r.exps_.erase(v);
    else
      r.exps_[v] = ne;
  }
  return r;
}

Monomial Monomial::pow(int e) const {
  if (e < 0)
    throw std::invalid_argument("negative monomial power");
  Monomial r;
  if (e == 0)
    return r;
  for (const auto &[v, k] : exps_)
    r.exps_[v] = k * e;
  return r;
}

Monomial
Monomial::filter(const std::function<bool(const Variable &)> &pred) const {
  Monomial r;
  for (const auto &[v, e] : exps_)
    if (pred(v))
      r.exps_[v] = e;
  return r;
}

std::string Monomial::render() const {
  if (exps_.empty())
    return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto &[v, e] : exps_) {
    if (!first)
      os << ' ';
    first = false;
    os << v.render();
    if (e != 1)
      os << '^' << e;
  }
  return os.str();
}

int Monomial::compare(const Monomial &a, const Monomial &b) {
  auto ia = a.exps_.begin(), ib = b.exps_.begin();
  while (ia != a.exps_.end() || ib != b.exps_.end()) {
    if (ia == a.exps_.end())
      return -1; // b still has a variable with positive exponent
    if (ib == b.exps_.end())
      return 1;
    int vc = Variable::compare(ia->first, ib->first);
    if (vc < 0)
      return 1; // a has the earlier variable
    if (vc > 0)
      return -1;
    if (ia->second != ib->second)
      return ia->second > ib->second ? 1 : -1;
    ++ia;
    ++ib;
  }
  return 0;
}

// ---- SparsePoly -------------------------------------------------------------

SparsePoly SparsePoly::constant(const Rat &c) {
  return term(Monomial::one(), c);
}

SparsePoly SparsePoly::term(const Monomial &m, const Rat &c) {
  SparsePoly p;
  p.add_term(m, c);
  return p;
}

SparsePoly SparsePoly::variable(const Variable &v) {
  return term(Monomial::of(v), Rat(1));
}

Rat SparsePoly::coefficient(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

const Monomial &SparsePoly::leading_monomial() const {
  if (terms_.empty())
    throw std::logic_error("leading monomial of zero polynomial");
  return terms_.rbegin()->first;
}

void SparsePoly::add_term(const Monomial &m, const Rat &c) {
  if (c == 0)
    return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

SparsePoly SparsePoly::operator+(const SparsePoly &o) const {
  SparsePoly r = *this;
  for (const auto &[m, c] : o.terms_)
    r.add_term(m, c);
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly &o) const {
  SparsePoly r = *this;
  for (const auto &[m, c] : o.terms_)
    r.add_term(m, -c);
  return r;
}

SparsePoly SparsePoly::operator-() const { return scaled(Rat(-1)); }

SparsePoly SparsePoly::scaled(const Rat &c) const {
  SparsePoly r;
  if (c == 0)
    return r;
  for (const auto &[m, k] : terms_)
    r.terms_.emplace(m, k * c);
  return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly &o) const {
  SparsePoly r;
  for (const auto &[ma, ca] : terms_)
    for (const auto &[mb, cb] : o.terms_)
      r.add_term(ma.times(mb), ca * cb);
  return r;
}

SparsePoly SparsePoly::pow(int e) const {
  if (e < 0)
    throw std::invalid_argument("negative polynomial power");
  SparsePoly r = constant(Rat(1));
  for (int i = 0; i < e; ++i)
    r = r * *this;
  return r;
}

SparsePoly SparsePoly::substituted(
    const std::function<SparsePoly(const Variable &)> &image) const {
  SparsePoly r;
  for (const auto &[m, c] : terms_) {
    SparsePoly t = constant(c);
    for (const auto &[v, e] : m.exponents())
      t = t * image(v).pow(e);
    r = r + t;
  }
  return r;
}

std::string SparsePoly::render() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first)
      os << " + ";
    first = false;
    os << fraction_string(it->second) << " * " << it->first.render();
  }
  return os.str();
}

// ---- differential action and pairing ---------------------------------------

SparsePoly apply_diff(const SparsePoly &f, const SparsePoly &g) {
  SparsePoly r;
  for (const auto &[mf, cf] : f.terms()) {
    for (const auto &[mg, cg] : g.terms()) {
      // d^{mf} applied to mg: falling factorials per variable.
      Rat coef = cf * cg;
      Monomial rest = mg;
      bool dead = false;
      for (const auto &[v, ef] : mf.exponents()) {
        int eg = mg.exponent(v);
        if (eg < ef) {
          dead = true;
          break;
        }
        Int ff = 1;
        for (int t = 0; t < ef; ++t)
          ff *= (eg - t);
        coef *= ff;
        rest = rest.times(v, -ef);
      }
      if (!dead)
        r.add_term(rest, coef);
    }
  }
  return r;
}

Rat pairing(const SparsePoly &f, const SparsePoly &g) {
  // Closed form: sum of c_f * c_g * m! over shared monomials.
  const auto &a = f.terms();
  const auto &b = g.terms();
  Rat total = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    int c = Monomial::compare(ia->first, ib->first);
    if (c < 0) {
      ++ia;
    } else if (c > 0) {
      ++ib;
    } else {
      Int mfact = 1;
      for (const auto &[v, e] : ia->first.exponents())
        mfact *= factorial(e);
      total += ia->second * ib->second * mfact;
      ++ia;
      ++ib;
    }
  }
  return total;
}

Rat pairing_by_operator(const SparsePoly &f, const SparsePoly &g) {
  return apply_diff(f, g).constant_term();
}

} // namespace gl6j
