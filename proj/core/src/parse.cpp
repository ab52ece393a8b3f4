#include "gl6j/parse.hpp"

#include <cctype>

namespace gl6j {

namespace {

struct Cursor {
  const std::string &s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  void expect(char c, const char *what) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      throw ParseError(pos, std::string("expected ") + what);
    ++pos;
  }
  int integer(const char *what) {
    skip_ws();
    size_t start = pos;
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1000000)
        throw ParseError(start, "integer too large");
      ++pos;
    }
    if (pos == start)
      throw ParseError(pos, std::string("expected ") + what);
    return static_cast<int>(v);
  }
};

Slot parse_slot(Cursor &c) {
  c.skip_ws();
  if (c.pos >= c.s.size())
    throw ParseError(c.pos, "expected slot letter (unclosed bracket)");
  char l = c.s[c.pos];
  if (l != 'a' && l != 'b' && l != 'c')
    throw ParseError(c.pos, "expected slot letter a, b or c");
  ++c.pos;
  int upper = c.integer("slot upper index");
  return Slot{letter_from_char(l), upper};
}

Bracket parse_bracket(Cursor &c) {
  c.expect('(', "'(' opening a bracket");
  Bracket b;
  while (true) {
    char ch = c.peek();
    if (ch == '\0')
      throw ParseError(c.pos, "unclosed bracket");
    if (ch == ')') {
      ++c.pos;
      break;
    }
    b.slots.push_back(parse_slot(c));
  }
  if (b.slots.empty())
    throw ParseError(c.pos, "empty bracket");
  return b;
}

Factor parse_factor(Cursor &c) {
  c.expect('(', "'(' opening a factor");
  Factor f;
  while (true) {
    char ch = c.peek();
    if (ch == '\0')
      throw ParseError(c.pos, "unclosed factor");
    if (ch == ')') {
      ++c.pos;
      break;
    }
    if (ch != '(')
      throw ParseError(c.pos, "expected '(' opening a bracket");
    f.brackets.push_back(parse_bracket(c));
  }
  if (f.brackets.empty())
    throw ParseError(c.pos, "factor has no brackets");
  if (c.peek() == '^') {
    ++c.pos;
    f.power = c.integer("factor power");
  }
  return f;
}

} // namespace

BracketSpec parse_bracket_expr(const std::string &text, int n) {
  Cursor c{text};
  BracketSpec spec;
  spec.n = n;
  while (!c.eof())
    spec.factors.push_back(parse_factor(c));
  if (spec.factors.empty())
    throw ParseError(0, "empty bracket expression");
  return spec;
}

Monomial parse_matrix_monomial(const std::string &text) {
  Cursor c{text};
  Monomial m;
  bool any = false;
  while (!c.eof()) {
    c.skip_ws();
    char l = c.s[c.pos];
    if (l != 'a' && l != 'b' && l != 'c')
      throw ParseError(c.pos, "expected matrix element letter a, b or c");
    ++c.pos;
    int lower = c.integer("lower index");
    c.expect('^', "'^' before the upper index");
    int upper = c.integer("upper index");
    m = m.times(Variable::matrix(Symbol::plain(letter_from_char(l)), lower,
                                 upper),
                1);
    any = true;
  }
  if (!any)
    throw ParseError(0, "empty monomial");
  return m;
}

} // namespace gl6j
