#pragma once

#include "gl6j/polyalg.hpp"
#include "gl6j/seminv.hpp"

#include <stdexcept>
#include <string>

namespace gl6j {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(size_t pos, const std::string &msg)
      : std::runtime_error(msg + " at position " + std::to_string(pos)),
        position(pos) {}
};

// Grammar:
//   invariant := factor+
//   factor    := '(' bracket+ ')' ['^' INT]
//   bracket   := '(' slot+ ')'
//   slot      := LETTER INT        with LETTER in {a,b,c}
// Whitespace separates slots. Validation diagnostics are not raised here;
// run validate() on the result.
BracketSpec parse_bracket_expr(const std::string &text, int n);

// Matrix monomial input for the overlay command: whitespace-separated
// factors "a1^2" meaning the matrix element with lower index 1 and upper
// index 2; repeated factors multiply.
Monomial parse_matrix_monomial(const std::string &text);

} // namespace gl6j
