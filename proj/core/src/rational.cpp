#include "gl6j/rational.hpp"

#include <stdexcept>

namespace gl6j {

Int factorial(long long k) {
  if (k < 0)
    throw std::invalid_argument("factorial of negative argument");
  Int r = 1;
  for (long long i = 2; i <= k; ++i)
    r *= i;
  return r;
}

std::string fraction_string(const Rat &r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace gl6j
