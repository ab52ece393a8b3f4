#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gl6j {

// Exact arithmetic everywhere: values are rationals, never floats.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(long long k);

// Canonical "p/q" with q > 0 and gcd(p,q) = 1; the denominator is always
// printed, so integers render as "24/1".
std::string fraction_string(const Rat &r);

} // namespace gl6j
