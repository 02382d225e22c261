#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "milnor_jump/error.hpp"

namespace milnor_jump {

/// Arbitrary-precision signed integer.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }

/// Narrowing with a range check; used where an exact value must fit a
/// machine word (lattice coordinates, loop bounds).
inline std::int64_t to_int64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw IntegralityViolation("value " + v.str() + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

inline Integer abs_value(const Integer& v) { return v < 0 ? Integer(-v) : v; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs_value(a), abs_value(b));
}

/// Mathematical modulus: result in [0, m) for m > 0.
inline Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace milnor_jump
