#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hkchi {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline std::string to_string(const Integer& x) { return x.get_str(); }

inline std::string to_string(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_str();
}

// Strict decimal parse: optional leading '-', then at least one digit.
// Throws ParseError on anything else.
Integer parse_integer(std::string_view text);

}  // namespace hkchi
