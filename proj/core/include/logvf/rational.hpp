#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace logvf {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q".  Throws SyntaxError.
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Scales a vector to a primitive integer vector whose first nonzero entry is
// positive.  The zero vector is returned unchanged.
std::vector<Rational> primitive_integer_vector(std::vector<Rational> v);

}  // namespace logvf
