#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nadyn {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// p/q in lowest terms. mpq_class(p, q) alone does not reduce.
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

/// Always "p/q", including q = 1 ("2/1", "-1/1", "0/1").
std::string to_string(const Rational& x);

/// Accepts "p", "-p", "p/q", "-p/q" with optional surrounding spaces.
Rational parse_rational(std::string_view text);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);

Integer lcm(const Integer& a, const Integer& b);
long lcm(long a, long b);

/// Requires a fitting long.
long to_long(const Integer& x);

}  // namespace nadyn
