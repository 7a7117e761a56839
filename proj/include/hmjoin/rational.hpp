#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hmjoin {

using Rational = mpq_class;
using Integer = mpz_class;

// Canonical "p/q" form, q >= 1 always written.
std::string to_fraction_string(const Rational& r);

// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace hmjoin
