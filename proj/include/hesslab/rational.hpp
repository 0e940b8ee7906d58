#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <utility>

namespace hesslab {

// Exact coefficient field. mpq_class keeps numerator and denominator coprime
// with a positive denominator once canonicalized.
using Rational = mpq_class;
using Integer = mpz_class;

struct RationalPoint {
  Rational x;
  Rational y;

  bool operator==(const RationalPoint&) const = default;
};

// Accepts "p", "-p", "p/q". Decimal notation is rejected.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }

// True when value = r^2 for some rational r (value >= 0 required).
bool is_rational_square(const Rational& value);

Rational factorial(unsigned n);

// Lexicographic order on points, used for deterministic witness lists.
inline bool point_less(const RationalPoint& a, const RationalPoint& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

}  // namespace hesslab
