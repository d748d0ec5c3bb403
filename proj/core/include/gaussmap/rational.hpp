#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace gaussmap {

/// Exact rational scalar. All arithmetic in the library is over these; no
/// floating point is used anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Integer numerator(const Rational& q) { return q.get_num(); }
inline Integer denominator(const Rational& q) { return q.get_den(); }

/// Renders "p" when the denominator is one, otherwise "p/q".
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Reduces q modulo a prime p, mapping the denominator to its modular
/// inverse. The result lies in [0, p). Throws BadPrimeError when p divides
/// the denominator.
std::uint64_t reduce_mod(const Rational& q, std::uint64_t p);

}  // namespace gaussmap
