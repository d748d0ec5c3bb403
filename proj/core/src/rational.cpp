#include "gaussmap/rational.hpp"

#include "gaussmap/errors.hpp"
#include "modarith.hpp"

namespace gaussmap {

std::uint64_t reduce_mod(const Rational& q, std::uint64_t p) {
  std::uint64_t den = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
  if (den == 0) {
    throw BadPrimeError("prime " + std::to_string(p) +
                        " divides a denominator");
  }
  std::uint64_t num = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
  return detail::mulmod(num, detail::invmod(den, p), p);
}

}  // namespace gaussmap
