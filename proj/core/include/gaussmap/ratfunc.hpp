#pragma once

#include <string>

#include "gaussmap/unipoly.hpp"

namespace gaussmap {

/// Rational function in x, kept fully reduced: the denominator is monic and
/// nonzero and shares no factor with the numerator. Equality is therefore
/// structural.
class RatFunc {
public:
  RatFunc() : den_(UniPoly::constant(1)) {}
  RatFunc(UniPoly num, UniPoly den);
  /* implicit */ RatFunc(UniPoly num) : num_(std::move(num)), den_(UniPoly::constant(1)) {}
  /* implicit */ RatFunc(const Rational& c) : RatFunc(UniPoly::constant(c)) {}

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc derivative() const;
  RatFunc pow(unsigned e) const;
  RatFunc inverse() const;

  std::string to_string() const;

private:
  UniPoly num_, den_;
};

/// Monic least common multiple; lcm(0, p) = 0.
UniPoly poly_lcm(const UniPoly& a, const UniPoly& b);

/// True when every irreducible factor of d divides f, i.e. d divides some
/// power of f. Decided by repeated gcd stripping; no factorization.
bool divides_power_of(const UniPoly& d, const UniPoly& f);

}  // namespace gaussmap
