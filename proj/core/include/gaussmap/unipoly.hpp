#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "gaussmap/rational.hpp"

namespace gaussmap {

/// Dense univariate polynomial over the rationals. Coefficient i is the
/// coefficient of x^i. The zero polynomial is the empty vector; trailing
/// zero coefficients are stripped on construction, so representation is
/// canonical and equality is coefficient-wise.
class UniPoly {
public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(const Rational& c);
  static UniPoly monomial(std::size_t degree, const Rational& c = 1);
  /// The variable x itself.
  static UniPoly x() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of x^i, zero beyond the degree.
  const Rational& coeff(std::size_t i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& c, const UniPoly& p);

  UniPoly derivative() const;
  Rational evaluate(const Rational& at) const;
  UniPoly pow(unsigned e) const;
  UniPoly monic() const;

  std::string to_string(const std::string& var = "x") const;

private:
  void strip();
  std::vector<Rational> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. Throws on b = 0.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Remainder of exact division; throws InternalError when b does not
/// divide a.
UniPoly divide_exact(const UniPoly& a, const UniPoly& b);

/// Monic greatest common divisor. gcd(0, 0) = 0 by convention.
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

/// True when p has no repeated roots, i.e. gcd(p, p') is constant.
/// Throws CurveError on the zero polynomial.
bool is_squarefree(const UniPoly& p);

}  // namespace gaussmap
