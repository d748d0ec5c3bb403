#pragma once

#include <vector>

#include "gaussmap/unipoly.hpp"

namespace gaussmap {

/// Polynomial in y whose coefficients live in Q[x]. Coefficient i is the
/// coefficient of y^i; the zero polynomial is the empty vector.
class BiPoly {
public:
  BiPoly() = default;
  explicit BiPoly(std::vector<UniPoly> coeffs);

  static BiPoly constant(UniPoly p);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree in y; -1 for the zero polynomial.
  long y_degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const UniPoly& coeff(std::size_t i) const;
  const std::vector<UniPoly>& coeffs() const { return coeffs_; }
  bool monic_in_y() const;

  bool operator==(const BiPoly& o) const { return coeffs_ == o.coeffs_; }

private:
  void strip();
  std::vector<UniPoly> coeffs_;
};

/// Resultant of a and b with respect to y: the determinant of their
/// Sylvester matrix, a polynomial in x alone. It vanishes at x0 exactly
/// when a and b share a root y over the algebraic closure at x = x0.
/// b must be monic in y of positive y-degree; a = 0 gives 0.
UniPoly resultant_y(const BiPoly& a, const BiPoly& b);

}  // namespace gaussmap
