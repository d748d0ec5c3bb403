#include "gaussmap/bipoly.hpp"

#include <utility>

#include "gaussmap/errors.hpp"

namespace gaussmap {

namespace {

/// Determinant of a square matrix over Q[x] by fraction-free elimination;
/// every division is exact in Q[x].
UniPoly det_poly(std::vector<std::vector<UniPoly>> a) {
  const std::size_t n = a.size();
  if (n == 0) return UniPoly::constant(1);
  UniPoly prev = UniPoly::constant(1);
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k].is_zero()) ++piv;
    if (piv == n) return UniPoly();
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = divide_exact(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      }
      a[i][k] = UniPoly();
    }
    prev = a[k][k];
  }
  return sign < 0 ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

}  // namespace

BiPoly::BiPoly(std::vector<UniPoly> coeffs) : coeffs_(std::move(coeffs)) {
  strip();
}

BiPoly BiPoly::constant(UniPoly p) {
  return BiPoly(std::vector<UniPoly>{std::move(p)});
}

void BiPoly::strip() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const UniPoly& BiPoly::coeff(std::size_t i) const {
  static const UniPoly kZero;
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

bool BiPoly::monic_in_y() const {
  return !coeffs_.empty() && coeffs_.back() == UniPoly::constant(1);
}

UniPoly resultant_y(const BiPoly& a, const BiPoly& b) {
  if (!b.monic_in_y() || b.y_degree() < 1) {
    throw CurveError("resultant_y needs a divisor monic in y");
  }
  if (a.is_zero()) return UniPoly();
  const std::size_t p = static_cast<std::size_t>(a.y_degree());
  const std::size_t q = static_cast<std::size_t>(b.y_degree());
  const std::size_t n = p + q;
  // Sylvester layout: q shifted copies of a's coefficients over p shifted
  // copies of b's, both in descending y-order.
  std::vector<std::vector<UniPoly>> s(n, std::vector<UniPoly>(n));
  for (std::size_t r = 0; r < q; ++r) {
    for (std::size_t i = 0; i <= p; ++i) {
      s[r][r + i] = a.coeff(p - i);
    }
  }
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t i = 0; i <= q; ++i) {
      s[q + r][r + i] = b.coeff(q - i);
    }
  }
  return det_poly(std::move(s));
}

}  // namespace gaussmap
