#pragma once

#include <vector>

#include "gaussmap/curve.hpp"
#include "gaussmap/matrix.hpp"

namespace gaussmap {

/// Element of Q(x)[y]/(E): a polynomial in y of degree below n with
/// rational-function coefficients, the unique normal form of its class.
/// Equality is coefficient-wise.
class FFElement {
public:
  FFElement(CurvePtr curve, std::vector<RatFunc> coeffs);

  static FFElement zero(CurvePtr curve);
  static FFElement one(CurvePtr curve);
  static FFElement from_ratfunc(CurvePtr curve, RatFunc r);
  /// r(x) * y^b. Negative b is eliminated on construction via
  /// y^{-1} = y^{n-1}/f (superelliptic models only).
  static FFElement y_power(CurvePtr curve, RatFunc r, long b);

  const CurvePtr& curve() const { return curve_; }
  const std::vector<RatFunc>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  bool operator==(const FFElement& o) const;
  bool operator!=(const FFElement& o) const { return !(*this == o); }

  FFElement operator-() const;
  friend FFElement operator+(const FFElement& a, const FFElement& b);
  friend FFElement operator-(const FFElement& a, const FFElement& b);
  friend FFElement operator*(const FFElement& a, const FFElement& b) {
    return ff_mul(a, b);
  }
  friend FFElement operator*(const RatFunc& c, const FFElement& a);

  friend FFElement ff_mul(const FFElement& a, const FFElement& b);
  friend FFElement ff_inv(const FFElement& a);
  friend FFElement ff_derive(const FFElement& a);

  std::string to_string() const;

private:
  CurvePtr curve_;
  std::vector<RatFunc> coeffs_;
};

/// A k-fold canonical form: elt * (dx)^k. Weight 0 is a function, weight 1
/// a differential, weight k a k-canonical form.
struct KForm {
  FFElement elt;
  long weight = 0;

  bool operator==(const KForm& o) const {
    return weight == o.weight && elt == o.elt;
  }
  bool operator!=(const KForm& o) const { return !(*this == o); }
};

/// Product of forms; weights add.
inline KForm operator*(const KForm& a, const KForm& b) {
  return {a.elt * b.elt, a.weight + b.weight};
}

/// Coordinate matrix of a family of equal-weight forms: all coefficients
/// are put over one common denominator and the resulting polynomial
/// coefficients are read off against the monomial frame x^a y^b, columns
/// ordered by (b, a). One row per element; rank equals the dimension of
/// the span.
RatMatrix coordinatize(const std::vector<KForm>& elements);

}  // namespace gaussmap
