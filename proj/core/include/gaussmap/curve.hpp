#pragma once

#include <memory>
#include <vector>

#include "gaussmap/bipoly.hpp"
#include "gaussmap/ratfunc.hpp"

namespace gaussmap {

class CurveModel;
using CurvePtr = std::shared_ptr<const CurveModel>;

/// A plane model, monic of degree n in y, over which the function field
/// Q(x)[y]/(E) is built. The main constructor is the superelliptic one,
/// E = y^n - f(x); those models carry a genus and drive every holomorphy
/// computation. General monic models support field arithmetic only.
class CurveModel {
public:
  /// y^n = f(x) with f squarefree, deg f >= 3 and gcd(n, deg f) either 1
  /// or n. Throws CurveError otherwise.
  static CurvePtr superelliptic(long n, UniPoly f);

  /// Arbitrary monic-in-y model. Field arithmetic and differentiation
  /// work; genus, canonical bases and valuations are unavailable.
  static CurvePtr general(BiPoly equation);

  long n() const { return n_; }
  bool is_superelliptic() const { return superelliptic_; }
  const BiPoly& equation() const { return equation_; }

  /// Branch data; available only for superelliptic models.
  const UniPoly& f() const;
  long m() const;
  const Rational& leading_coeff() const;
  long d() const;
  long genus() const;

  /// dy/dx in the y-power frame: coefficient b multiplies y^b.
  const std::vector<RatFunc>& dy() const { return dy_; }

  /// Equation coefficients E_0..E_{n-1} as rational functions, cached for
  /// the product-rewrite rule y^n = -sum E_i y^i.
  const std::vector<RatFunc>& equation_tail() const { return eq_tail_; }

  /// Structural identity: same cover degree and same equation.
  bool same_as(const CurveModel& o) const {
    return n_ == o.n_ && equation_ == o.equation_;
  }

private:
  CurveModel() = default;

  long n_ = 0;
  bool superelliptic_ = false;
  BiPoly equation_;
  UniPoly f_;
  long m_ = 0;
  Rational c_;
  long d_ = 0;
  long genus_ = -1;
  std::vector<RatFunc> dy_;
  std::vector<RatFunc> eq_tail_;
};

/// Smallest integer t >= 0 with f(t) != 0; used to suggest the coordinate
/// shift x -> x + t when a construction needs f(0) != 0.
long smallest_unramified_shift(const UniPoly& f);

}  // namespace gaussmap
