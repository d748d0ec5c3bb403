#include "gaussmap/canonical.hpp"

#include "gaussmap/errors.hpp"

namespace gaussmap {

namespace {

void require_unramified_origin(const CurveModel& curve) {
  if (!is_zero(curve.f().evaluate(Rational(0)))) return;
  long t = smallest_unramified_shift(curve.f());
  throw NeedsShiftError(
      "fiber over x = 0 is ramified; substitute x -> x + " +
          std::to_string(t) + " and rebuild the model",
      t);
}

}  // namespace

CanonicalBasis canonical_basis(const CurvePtr& curve) {
  const long n = curve->n();
  const long m = curve->m();
  CanonicalBasis basis;
  basis.curve = curve;
  for (long b = 1; b <= n - 1; ++b) {
    const long bound = curve->d() == n ? b * (m / n) - 2 : (b * m - 1) / n - 1;
    for (long a = 0; a <= bound; ++a) {
      // x^a / y^b = x^a y^{n-b} / f.
      RatFunc coeff(UniPoly::monomial(static_cast<std::size_t>(a)),
                    curve->f());
      basis.forms.push_back(
          {FFElement::y_power(curve, std::move(coeff), n - b), 1});
      basis.exponents.emplace_back(a, b);
    }
  }
  if (static_cast<long>(basis.forms.size()) != curve->genus()) {
    throw InternalError("canonical basis count disagrees with the genus");
  }
  return basis;
}

std::pair<KForm, KForm> pencil_F(const CurvePtr& curve) {
  require_unramified_origin(*curve);
  KForm u0{FFElement::one(curve), 0};
  KForm u1{FFElement::from_ratfunc(
               curve, RatFunc(UniPoly::constant(1), UniPoly::x())),
           0};
  return {std::move(u0), std::move(u1)};
}

std::vector<KForm> subsystem_K_minus_F(const CanonicalBasis& basis) {
  require_unramified_origin(*basis.curve);
  std::vector<KForm> sub;
  for (std::size_t i = 0; i < basis.forms.size(); ++i) {
    if (basis.exponents[i].first >= 1) sub.push_back(basis.forms[i]);
  }
  return sub;
}

}  // namespace gaussmap
