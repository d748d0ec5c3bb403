#pragma once

#include <utility>
#include <vector>

#include "gaussmap/ffelement.hpp"

namespace gaussmap {

/// Ordered basis of the holomorphic differentials: the forms
/// x^a dx / y^b with 1 <= b <= n-1 and 0 <= a <= A(b), listed with b
/// ascending and a ascending inside each b. The ordering is a public
/// contract; quadric matrices are written in it.
struct CanonicalBasis {
  CurvePtr curve;
  std::vector<KForm> forms;                      // weight 1
  std::vector<std::pair<long, long>> exponents;  // (a, b) per form
};

/// Builds the basis from the exponent bounds
///   A(b) = b*(m/n) - 2            when gcd(n, m) = n,
///   A(b) = floor((b*m - 1)/n) - 1 when gcd(n, m) = 1,
/// and checks the count against the genus.
CanonicalBasis canonical_basis(const CurvePtr& curve);

/// The pencil {1, 1/x} spanning the sections of the fiber of x over 0.
/// Requires f(0) != 0; otherwise throws NeedsShiftError carrying the
/// smallest t >= 0 with f(t) != 0, so the caller can re-enter the model in
/// shifted coordinates. No silent shifting.
std::pair<KForm, KForm> pencil_F(const CurvePtr& curve);

/// The forms of the basis vanishing on the fiber over 0: exactly those
/// with a >= 1. Requires f(0) != 0.
std::vector<KForm> subsystem_K_minus_F(const CanonicalBasis& basis);

}  // namespace gaussmap
