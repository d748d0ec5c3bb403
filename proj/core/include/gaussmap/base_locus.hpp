#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "gaussmap/bipoly.hpp"
#include "gaussmap/ffelement.hpp"

namespace gaussmap {

/// Returned as the order of the zero form, which vanishes everywhere.
inline constexpr long kOrderInfinite = std::numeric_limits<long>::max();

/// Galois orbit of ramification points (alpha, 0) with p(alpha) = 0, keyed
/// by a squarefree monic divisor p of f. A composite p groups several
/// orbits; valuations then mean the minimum over the group.
struct RamPlaceClass {
  UniPoly p;
};

/// Places over x = infinity. For gcd(n, m) = 1 there is a single totally
/// ramified place. For gcd(n, m) = n the places correspond to the factors
/// of w^n - c, and a class is keyed by such a factor (default: the whole
/// squarefree polynomial w^n - c, meaning the minimum over all of them).
struct InfPlaceClass {
  bool totally_ramified = false;
  UniPoly q;  // in the auxiliary variable w; unused when totally ramified
};

/// Certificate of a common zero of an image family away from ramification
/// and infinity: every root x0 of the modulus admits a common y-root of
/// all images on the curve, namely a root of the stated y-polynomial.
struct AffineCertificate {
  UniPoly modulus;
  BiPoly y_gcd;
};

/// Three-part base-point report for an image family.
struct BaseLocusVerdict {
  std::vector<std::pair<RamPlaceClass, long>> ram;
  std::optional<AffineCertificate> affine;
  std::vector<std::pair<InfPlaceClass, long>> infinity;
  bool is_free = false;
};

/// The default classes for a curve: the single class of f, and the
/// infinity class (single place for d = 1, the whole w^n - c for d = n).
RamPlaceClass ram_class_of(const CurvePtr& curve);
InfPlaceClass inf_class_of(const CurvePtr& curve);

/// Order of a weight-k form along the places of `place`:
///   min_b (b + n v_p(r_b)) + k (n - 1),
/// minimized over the class; exact because the candidate orders are
/// pairwise distinct mod n. Returns kOrderInfinite for the zero form.
/// Throws CurveError when p does not divide f.
long ord_at_ram(const KForm& form, const RamPlaceClass& place);

/// Order of a weight-k form along the places of `place` at infinity.
/// For d = 1 this is the exact closed form
///   min_b (-n deg(r_b) - m b) + k (-n - 1);
/// for d = n it is read off a truncated Laurent expansion in t = 1/x with
/// y = w x^{m/n} (1 + u)^{1/n}, coefficients reduced modulo the class
/// polynomial. A nonzero form must show a nonzero coefficient within the
/// truncation bound k(2g-2) + 1; running past it is an internal error.
/// Returns kOrderInfinite for the zero form.
long ord_at_infinity(const KForm& form, const InfPlaceClass& place);

/// Full base-point certification of an equal-weight image family:
/// (a) minimum ram order per class, refining the class of f wherever
///     images have different valuations on different factors;
/// (b) certification of common zeros away from ramification, by y-resultants
///     followed by a dynamic-splitting gcd over Q[x]/G;
/// (c) minimum infinity order per class, refining w^n - c the same way.
/// is_free is true iff no part detects a common zero. Zero images are
/// ignored; an all-zero family is rejected.
BaseLocusVerdict base_locus(const std::vector<KForm>& images);

}  // namespace gaussmap
