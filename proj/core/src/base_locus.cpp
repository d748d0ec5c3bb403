#include "gaussmap/base_locus.hpp"

#include <algorithm>
#include <utility>

#include "gaussmap/errors.hpp"

namespace gaussmap {

namespace {

// Thrown inside a class computation when a modulus proves composite: g is
// a proper monic factor. The catcher replays the computation on g and on
// modulus/g separately.
struct SplitSignal {
  UniPoly g;
};

// --- modular polynomial arithmetic in Q[x]/q ------------------------------

UniPoly reduce(const UniPoly& a, const UniPoly& q) {
  return divmod(a, q).second;
}

/// Extended Euclid over Q[x]: returns (g, s) with s*a = g mod q, g monic.
std::pair<UniPoly, UniPoly> ext_gcd_mod(const UniPoly& a, const UniPoly& q) {
  UniPoly r0 = q, r1 = reduce(a, q);
  UniPoly s0, s1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [quot, rem] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    UniPoly s2 = s0 - quot * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.is_zero()) return {UniPoly(), UniPoly()};
  Rational lead_inv = Rational(1) / r0.leading();
  return {lead_inv * r0, lead_inv * s0};
}

/// Inverse of a in Q[x]/q. Throws SplitSignal when a is a zero divisor and
/// CurveError-free zero handling is up to callers (a = 0 mod q is a bug).
UniPoly mod_inverse(const UniPoly& a, const UniPoly& q) {
  auto [g, s] = ext_gcd_mod(a, q);
  if (g.is_zero()) throw InternalError("inverse of zero in a modular ring");
  if (g.degree() > 0) {
    if (g.degree() == q.degree()) {
      throw InternalError("inverse of zero in a modular ring");
    }
    throw SplitSignal{g};
  }
  return reduce(s, q);
}

/// Multiplicity of the squarefree modulus q in poly (minimum over the
/// irreducible factors of q). Throws SplitSignal when the factors of q
/// disagree, i.e. a gcd with q is proper.
long multiplicity(const UniPoly& poly, const UniPoly& q) {
  if (poly.is_zero()) throw InternalError("multiplicity of zero polynomial");
  UniPoly w = poly;
  long v = 0;
  for (;;) {
    UniPoly g = poly_gcd(w, q);
    if (g.degree() == 0) return v;
    if (g.degree() < q.degree()) throw SplitSignal{g};
    w = divide_exact(w, q);
    ++v;
  }
}

// --- truncated power series over Q ----------------------------------------

using PSeries = std::vector<Rational>;  // coefficients of t^0..t^{len-1}

PSeries ps_mul(const PSeries& a, const PSeries& b, std::size_t len) {
  PSeries r(len, Rational(0));
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (is_zero(a[i])) continue;
    const std::size_t jmax = std::min(len - i, b.size());
    for (std::size_t j = 0; j < jmax; ++j) {
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

PSeries ps_inv(const PSeries& a, std::size_t len) {
  if (a.empty() || is_zero(a[0])) {
    throw InternalError("series inverse of a non-unit");
  }
  PSeries r(len, Rational(0));
  Rational inv0 = Rational(1) / a[0];
  r[0] = inv0;
  for (std::size_t i = 1; i < len; ++i) {
    Rational acc = 0;
    const std::size_t jmax = std::min(i, a.size() - 1);
    for (std::size_t j = 1; j <= jmax; ++j) {
      acc += a[j] * r[i - j];
    }
    r[i] = -acc * inv0;
  }
  return r;
}

PSeries ps_from_reversed(const UniPoly& p, std::size_t len) {
  PSeries r(len, Rational(0));
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size() && i < len; ++i) {
    r[i] = c[c.size() - 1 - i];
  }
  return r;
}

/// (1 + u)^{b/n} with u a series of positive valuation.
PSeries ps_binom_power(const PSeries& u, long b, long n, std::size_t len) {
  PSeries acc(len, Rational(0));
  acc[0] = 1;
  PSeries term(len, Rational(0));
  term[0] = 1;
  Rational alpha(b, n);
  alpha.canonicalize();
  for (std::size_t i = 0; i + 1 < len; ++i) {
    Rational binom = (alpha - Rational(static_cast<long>(i))) /
                     Rational(static_cast<long>(i) + 1);
    term = ps_mul(term, u, len);
    for (Rational& t : term) t *= binom;
    bool all_zero = true;
    for (std::size_t j = 0; j < len; ++j) {
      acc[j] += term[j];
      if (!is_zero(term[j])) all_zero = false;
    }
    if (all_zero) break;
  }
  return acc;
}

// --- expansion of a form at infinity (d = n case) --------------------------

/// Component series of a form along t = 1/x: for each y-power b a shifted
/// series S_b with r_b(x) y^b = w^b * t^{shift_b} * S_b(t) * (1+u)^{b/n}
/// folded in, so the form equals sum_b w^b sum_i S_b[i] t^{shift_b + i}.
struct InfinityExpansion {
  std::vector<long> shift;     // per b; meaningless when series empty
  std::vector<PSeries> series; // per b; empty when r_b = 0
  long scan_lo = 0;            // smallest shift among nonzero components
  long scan_hi = 0;            // inclusive exactness bound
};

InfinityExpansion expand_at_infinity(const KForm& form) {
  const CurveModel& curve = *form.elt.curve();
  const long n = curve.n();
  const long m = curve.m();
  const long h = m / n;
  const long g = curve.genus();
  const long k = form.weight;

  InfinityExpansion exp;
  exp.shift.assign(static_cast<std::size_t>(n), 0);
  exp.series.resize(static_cast<std::size_t>(n));

  long lo = kOrderInfinite;
  for (long b = 0; b < n; ++b) {
    const RatFunc& r = form.elt.coeffs()[static_cast<std::size_t>(b)];
    if (r.is_zero()) continue;
    long s = r.den().degree() - r.num().degree() - b * h;
    exp.shift[static_cast<std::size_t>(b)] = s;
    lo = std::min(lo, s);
  }
  if (lo == kOrderInfinite) return exp;  // zero form

  // A nonzero weight-k form has order at most k(2g-2) at any place; with
  // ord = j - 2k the scan may need exponents through k(2g-2) + 2k.
  exp.scan_lo = lo;
  exp.scan_hi = k * (2 * g - 2) + 2 * k + 1;
  const std::size_t len =
      static_cast<std::size_t>(std::max<long>(exp.scan_hi - lo + 1, 1));

  // u(t) = reversed(f)/c - 1 has positive valuation.
  PSeries u = ps_from_reversed(curve.f(), len);
  Rational c_inv = Rational(1) / curve.leading_coeff();
  for (Rational& x : u) x *= c_inv;
  u[0] -= 1;

  for (long b = 0; b < n; ++b) {
    const RatFunc& r = form.elt.coeffs()[static_cast<std::size_t>(b)];
    if (r.is_zero()) continue;
    PSeries num = ps_from_reversed(r.num(), len);
    PSeries den = ps_from_reversed(r.den(), len);
    PSeries s = ps_mul(num, ps_inv(den, len), len);
    if (b > 0) {
      s = ps_mul(s, ps_binom_power(u, b, n, len), len);
    }
    exp.series[static_cast<std::size_t>(b)] = std::move(s);
  }
  return exp;
}

/// Coefficient of t^j as a polynomial in w of degree < n.
UniPoly infinity_coefficient(const InfinityExpansion& exp, long j) {
  std::vector<Rational> cw(exp.series.size(), Rational(0));
  for (std::size_t b = 0; b < exp.series.size(); ++b) {
    if (exp.series[b].empty()) continue;
    long idx = j - exp.shift[b];
    if (idx < 0 || idx >= static_cast<long>(exp.series[b].size())) continue;
    cw[b] = exp.series[b][static_cast<std::size_t>(idx)];
  }
  return UniPoly(std::move(cw));
}

// --- per-image class partitions --------------------------------------------

/// Refinement of the squarefree modulus q into parts on which the image
/// has a uniform ramification order, with that order.
std::vector<std::pair<UniPoly, long>> ram_partition(const KForm& form,
                                                    const UniPoly& q) {
  const CurveModel& curve = *form.elt.curve();
  const long n = curve.n();
  const long k = form.weight;
  try {
    long best = kOrderInfinite;
    for (long b = 0; b < n; ++b) {
      const RatFunc& r = form.elt.coeffs()[static_cast<std::size_t>(b)];
      if (r.is_zero()) continue;
      long v = multiplicity(r.num(), q) - multiplicity(r.den(), q);
      best = std::min(best, b + n * v);
    }
    if (best == kOrderInfinite) return {};  // zero form: no constraint
    return {{q, best + k * (n - 1)}};
  } catch (const SplitSignal& split) {
    auto left = ram_partition(form, split.g);
    auto right = ram_partition(form, divide_exact(q, split.g).monic());
    left.insert(left.end(), right.begin(), right.end());
    return left;
  }
}

/// Same refinement for the infinity classes of a d = n model.
std::vector<std::pair<UniPoly, long>> infinity_partition(
    const InfinityExpansion& exp, long weight, const UniPoly& q) {
  if (exp.series.empty() ||
      std::all_of(exp.series.begin(), exp.series.end(),
                  [](const PSeries& s) { return s.empty(); })) {
    return {};
  }
  UniPoly current = q;
  std::vector<std::pair<UniPoly, long>> out;
  for (long j = exp.scan_lo; j <= exp.scan_hi; ++j) {
    UniPoly cj = reduce(infinity_coefficient(exp, j), current);
    if (cj.is_zero()) continue;
    UniPoly g = poly_gcd(cj, current);
    if (g.degree() == 0) {
      out.emplace_back(current, j - 2 * weight);
      return out;
    }
    // The factors in g still vanish at level j; the complement is decided.
    out.emplace_back(divide_exact(current, g).monic(), j - 2 * weight);
    current = g;
  }
  throw InternalError("series truncation bound exceeded at infinity");
}

/// Common refinement: intersects a running class list with a partition.
/// Parts of the modulus not covered by the partition (zero image) keep the
/// order "infinite", encoded by dropping them from every partition, so we
/// intersect pairwise and track minima only where defined.
struct ClassOrders {
  UniPoly q;
  long min_ord;
};

std::vector<ClassOrders> refine(const std::vector<ClassOrders>& classes,
                                const std::vector<std::pair<UniPoly, long>>&
                                    partition) {
  std::vector<ClassOrders> out;
  for (const ClassOrders& c : classes) {
    UniPoly rest = c.q;
    for (const auto& [p, ord] : partition) {
      if (rest.degree() <= 0) break;
      UniPoly g = poly_gcd(rest, p);
      if (g.degree() == 0) continue;
      out.push_back({g, std::min(c.min_ord, ord)});
      rest = divide_exact(rest, g).monic();
    }
    // Places the partition does not cover: order unchanged.
    if (rest.degree() > 0) out.push_back({rest, c.min_ord});
  }
  return out;
}

// --- affine certification ---------------------------------------------------

using YModPoly = std::vector<UniPoly>;  // y-poly with coefficients mod q

void ystrip_mod(YModPoly& p, const UniPoly& q) {
  for (UniPoly& c : p) c = reduce(c, q);
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

YModPoly from_bipoly(const BiPoly& p, const UniPoly& q) {
  YModPoly out(p.coeffs().begin(), p.coeffs().end());
  ystrip_mod(out, q);
  return out;
}

/// Euclidean gcd in (Q[x]/q)[y]; q squarefree. Leading-coefficient
/// inversions throw SplitSignal when q proves composite.
YModPoly ygcd_mod(YModPoly a, YModPoly b, const UniPoly& q) {
  ystrip_mod(a, q);
  ystrip_mod(b, q);
  while (!b.empty()) {
    UniPoly lead_inv = mod_inverse(b.back(), q);
    // Reduce a modulo b.
    while (a.size() >= b.size() && !a.empty()) {
      UniPoly factor = reduce(a.back() * lead_inv, q);
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[i + shift] = reduce(a[i + shift] - factor * b[i], q);
      }
      while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    std::swap(a, b);
  }
  return a;
}

struct AffineOutcome {
  std::optional<AffineCertificate> certificate;
};

/// Searches the classes of G for a common y-root of all cleared images.
std::optional<AffineCertificate> affine_search(
    const std::vector<BiPoly>& cleared, const BiPoly& equation,
    UniPoly modulus) {
  std::vector<UniPoly> work{std::move(modulus)};
  while (!work.empty()) {
    UniPoly q = std::move(work.back());
    work.pop_back();
    try {
      YModPoly h = from_bipoly(equation, q);
      for (const BiPoly& nk : cleared) {
        h = ygcd_mod(std::move(h), from_bipoly(nk, q), q);
        if (h.size() == 1) break;  // constant in y
      }
      if (h.empty()) {
        throw InternalError("common y-gcd degenerated to zero");
      }
      if (h.size() == 1) {
        UniPoly g = poly_gcd(h[0], q);
        if (g.degree() == q.degree()) {
          throw InternalError("unit y-gcd reduced to zero");
        }
        if (g.degree() > 0) throw SplitSignal{g};
        continue;  // unit gcd: no common root over this class
      }
      // Nonconstant y-gcd: every root of q extends to a common zero.
      UniPoly lead_inv = mod_inverse(h.back(), q);
      std::vector<UniPoly> monic;
      monic.reserve(h.size());
      for (const UniPoly& c : h) monic.push_back(reduce(c * lead_inv, q));
      return AffineCertificate{q, BiPoly(std::move(monic))};
    } catch (const SplitSignal& split) {
      work.push_back(divide_exact(q, split.g).monic());
      work.push_back(split.g);
    }
  }
  return std::nullopt;
}

// --- shared validation -------------------------------------------------------

void check_family(const std::vector<KForm>& images) {
  if (images.empty()) throw Error("empty image family");
  const CurvePtr& curve = images.front().elt.curve();
  if (!curve->is_superelliptic()) {
    throw CurveError("base-locus analysis needs a superelliptic model");
  }
  bool any_nonzero = false;
  for (const KForm& im : images) {
    if (!curve->same_as(*im.elt.curve())) {
      throw CurveMismatchError("image family spans several curves");
    }
    if (im.weight != images.front().weight) {
      throw InternalError("image family with mixed weights");
    }
    if (!im.elt.is_zero()) any_nonzero = true;
    for (const RatFunc& r : im.elt.coeffs()) {
      if (!r.is_zero() && !divides_power_of(r.den(), curve->f())) {
        throw InternalError(
            "pipeline invariant violated: denominator not a power of f");
      }
    }
  }
  if (!any_nonzero) throw Error("all images are zero");
}

}  // namespace

RamPlaceClass ram_class_of(const CurvePtr& curve) {
  return {curve->f().monic()};
}

InfPlaceClass inf_class_of(const CurvePtr& curve) {
  if (curve->d() == 1) return {true, UniPoly()};
  // w^n - c, the residual equation of y/x^{m/n} at infinity.
  UniPoly q = UniPoly::monomial(static_cast<std::size_t>(curve->n()));
  q -= UniPoly::constant(curve->leading_coeff());
  return {false, std::move(q)};
}

long ord_at_ram(const KForm& form, const RamPlaceClass& place) {
  const CurveModel& curve = *form.elt.curve();
  UniPoly p = place.p.monic();
  if (p.degree() < 1) throw CurveError("ramification class must be nonconstant");
  if (!divmod(curve.f(), p).second.is_zero()) {
    throw CurveError("class polynomial does not divide f");
  }
  if (form.elt.is_zero()) return kOrderInfinite;
  long best = kOrderInfinite;
  for (const auto& [q, ord] : ram_partition(form, p)) {
    best = std::min(best, ord);
  }
  return best;
}

long ord_at_infinity(const KForm& form, const InfPlaceClass& place) {
  const CurveModel& curve = *form.elt.curve();
  const long n = curve.n();
  const long m = curve.m();
  const long k = form.weight;
  if (form.elt.is_zero()) return kOrderInfinite;
  if (curve.d() == 1) {
    if (!place.totally_ramified) {
      throw CurveError("model has a single totally ramified infinite place");
    }
    long best = kOrderInfinite;
    for (long b = 0; b < n; ++b) {
      const RatFunc& r = form.elt.coeffs()[static_cast<std::size_t>(b)];
      if (r.is_zero()) continue;
      long deg = r.num().degree() - r.den().degree();
      best = std::min(best, -n * deg - m * b);
    }
    return best + k * (-n - 1);
  }
  if (place.totally_ramified) {
    throw CurveError("model has split infinite places, not a single one");
  }
  InfinityExpansion exp = expand_at_infinity(form);
  UniPoly q = place.q.monic();
  for (long j = exp.scan_lo; j <= exp.scan_hi; ++j) {
    if (!reduce(infinity_coefficient(exp, j), q).is_zero()) {
      return j - 2 * k;
    }
  }
  throw InternalError("series truncation bound exceeded at infinity");
}

BaseLocusVerdict base_locus(const std::vector<KForm>& images) {
  check_family(images);
  const CurvePtr& curve = images.front().elt.curve();
  BaseLocusVerdict verdict;

  // (a) Ramification classes, refined until each image has uniform order.
  {
    std::vector<ClassOrders> classes{{curve->f().monic(), kOrderInfinite}};
    for (const KForm& im : images) {
      if (im.elt.is_zero()) continue;
      classes = refine(classes, ram_partition(im, curve->f().monic()));
    }
    std::sort(classes.begin(), classes.end(),
              [](const ClassOrders& a, const ClassOrders& b) {
                return a.q.coeffs() < b.q.coeffs();
              });
    for (ClassOrders& c : classes) {
      verdict.ram.emplace_back(RamPlaceClass{c.q}, c.min_ord);
    }
  }

  // (b) Common zeros away from ramification: clear denominators, eliminate
  // y by resultants, then certify y-roots over the remaining x-locus.
  {
    std::vector<BiPoly> cleared;
    UniPoly g_all;
    for (const KForm& im : images) {
      if (im.elt.is_zero()) continue;
      UniPoly common_den = UniPoly::constant(1);
      for (const RatFunc& r : im.elt.coeffs()) {
        if (!r.is_zero()) common_den = poly_lcm(common_den, r.den());
      }
      std::vector<UniPoly> ncoeffs;
      for (const RatFunc& r : im.elt.coeffs()) {
        ncoeffs.push_back(
            r.is_zero() ? UniPoly()
                        : r.num() * divide_exact(common_den, r.den()));
      }
      BiPoly nk(std::move(ncoeffs));
      UniPoly rk = resultant_y(nk, curve->equation());
      if (rk.is_zero()) {
        throw InternalError("vanishing resultant for a nonzero image");
      }
      cleared.push_back(std::move(nk));
      g_all = poly_gcd(g_all, rk);
    }
    // Remove the ramification locus and repeated roots.
    for (;;) {
      UniPoly shared = poly_gcd(g_all, curve->f());
      if (shared.degree() == 0) break;
      g_all = divide_exact(g_all, shared);
    }
    if (g_all.degree() > 0) {
      g_all = divide_exact(g_all, poly_gcd(g_all, g_all.derivative()));
    }
    if (g_all.degree() > 0) {
      verdict.affine =
          affine_search(cleared, curve->equation(), g_all.monic());
    }
  }

  // (c) Infinity classes.
  if (curve->d() == 1) {
    InfPlaceClass place{true, UniPoly()};
    long best = kOrderInfinite;
    for (const KForm& im : images) {
      if (im.elt.is_zero()) continue;
      best = std::min(best, ord_at_infinity(im, place));
    }
    verdict.infinity.emplace_back(std::move(place), best);
  } else {
    UniPoly q0 = inf_class_of(curve).q;
    std::vector<ClassOrders> classes{{q0, kOrderInfinite}};
    for (const KForm& im : images) {
      if (im.elt.is_zero()) continue;
      classes = refine(classes,
                       infinity_partition(expand_at_infinity(im),
                                          im.weight, q0));
    }
    std::sort(classes.begin(), classes.end(),
              [](const ClassOrders& a, const ClassOrders& b) {
                return a.q.coeffs() < b.q.coeffs();
              });
    for (ClassOrders& c : classes) {
      verdict.infinity.emplace_back(InfPlaceClass{false, c.q}, c.min_ord);
    }
  }

  bool ram_base = std::any_of(
      verdict.ram.begin(), verdict.ram.end(),
      [](const auto& e) { return e.second >= 1; });
  bool inf_base = std::any_of(
      verdict.infinity.begin(), verdict.infinity.end(),
      [](const auto& e) { return e.second >= 1; });
  verdict.is_free = !ram_base && !verdict.affine.has_value() && !inf_base;
  return verdict;
}

}  // namespace gaussmap
