#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "gaussmap/base_locus.hpp"
#include "gaussmap/canonical.hpp"
#include "gaussmap/errors.hpp"
#include "gaussmap/gaussian.hpp"
#include "gaussmap/parse.hpp"

namespace {

using namespace gaussmap;

// Valuation of a polynomial along a squarefree modulus, by division
// counting; the minimum over the irreducible factors of p.
long v_p(const UniPoly& poly, const UniPoly& p) {
  REQUIRE(!poly.is_zero());
  UniPoly w = poly;
  long v = 0;
  while (divmod(w, p).second.is_zero()) {
    w = divide_exact(w, p);
    ++v;
  }
  return v;
}

long v_p(const RatFunc& r, const UniPoly& p) {
  return v_p(r.num(), p) - v_p(r.den(), p);
}

// Order of a weight-k form at the ramification places of p, straight from
// the defining minimum.
long ram_oracle(const KForm& form, const UniPoly& p) {
  long n = form.elt.curve()->n();
  long best = kOrderInfinite;
  for (std::size_t b = 0; b < form.elt.coeffs().size(); ++b) {
    const RatFunc& r = form.elt.coeffs()[b];
    if (r.is_zero()) continue;
    long cand = static_cast<long>(b) + n * v_p(r, p);
    if (cand < best) best = cand;
  }
  return best + form.weight * (n - 1);
}

CurvePtr elliptic_like() {
  return CurveModel::superelliptic(2, parse_poly("x^3 - x + 1"));
}

// r(x) * y^b as a weight-w form.
KForm yb_form(const CurvePtr& c, const RatFunc& r, long b, long w) {
  return {FFElement::y_power(c, r, b), w};
}

}  // namespace

TEST_CASE("orders at ramification match the defining minimum") {
  CurvePtr c = CurveModel::superelliptic(2, parse_poly("x^8 - 1"));
  RamPlaceClass whole = ram_class_of(c);
  CHECK(whole.p == c->f());

  KForm dx_over_y = canonical_basis(c).forms[0];
  CHECK(ord_at_ram(dx_over_y, whole) == 0);

  KForm quartic = yb_form(c, RatFunc(UniPoly::constant(1), c->f()), 0, 4);
  CHECK(ord_at_ram(quartic, whole) == 2);

  KForm just_y = yb_form(c, RatFunc(make_rational(1)), 1, 0);
  CHECK(ord_at_ram(just_y, whole) == 1);

  // x + (x^2/f) y as a weight-3 form: the b = 1 term wins the minimum.
  FFElement mixed = FFElement::from_ratfunc(c, RatFunc(UniPoly::x())) +
                    FFElement::y_power(
                        c, RatFunc(UniPoly::monomial(2), c->f()), 1);
  CHECK(ord_at_ram(KForm{mixed, 3}, whole) == 2);

  CHECK(ord_at_ram(KForm{FFElement::zero(c), 1}, whole) == kOrderInfinite);
  CHECK_THROWS_AS(ord_at_ram(dx_over_y, RamPlaceClass{UniPoly::x()}),
                  CurveError);
  CHECK_THROWS_AS(ord_at_ram(dx_over_y, RamPlaceClass{UniPoly::constant(2)}),
                  CurveError);
}

TEST_CASE("the order along an irreducible class is additive") {
  CurvePtr c = CurveModel::superelliptic(2, parse_poly("x^8 - 1"));
  RamPlaceClass at_one{parse_poly("x - 1")};
  std::mt19937_64 rng(77001);
  auto random_form = [&](long weight) {
    std::vector<RatFunc> coeffs;
    for (int b = 0; b < 2; ++b) {
      long num = static_cast<long>(rng() % 7) - 3;
      long fpow = static_cast<long>(rng() % 3);
      UniPoly den = c->f().pow(static_cast<unsigned>(fpow));
      coeffs.emplace_back(UniPoly{{make_rational(num), 1}}, den);
    }
    return KForm{FFElement(c, coeffs), weight};
  };
  int tried = 0;
  for (int iter = 0; iter < 40; ++iter) {
    KForm a = random_form(static_cast<long>(rng() % 3));
    KForm b = random_form(static_cast<long>(rng() % 3));
    if (a.elt.is_zero() || b.elt.is_zero()) continue;
    KForm ab = a * b;
    CHECK(ord_at_ram(ab, at_one) ==
          ord_at_ram(a, at_one) + ord_at_ram(b, at_one));
    CHECK(ord_at_ram(a, at_one) == ram_oracle(a, at_one.p));
    ++tried;
  }
  CHECK(tried >= 30);
}

TEST_CASE("orders at infinity: closed form and series expansion agree") {
  // Split-place model (d = n): v(x) = -1, v(y) = -m/n, v(dx) = -2 at each
  // of the n places.
  const std::pair<long, const char*> split[] = {{2, "x^8 - 1"},
                                                {3, "x^9 - 1"}};
  for (auto [n, fs] : split) {
    CAPTURE(n);
    CurvePtr c = CurveModel::superelliptic(n, parse_poly(fs));
    InfPlaceClass inf = inf_class_of(c);
    CHECK_FALSE(inf.totally_ramified);
    long mn = c->m() / n;
    long g = c->genus();
    for (long a = 0; a <= 3; ++a) {
      for (long b = -2; b <= 2; ++b) {
        for (long k = 0; k <= 2; ++k) {
          long expected = -a - mn * b - 2 * k;
          // The series scan is exact only through k(2g-2) + 1.
          if (expected > k * (2 * g - 2) + 1) continue;
          KForm form = yb_form(
              c, RatFunc(UniPoly::monomial(static_cast<std::size_t>(a))), b,
              k);
          CHECK(ord_at_infinity(form, inf) == expected);
        }
      }
    }
    CHECK_THROWS_AS(ord_at_infinity(yb_form(c, RatFunc(make_rational(1)), 0, 0),
                                    InfPlaceClass{true, UniPoly()}),
                    CurveError);
  }

  // Totally ramified model (d = 1): v(x) = -n, v(y) = -m, v(dx) = -(n+1).
  CurvePtr t = CurveModel::superelliptic(3, parse_poly("x^10 - 1"));
  InfPlaceClass tinf = inf_class_of(t);
  CHECK(tinf.totally_ramified);
  for (long a = 0; a <= 3; ++a) {
    for (long b = 0; b <= 2; ++b) {
      for (long k = 0; k <= 2; ++k) {
        KForm form = yb_form(
            t, RatFunc(UniPoly::monomial(static_cast<std::size_t>(a))), b, k);
        CHECK(ord_at_infinity(form, tinf) == -3 * a - 10 * b - 4 * k);
      }
    }
  }
  CHECK(ord_at_infinity(KForm{FFElement::zero(t), 2}, tinf) ==
        kOrderInfinite);
  CHECK_THROWS_AS(ord_at_infinity(yb_form(t, RatFunc(make_rational(1)), 0, 0),
                                  InfPlaceClass{false, UniPoly()}),
                  CurveError);

  // The canonical forms x^a dx/y on y^2 = x^8 - 1 have infinity order
  // g - 1 - a.
  CurvePtr h = CurveModel::superelliptic(2, parse_poly("x^8 - 1"));
  CanonicalBasis basis = canonical_basis(h);
  InfPlaceClass hinf = inf_class_of(h);
  for (long a = 0; a < 3; ++a) {
    CHECK(ord_at_infinity(basis.forms[static_cast<std::size_t>(a)], hinf) ==
          2 - a);
  }
}

TEST_CASE("the canonical system itself is base point free") {
  for (auto [n, fs] : {std::pair<long, const char*>{2, "x^8 - 1"},
                       {3, "x^9 - 1"},
                       {5, "-x^5 - 1"}}) {
    CAPTURE(n);
    CurvePtr c = CurveModel::superelliptic(n, parse_poly(fs));
    BaseLocusVerdict v = base_locus(canonical_basis(c).forms);
    CHECK(v.is_free);
    CHECK_FALSE(v.affine.has_value());
    for (const auto& [cls, ord] : v.ram) CHECK(ord < 1);
    for (const auto& [cls, ord] : v.infinity) CHECK(ord < 1);
  }
}

TEST_CASE("base loci of the second-map images across the model table") {
  // Hyperelliptic images are spanned by x^s/f (dx)^4: every ramification
  // point is a double base point.
  for (const char* fs : {"x^8 - 1", "x^10 - 1", "x^12 - 1"}) {
    CAPTURE(fs);
    CurvePtr c = CurveModel::superelliptic(2, parse_poly(fs));
    BaseLocusVerdict v = base_locus(rank_mu2(c).images);
    CHECK_FALSE(v.is_free);
    REQUIRE(v.ram.size() == 1);
    CHECK(v.ram[0].first.p == c->f());
    CHECK(v.ram[0].second == 2);
    CHECK_FALSE(v.affine.has_value());
  }

  CurvePtr trig = CurveModel::superelliptic(3, parse_poly("x^6 - 1"));
  BaseLocusVerdict tv = base_locus(rank_mu2(trig).images);
  CHECK_FALSE(tv.is_free);
  REQUIRE(tv.ram.size() == 1);
  CHECK(tv.ram[0].second == 4);

  CurvePtr quint = CurveModel::superelliptic(5, parse_poly("-x^5 - 1"));
  BaseLocusVerdict qv = base_locus(rank_mu2(quint).images);
  CHECK(qv.is_free);
}

TEST_CASE("affine certification finds designed common zeros") {
  CurvePtr c = elliptic_like();
  UniPoly one = UniPoly::constant(1);
  // y - 1 and x(y - 1) share the zero (0, 1) on y^2 = x^3 - x + 1.
  KForm y_minus_1{FFElement(c, {RatFunc(-one), RatFunc(one)}), 0};
  KForm x_y_minus_1{
      FFElement(c, {RatFunc(-UniPoly::x()), RatFunc(UniPoly::x())}), 0};
  BaseLocusVerdict v = base_locus({y_minus_1, x_y_minus_1});
  CHECK_FALSE(v.is_free);
  REQUIRE(v.affine.has_value());
  CHECK(v.affine->modulus == UniPoly::x());
  CHECK(v.affine->y_gcd == BiPoly({-one, one}));

  // Same shape with moduli x - 1 and x: the common zero over x = 1 is
  // reported first because the split factor is explored first.
  UniPoly xm1 = parse_poly("x - 1");
  KForm a{FFElement(c, {RatFunc(-xm1), RatFunc(xm1)}), 0};
  BaseLocusVerdict w = base_locus({a, x_y_minus_1});
  CHECK_FALSE(w.is_free);
  REQUIRE(w.affine.has_value());
  CHECK(w.affine->modulus == xm1);
  CHECK(w.affine->y_gcd == BiPoly({-one, one}));

  // y - 1 and y + 1 never vanish together.
  KForm y_plus_1{FFElement(c, {RatFunc(one), RatFunc(one)}), 0};
  BaseLocusVerdict f = base_locus({y_minus_1, y_plus_1});
  CHECK(f.is_free);
  CHECK_FALSE(f.affine.has_value());
}

TEST_CASE("classes split when the images tell the factors apart") {
  CurvePtr c = CurveModel::superelliptic(2, parse_poly("x^8 - 1"));
  KForm form = yb_form(c, RatFunc(parse_poly("x - 1"), c->f()), 1, 1);
  BaseLocusVerdict v = base_locus({form});
  REQUIRE(v.ram.size() == 2);
  CHECK(v.ram[0].first.p == parse_poly("x - 1"));
  CHECK(v.ram[0].second == 2);
  CHECK(v.ram[1].first.p ==
        parse_poly("x^7 + x^6 + x^5 + x^4 + x^3 + x^2 + x + 1"));
  CHECK(v.ram[1].second == 0);
}

TEST_CASE("orders sum to the degree of the pluricanonical divisor") {
  // On y^2 = x^8 - 1 a first-map image x^s/f (dx)^3 has divisor degree
  // 3(2g - 2) = 12: 8 ramification points, 2 points over infinity, and the
  // 2s affine zeros of x^s.
  CurvePtr c = CurveModel::superelliptic(2, parse_poly("x^8 - 1"));
  CanonicalBasis basis = canonical_basis(c);
  RamPlaceClass ram = ram_class_of(c);
  InfPlaceClass inf = inf_class_of(c);
  GaussMapImage image = mu1(basis.forms);
  std::size_t k = 0;
  for (long i = 0; i < 3; ++i) {
    for (long j = i + 1; j < 3; ++j, ++k) {
      const KForm& w = image.images[k];
      long s = i + j - 1;
      CHECK(8 * ord_at_ram(w, ram) + 2 * ord_at_infinity(w, inf) + 2 * s ==
            12);
    }
  }
}

TEST_CASE("the pencil Wronskian vanishes to order n - 1 at ramification") {
  for (auto [n, fs] : {std::pair<long, const char*>{2, "x^8 - 1"},
                       {3, "x^9 - 1"}}) {
    CAPTURE(n);
    CurvePtr c = CurveModel::superelliptic(n, parse_poly(fs));
    auto [u0, u1] = pencil_F(c);
    KForm w = mu1({u0, u1}).images[0];
    CHECK(ord_at_ram(w, ram_class_of(c)) == n - 1);
  }
}

TEST_CASE("family validation") {
  CurvePtr c = CurveModel::superelliptic(2, parse_poly("x^8 - 1"));
  CHECK_THROWS_AS(base_locus({}), Error);
  CHECK_THROWS_AS(base_locus({KForm{FFElement::zero(c), 1},
                              KForm{FFElement::zero(c), 1}}),
                  Error);
  CurvePtr other = elliptic_like();
  CHECK_THROWS_AS(base_locus({canonical_basis(c).forms[0],
                              KForm{FFElement::one(other), 1}}),
                  CurveMismatchError);
}
