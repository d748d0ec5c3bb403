#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "gaussmap/bipoly.hpp"
#include "gaussmap/curve.hpp"
#include "gaussmap/errors.hpp"
#include "gaussmap/ffelement.hpp"
#include "gaussmap/matrix.hpp"
#include "gaussmap/parse.hpp"

namespace {

using namespace gaussmap;

// Test-side genus formula; the library must reproduce it.
long genus_oracle(long n, long m, long d) {
  return ((n - 1) * (m - 1) + 1 - d) / 2;
}

long gcd_oracle(long a, long b) {
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Determinant by cofactor expansion, for the Sylvester oracle only.
Rational naive_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Rational acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_zero(m[0][j])) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(std::move(row));
    }
    Rational term = m[0][j] * naive_det(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

// Sylvester determinant of two specialized y-polynomials of exact degrees
// da and db.
Rational sylvester_det(const std::vector<Rational>& a,
                       const std::vector<Rational>& b) {
  const std::size_t da = a.size() - 1, db = b.size() - 1;
  const std::size_t n = da + db;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < db; ++i) {
    for (std::size_t j = 0; j <= da; ++j) m[i][i + j] = a[da - j];
  }
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j <= db; ++j) m[db + i][i + j] = b[db - j];
  }
  return naive_det(m);
}

std::vector<Rational> specialize(const BiPoly& p, const Rational& x0) {
  std::vector<Rational> out;
  for (long k = 0; k <= p.y_degree(); ++k) {
    out.push_back(p.coeff(static_cast<std::size_t>(k)).evaluate(x0));
  }
  return out;
}

Rational small(std::mt19937_64& rng) {
  return make_rational(static_cast<long>(rng() % 11) - 5);
}

UniPoly random_poly(std::mt19937_64& rng, std::size_t max_deg) {
  std::vector<Rational> c(rng() % (max_deg + 1) + 1);
  for (auto& q : c) q = small(rng);
  return UniPoly(std::move(c));
}

FFElement random_element(std::mt19937_64& rng, const CurvePtr& curve) {
  std::vector<RatFunc> coeffs;
  for (long b = 0; b < curve->n(); ++b) {
    coeffs.emplace_back(random_poly(rng, 4));
  }
  return FFElement(curve, std::move(coeffs));
}

BiPoly ypoly(std::vector<UniPoly> coeffs) { return BiPoly(std::move(coeffs)); }

}  // namespace

TEST_CASE("resultant follows the frozen sylvester conventions") {
  UniPoly f = parse_poly("x^8 - 1");
  BiPoly ysq_f = ypoly({-f, UniPoly::zero(), UniPoly::constant(1)});

  CHECK(resultant_y(ypoly({UniPoly::zero(), UniPoly::constant(1)}), ysq_f) ==
        -f);
  CHECK(resultant_y(BiPoly::constant(UniPoly::constant(1)), ysq_f) ==
        UniPoly::constant(1));
  CHECK(resultant_y(ypoly({-UniPoly::x(), UniPoly::constant(1)}), ysq_f) ==
        parse_poly("x^2") - f);
  // A constant in y contributes its deg_y(B)-th power.
  BiPoly cubic = ypoly({-f, UniPoly::zero(), UniPoly::zero(),
                        UniPoly::constant(1)});
  CHECK(resultant_y(BiPoly::constant(parse_poly("x^2 + 1")), cubic) ==
        parse_poly("x^2 + 1").pow(3));
  CHECK(resultant_y(BiPoly(), ysq_f) == UniPoly::zero());
}

TEST_CASE("resultant vanishes exactly on common roots") {
  // (y - x)(y - 1) and (y - x)(y + 2) share the factor y - x.
  BiPoly a = ypoly({UniPoly::x(), -(UniPoly::x() + UniPoly::constant(1)),
                    UniPoly::constant(1)});
  BiPoly b = ypoly({parse_poly("-2x"), parse_poly("2") - UniPoly::x(),
                    UniPoly::constant(1)});
  CHECK(resultant_y(a, b) == UniPoly::zero());

  // res(A, B) evaluates B at the roots of A: res(y - 1, y - 2) = B(1) = -1.
  BiPoly y_minus_1 = ypoly({UniPoly::constant(-1), UniPoly::constant(1)});
  BiPoly y_minus_2 = ypoly({UniPoly::constant(-2), UniPoly::constant(1)});
  CHECK(resultant_y(y_minus_1, y_minus_2) == UniPoly::constant(-1));
}

TEST_CASE("resultant specializes to the numeric sylvester determinant") {
  std::mt19937_64 rng(301);
  for (int it = 0; it < 30; ++it) {
    // deg_y exactly 2 on both sides; B monic.
    BiPoly a = ypoly({random_poly(rng, 3), random_poly(rng, 3),
                      UniPoly::constant(static_cast<long>(rng() % 3) + 1)});
    BiPoly b = ypoly({random_poly(rng, 3), random_poly(rng, 3),
                      UniPoly::constant(1)});
    UniPoly res = resultant_y(a, b);
    Rational x0 = small(rng);
    CHECK(res.evaluate(x0) ==
          sylvester_det(specialize(a, x0), specialize(b, x0)));
  }
}

TEST_CASE("superelliptic models carry the right invariants") {
  struct Row {
    long n;
    const char* f;
    long m;
  };
  const Row rows[] = {
      {2, "x^7 - 1", 7},  {2, "x^8 - 1", 8},  {3, "x^6 - 1", 6},
      {3, "x^9 - 1", 9},  {3, "x^10 - 1", 10}, {3, "x^13 - 1", 13},
      {4, "x^5 - 1", 5},  {4, "x^8 - 1", 8},  {5, "x^5 - 1", 5},
      {5, "x^6 - 1", 6},
  };
  for (const Row& row : rows) {
    CAPTURE(row.n);
    CAPTURE(row.f);
    CurvePtr c = CurveModel::superelliptic(row.n, parse_poly(row.f));
    long d = gcd_oracle(row.n, row.m);
    CHECK(c->n() == row.n);
    CHECK(c->m() == row.m);
    CHECK(c->d() == d);
    CHECK(c->genus() == genus_oracle(row.n, row.m, d));
    CHECK(c->is_superelliptic());
    CHECK(c->leading_coeff() == 1);
    CHECK(c->equation().monic_in_y());
  }
  CurvePtr scaled = CurveModel::superelliptic(2, parse_poly("2x^8 - 2"));
  CHECK(scaled->leading_coeff() == 2);
  CHECK(scaled->genus() == 3);
}

TEST_CASE("invalid models are rejected") {
  // (x^4 - 1)^2 is not squarefree.
  CHECK_THROWS_AS(
      CurveModel::superelliptic(2, parse_poly("x^8 - 2x^4 + 1")), CurveError);
  // gcd(4, 6) = 2 is neither 1 nor n.
  CHECK_THROWS_AS(CurveModel::superelliptic(4, parse_poly("x^6 - 1")),
                  CurveError);
  CHECK_THROWS_AS(CurveModel::superelliptic(1, parse_poly("x^8 - 1")),
                  CurveError);
  CHECK_THROWS_AS(CurveModel::superelliptic(2, parse_poly("x^2 - 1")),
                  CurveError);
  CHECK_THROWS_AS(CurveModel::superelliptic(2, UniPoly::zero()), CurveError);
}

TEST_CASE("defining relation drives multiplication") {
  const RatFunc one(Rational(1));
  UniPoly f8 = parse_poly("x^8 - 1");
  CurvePtr h = CurveModel::superelliptic(2, f8);
  FFElement y = FFElement::y_power(h, one, 1);
  CHECK(y * y == FFElement::from_ratfunc(h, RatFunc(f8)));

  UniPoly f9 = parse_poly("x^9 - 1");
  CurvePtr t = CurveModel::superelliptic(3, f9);
  FFElement yt = FFElement::y_power(t, one, 1);
  CHECK(yt * (yt * yt) == FFElement::from_ratfunc(t, RatFunc(f9)));

  // 1/y is stored as y^{n-1}/f; squaring it lands on 1/f.
  FFElement inv_y = FFElement::y_power(h, one, -1);
  CHECK(inv_y == FFElement::y_power(h, RatFunc(UniPoly::constant(1), f8), 1));
  CHECK(inv_y * inv_y ==
        FFElement::from_ratfunc(h, RatFunc(UniPoly::constant(1), f8)));

  // Negative powers reduce the same way for n = 3.
  FFElement inv_y2 = FFElement::y_power(t, one, -2);
  CHECK(inv_y2 == FFElement::y_power(t, RatFunc(UniPoly::constant(1), f9), 1));
}

TEST_CASE("field inverse matches the hand examples") {
  const RatFunc one(Rational(1));
  UniPoly f = parse_poly("x^8 - 1");
  CurvePtr h = CurveModel::superelliptic(2, f);

  FFElement y = FFElement::y_power(h, one, 1);
  CHECK(ff_inv(y) == FFElement::y_power(h, RatFunc(UniPoly::constant(1), f), 1));
  CHECK(ff_inv(FFElement::one(h)) == FFElement::one(h));

  // (x + y)(x - y) = x^2 - f, so the inverse is (x - y)/(x^2 - f).
  FFElement a(h, {RatFunc(UniPoly::x()), RatFunc(Rational(1))});
  UniPoly den = parse_poly("x^8 - x^2 - 1");  // monic form of -(x^2 - f)
  FFElement expected(h, {RatFunc(-UniPoly::x(), den),
                         RatFunc(UniPoly::constant(1), den)});
  CHECK(ff_inv(a) == expected);

  std::mt19937_64 rng(302);
  CurvePtr t = CurveModel::superelliptic(3, parse_poly("x^9 - 1"));
  for (int it = 0; it < 50; ++it) {
    FFElement e = random_element(rng, t);
    if (e.is_zero()) continue;
    CHECK(ff_mul(e, ff_inv(e)) == FFElement::one(t));
  }
  CHECK_THROWS_AS(ff_inv(FFElement::zero(t)), NotInvertibleError);
}

TEST_CASE("derivation satisfies the implicit-differentiation law") {
  const RatFunc one(Rational(1));
  UniPoly f = parse_poly("x^8 - 1");
  CurvePtr h = CurveModel::superelliptic(2, f);

  CHECK(ff_derive(FFElement::from_ratfunc(h, RatFunc(parse_poly("x^2")))) ==
        FFElement::from_ratfunc(h, RatFunc(parse_poly("2x"))));
  // d(y) = f' y / (2f).
  FFElement y = FFElement::y_power(h, one, 1);
  CHECK(ff_derive(y) ==
        FFElement::y_power(h, RatFunc(f.derivative(), Rational(2) * f), 1));

  // n y^{n-1} D(y) = f' for each model.
  for (long n : {2L, 3L, 5L}) {
    UniPoly fn = parse_poly(n == 5 ? "x^6 - 1" : "x^9 - 1");
    if (n == 2) fn = parse_poly("x^8 - 1");
    CurvePtr c = CurveModel::superelliptic(n, fn);
    FFElement yc = FFElement::y_power(c, one, 1);
    FFElement lhs = RatFunc(Rational(n)) *
                    ff_mul(FFElement::y_power(c, one, n - 1), ff_derive(yc));
    CHECK(lhs == FFElement::from_ratfunc(c, RatFunc(fn.derivative())));
  }
}

TEST_CASE("derivation is linear and Leibniz on random elements") {
  std::mt19937_64 rng(303);
  CurvePtr t = CurveModel::superelliptic(3, parse_poly("x^9 - 1"));
  for (int it = 0; it < 100; ++it) {
    FFElement a = random_element(rng, t);
    FFElement b = random_element(rng, t);
    CHECK(ff_derive(a * b) ==
          ff_derive(a) * b + a * ff_derive(b));
    CHECK(ff_derive(a + b) == ff_derive(a) + ff_derive(b));
  }
  CHECK(ff_derive(FFElement::one(t)) == FFElement::zero(t));
}

TEST_CASE("ring axioms hold on random triples") {
  std::mt19937_64 rng(304);
  CurvePtr t = CurveModel::superelliptic(3, parse_poly("x^6 - 1"));
  for (int it = 0; it < 30; ++it) {
    FFElement a = random_element(rng, t);
    FFElement b = random_element(rng, t);
    FFElement c = random_element(rng, t);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("elements of different curves do not mix") {
  CurvePtr a = CurveModel::superelliptic(2, parse_poly("x^8 - 1"));
  CurvePtr b = CurveModel::superelliptic(2, parse_poly("x^8 - 2"));
  CHECK(a->same_as(*CurveModel::superelliptic(2, parse_poly("x^8 - 1"))));
  CHECK_FALSE(a->same_as(*b));
  CHECK_THROWS_AS(FFElement::one(a) + FFElement::one(b), CurveMismatchError);
}

TEST_CASE("general models share arithmetic with their superelliptic twin") {
  const RatFunc one(Rational(1));
  UniPoly f = parse_poly("x^8 - 1");
  CurvePtr sup = CurveModel::superelliptic(2, f);
  CurvePtr gen = CurveModel::general(
      ypoly({-f, UniPoly::zero(), UniPoly::constant(1)}));

  CHECK_FALSE(gen->is_superelliptic());
  CHECK(gen->n() == 2);
  CHECK_THROWS_AS(gen->genus(), CurveError);

  FFElement ys = FFElement::y_power(sup, one, 1);
  FFElement yg(gen, {RatFunc(), RatFunc(Rational(1))});
  CHECK(ff_derive(ys).coeffs() == ff_derive(yg).coeffs());
  CHECK((yg * yg).coeffs() == (ys * ys).coeffs());

  CHECK_THROWS_AS(
      CurveModel::general(ypoly({UniPoly::x(), parse_poly("2")})),
      CurveError);
}

TEST_CASE("coordinatize measures linear independence") {
  const RatFunc one(Rational(1));
  CurvePtr h = CurveModel::superelliptic(2, parse_poly("x^8 - 1"));

  std::vector<KForm> three = {
      {FFElement::one(h), 0},
      {FFElement::from_ratfunc(h, RatFunc(UniPoly::x())), 0},
      {FFElement::y_power(h, one, 1), 0}};
  CHECK(rank(coordinatize(three)) == 3);

  // Products of the canonical forms x^i dx / y: five distinct monomials.
  std::vector<KForm> products;
  for (long i = 0; i < 3; ++i) {
    for (long j = i; j < 3; ++j) {
      FFElement e = ff_mul(
          FFElement::y_power(h, RatFunc(UniPoly::monomial(
                                    static_cast<std::size_t>(i))), -1),
          FFElement::y_power(h, RatFunc(UniPoly::monomial(
                                    static_cast<std::size_t>(j))), -1));
      products.push_back({e, 2});
    }
  }
  RatMatrix pm = coordinatize(products);
  CHECK(pm.rows() == 6);
  CHECK(rank(pm) == 5);

  std::vector<KForm> pair = {
      {FFElement::y_power(h, one, 1), 0},
      {FFElement::y_power(h, RatFunc(Rational(-1)), 1), 0}};
  CHECK(rank(coordinatize(pair)) == 1);

  // Rescaling an element never changes the rank.
  std::vector<KForm> scaled = three;
  scaled[1].elt = RatFunc(make_rational(7, 3)) * scaled[1].elt;
  CHECK(rank(coordinatize(scaled)) == rank(coordinatize(three)));

  // A zero element contributes a zero row, nothing else.
  std::vector<KForm> with_zero = three;
  with_zero.push_back({FFElement::zero(h), 0});
  CHECK(rank(coordinatize(with_zero)) == 3);
}

TEST_CASE("unramified shift suggestion") {
  CHECK(smallest_unramified_shift(parse_poly("x^8 - 1")) == 0);
  CHECK(smallest_unramified_shift(parse_poly("x^8 - x")) == 2);
  CHECK(smallest_unramified_shift(parse_poly("x")) == 1);
}
