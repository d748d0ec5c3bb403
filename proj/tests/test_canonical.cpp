#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <utility>
#include <vector>

#include "gaussmap/base_locus.hpp"
#include "gaussmap/canonical.hpp"
#include "gaussmap/errors.hpp"
#include "gaussmap/matrix.hpp"
#include "gaussmap/parse.hpp"

namespace {

using namespace gaussmap;

long gcd_oracle(long a, long b) { return b == 0 ? a : gcd_oracle(b, a % b); }

long genus_oracle(long n, long m) {
  return ((n - 1) * (m - 1) + 1 - gcd_oracle(n, m)) / 2;
}

// Test-side exponent bound for x^a dx / y^b.
long bound_oracle(long n, long m, long b) {
  if (gcd_oracle(n, m) == n) return b * (m / n) - 2;
  return (b * m - 1) / n - 1;
}

// Order at the places over x = infinity of the monomial form
// x^a dx / y^b, straight from the local valuations:
//   d = 1: one place with v(x) = -n, v(y) = -m, v(dx) = -(n+1);
//   d = n: n places with v(x) = -1, v(y) = -m/n, v(dx) = -2.
long infinity_oracle(long n, long m, long a, long b, long k) {
  if (gcd_oracle(n, m) == n) return b * (m / n) - a - 2 * k;
  return m * b - n * a - (n + 1) * k;
}

KForm monomial_form(const CurvePtr& curve, long a, long b) {
  RatFunc xa(UniPoly::monomial(static_cast<std::size_t>(a)));
  return {FFElement::y_power(curve, xa, -b), 1};
}

}  // namespace

TEST_CASE("hyperelliptic and trigonal bases match the published shapes") {
  CurvePtr h = CurveModel::superelliptic(2, parse_poly("x^8 - 1"));
  CanonicalBasis hb = canonical_basis(h);
  REQUIRE(hb.forms.size() == 3);
  CHECK(hb.exponents ==
        std::vector<std::pair<long, long>>{{0, 1}, {1, 1}, {2, 1}});
  for (long i = 0; i < 3; ++i) {
    CHECK(hb.forms[static_cast<std::size_t>(i)] == monomial_form(h, i, 1));
  }

  CurvePtr t7 = CurveModel::superelliptic(3, parse_poly("x^9 - 1"));
  CanonicalBasis tb = canonical_basis(t7);
  REQUIRE(tb.forms.size() == 7);
  CHECK(tb.exponents ==
        std::vector<std::pair<long, long>>{
            {0, 1}, {1, 1}, {0, 2}, {1, 2}, {2, 2}, {3, 2}, {4, 2}});

  CurvePtr t9 = CurveModel::superelliptic(3, parse_poly("x^10 - 1"));
  CanonicalBasis tb9 = canonical_basis(t9);
  REQUIRE(tb9.forms.size() == 9);
  long count_b1 = 0, count_b2 = 0;
  for (const auto& [a, b] : tb9.exponents) {
    if (b == 1) {
      ++count_b1;
      CHECK(a <= 2);
    } else {
      CHECK(b == 2);
      ++count_b2;
      CHECK(a <= 5);
    }
  }
  CHECK(count_b1 == 3);
  CHECK(count_b2 == 6);
}

TEST_CASE("basis size, independence, and ordering across the model sweep") {
  for (long n = 2; n <= 5; ++n) {
    for (long m = 3; m <= 14; ++m) {
      long d = gcd_oracle(n, m);
      if (d != 1 && d != n) continue;
      long g = genus_oracle(n, m);
      if (g < 1) continue;
      CAPTURE(n);
      CAPTURE(m);
      CurvePtr curve = CurveModel::superelliptic(
          n, UniPoly::monomial(static_cast<std::size_t>(m)) -
                 UniPoly::constant(1));
      CanonicalBasis basis = canonical_basis(curve);

      CHECK(static_cast<long>(basis.forms.size()) == g);
      CHECK(rank(coordinatize(basis.forms)) == g);

      // Exponents must enumerate exactly the A(b) boxes, b then a ascending.
      std::vector<std::pair<long, long>> expected;
      for (long b = 1; b < n; ++b) {
        for (long a = 0; a <= bound_oracle(n, m, b); ++a) {
          expected.emplace_back(a, b);
        }
      }
      CHECK(basis.exponents == expected);
      for (std::size_t i = 0; i < basis.forms.size(); ++i) {
        auto [a, b] = basis.exponents[i];
        CHECK(basis.forms[i] == monomial_form(curve, a, b));
        CHECK(basis.forms[i].weight == 1);
      }
    }
  }
}

TEST_CASE("basis forms are regular everywhere and the bounds are tight") {
  RamPlaceClass everywhere;
  for (long n = 2; n <= 5; ++n) {
    for (long m = 3; m <= 14; ++m) {
      long d = gcd_oracle(n, m);
      if (d != 1 && d != n) continue;
      if (genus_oracle(n, m) < 1) continue;
      CAPTURE(n);
      CAPTURE(m);
      CurvePtr curve = CurveModel::superelliptic(
          n, UniPoly::monomial(static_cast<std::size_t>(m)) -
                 UniPoly::constant(1));
      CanonicalBasis basis = canonical_basis(curve);
      InfPlaceClass inf = inf_class_of(curve);
      RamPlaceClass ram = ram_class_of(curve);

      for (std::size_t i = 0; i < basis.forms.size(); ++i) {
        auto [a, b] = basis.exponents[i];
        long inf_ord = infinity_oracle(n, m, a, b, 1);
        CHECK(inf_ord >= 0);
        CHECK(ord_at_infinity(basis.forms[i], inf) == inf_ord);
        CHECK(ord_at_ram(basis.forms[i], ram) >= 0);
      }
      // One more power of x would acquire a pole at infinity.
      for (long b = 1; b < n; ++b) {
        CHECK(infinity_oracle(n, m, bound_oracle(n, m, b) + 1, b, 1) < 0);
      }
    }
  }
}

TEST_CASE("the standard pencil is (1, 1/x) when the fiber is unramified") {
  CurvePtr t7 = CurveModel::superelliptic(3, parse_poly("x^9 - 1"));
  auto [u0, u1] = pencil_F(t7);
  CHECK(u0.weight == 0);
  CHECK(u1.weight == 0);
  CHECK(u0.elt == FFElement::one(t7));
  CHECK(u1.elt == FFElement::from_ratfunc(
                      t7, RatFunc(UniPoly::constant(1), UniPoly::x())));

  CurvePtr h = CurveModel::superelliptic(2, parse_poly("x^8 - 1"));
  auto [h0, h1] = pencil_F(h);
  CHECK(h0.elt == FFElement::one(h));
  CHECK(h1.elt == FFElement::from_ratfunc(
                      h, RatFunc(UniPoly::constant(1), UniPoly::x())));
}

TEST_CASE("a ramified fiber over zero asks for a shift instead") {
  CurvePtr c = CurveModel::superelliptic(2, parse_poly("x^8 - x"));
  CHECK_THROWS_AS(pencil_F(c), NeedsShiftError);
  try {
    pencil_F(c);
  } catch (const NeedsShiftError& e) {
    CHECK(e.shift() == 2);  // f(0) = f(1) = 0, f(2) != 0
  }
  CHECK_THROWS_AS(subsystem_K_minus_F(canonical_basis(c)), NeedsShiftError);
}

TEST_CASE("the fiber subsystem keeps exactly the forms with a >= 1") {
  CurvePtr h = CurveModel::superelliptic(2, parse_poly("x^8 - 1"));
  CanonicalBasis hb = canonical_basis(h);
  std::vector<KForm> hsub = subsystem_K_minus_F(hb);
  REQUIRE(hsub.size() == 2);
  CHECK(hsub[0] == hb.forms[1]);
  CHECK(hsub[1] == hb.forms[2]);

  CurvePtr t4 = CurveModel::superelliptic(3, parse_poly("x^6 - 1"));
  std::vector<KForm> tsub = subsystem_K_minus_F(canonical_basis(t4));
  REQUIRE(tsub.size() == 2);
  CHECK(tsub[0] == monomial_form(t4, 1, 2));
  CHECK(tsub[1] == monomial_form(t4, 2, 2));

  // Dropping the a = 0 column removes one form per populated b row, so the
  // size is g minus the number of rows; that is g - (n - 1) whenever even
  // the b = 1 row is nonempty.
  for (long n = 2; n <= 5; ++n) {
    for (long m = 3; m <= 14; ++m) {
      long d = gcd_oracle(n, m);
      if (d != 1 && d != n) continue;
      long g = genus_oracle(n, m);
      if (g < n) continue;
      long rows = 0;
      for (long b = 1; b < n; ++b) {
        if (bound_oracle(n, m, b) >= 0) ++rows;
      }
      CurvePtr curve = CurveModel::superelliptic(
          n, UniPoly::monomial(static_cast<std::size_t>(m)) -
                 UniPoly::constant(1));
      CHECK(static_cast<long>(
                subsystem_K_minus_F(canonical_basis(curve)).size()) ==
            g - rows);
      if (bound_oracle(n, m, 1) >= 0) CHECK(rows == n - 1);
    }
  }
}
