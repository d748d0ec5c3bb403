#include "gaussmap/numerology.hpp"

#include "gaussmap/errors.hpp"

namespace gaussmap {

long genus_product(const ProductCurveSpec& spec) {
  if (spec.g1 < 0 || spec.g2 < 0 || spec.d1 < 1 || spec.d2 < 1) {
    throw Error("product spec needs g1, g2 >= 0 and d1, d2 >= 1");
  }
  return 1 + (spec.g2 - 1) * spec.d1 + (spec.g1 - 1) * spec.d2 +
         spec.d1 * spec.d2;
}

long h0_kK(long g, long k) {
  if (g < 2) throw Error("h0_kK needs genus >= 2");
  if (k < 2) throw Error("h0_kK needs k >= 2");
  return (2 * k - 1) * (g - 1);
}

long dim_i2_expected(long g, bool hyperelliptic) {
  if (g < 3) throw Error("dim_i2_expected needs genus >= 3");
  return hyperelliptic ? (g - 1) * (g - 2) / 2 : (g - 2) * (g - 3) / 2;
}

bool surj_possible(long g) {
  return g >= 3 && dim_i2_expected(g, false) >= h0_kK(g, 4);
}

long surjectivity_threshold() {
  for (long g = 3;; ++g) {
    if (surj_possible(g)) return g;
  }
}

bool bel_criterion(long g, long l) { return 2 * l >= 8 * g + 5; }

bool wahl_product_hypotheses(const ProductCurveSpec& s) {
  const bool both_general = s.g1 >= 2 && s.g2 >= 2 && s.d1 >= 2 * s.g1 + 5 &&
                            s.d2 >= 2 * s.g2 + 5;
  const bool elliptic_factor = s.g1 >= 2 && s.g2 == 1 &&
                               s.d1 >= 2 * s.g1 + 5 && s.d2 >= 7;
  const bool rational_factor = s.g2 == 0 && s.d2 >= 7 &&
                               s.d2 * (s.g1 - 1) > 2 * s.d1 &&
                               2 * s.d1 >= 4 * s.g1 + 10;
  return both_general || elliptic_factor || rational_factor;
}

bool maroni_admissible(long g, long k) {
  return g - 4 <= 3 * k && 2 * k <= g - 2;
}

}  // namespace gaussmap
