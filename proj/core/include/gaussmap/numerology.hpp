#pragma once

namespace gaussmap {

/// A divisor class of bidegree (d1, d2) on a product of two curves of
/// genera g1 and g2; smooth members are curves whose genus and Gaussian
/// numerology the predicates below evaluate.
struct ProductCurveSpec {
  long g1 = 0;
  long g2 = 0;
  long d1 = 1;
  long d2 = 1;
};

/// Genus of a smooth curve in the class:
///   1 + (g2 - 1) d1 + (g1 - 1) d2 + d1 d2.
long genus_product(const ProductCurveSpec& spec);

/// Dimension of the k-canonical system, (2k - 1)(g - 1), for g, k >= 2.
long h0_kK(long g, long k);

/// Expected dimension of the quadric space of the canonical curve:
/// (g-1)(g-2)/2 in the hyperelliptic case, (g-2)(g-3)/2 otherwise; g >= 3.
long dim_i2_expected(long g, bool hyperelliptic);

/// True when the quadric space is at least as large as the target of the
/// second Gaussian map, so surjectivity is numerically possible.
bool surj_possible(long g);

/// Smallest genus for which surj_possible holds; evaluates to 18.
long surjectivity_threshold();

/// Surjectivity criterion for the first Gaussian map of a line bundle of
/// degree l on a curve of genus g: 2l >= 8g + 5.
bool bel_criterion(long g, long l);

/// The three hypothesis branches under which the second Gaussian map of a
/// product-curve class is surjective.
bool wahl_product_hypotheses(const ProductCurveSpec& spec);

/// Maroni admissibility of scroll invariant k for a trigonal curve of
/// genus g: (g-4)/3 <= k <= (g-2)/2 as exact integer inequalities.
bool maroni_admissible(long g, long k);

}  // namespace gaussmap
