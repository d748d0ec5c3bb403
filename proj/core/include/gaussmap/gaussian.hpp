#pragma once

#include <string>
#include <vector>

#include "gaussmap/canonical.hpp"

namespace gaussmap {

/// Quadric Q = sum_{i,j} a_ij w_i (x) w_j on the canonical system, stored
/// as the full symmetric g x g coefficient matrix in the canonical basis
/// ordering. Membership in I2 means sum a_ij f_i f_j = 0 exactly in the
/// function field.
struct QuadricForm {
  CurvePtr curve;
  RatMatrix matrix;
};

/// Image family of a Gaussian map together with its exact rank.
struct GaussMapImage {
  std::string source;
  std::vector<KForm> images;
  long rank = 0;
};

/// Kernel of the multiplication S2 H0(K) -> H0(2K), as quadric forms. The
/// kernel is computed against the symmetrized pair basis (i <= j, ordered
/// lexicographically), each vector normalized to leading coordinate 1, and
/// every returned quadric is re-verified against the exact membership
/// identity. Dimension = g(g+1)/2 - rank of the product family.
std::vector<QuadricForm> i2_basis(const CurvePtr& curve);

/// Same kernel computation against an arbitrary equal-weight family; used
/// for models without a built-in canonical basis. No genus check.
std::vector<QuadricForm> i2_from_forms(const std::vector<KForm>& forms);

/// Exact membership test: sum a_ij f_i f_j = 0 in the function field.
bool i2_membership(const QuadricForm& q);
bool i2_membership(const QuadricForm& q, const std::vector<KForm>& forms);

/// First Gaussian map on a family of independent equal-weight sections:
/// for each pair i < j (lexicographic) the Wronskian g_i g_j' - g_j g_i'
/// of weight 2w + 1. Throws DependentSectionsError when the sections are
/// linearly dependent.
GaussMapImage mu1(const std::vector<KForm>& sections,
                  const std::string& source = "mu1");

/// mu1 restricted to the forms vanishing on the fiber over x = 0.
GaussMapImage mu1_restricted(const CurvePtr& curve);

/// Second Gaussian map on a quadric in I2:
///   mu2(Q) = sum a_ij f_i'' f_j (dx)^4,
/// cross-checked against the equivalent - sum a_ij f_i' f_j' (dx)^4; any
/// disagreement is an internal error. Throws NotInI2Error when the
/// membership identity fails.
KForm mu2(const QuadricForm& q);

/// mu2 against a fixed family, with the first and second derivatives
/// computed once; cheap to apply to many quadrics on the same curve.
class Mu2Evaluator {
public:
  explicit Mu2Evaluator(const std::vector<KForm>& forms);
  KForm operator()(const QuadricForm& q) const;

private:
  std::vector<FFElement> f_, f1_, f2_;
};

/// mu2 applied to each quadric of an equal-curve family, sharing one set
/// of basis derivatives; images in family order plus exact rank. The
/// two-argument form evaluates against the given weight-1 family instead
/// of the canonical basis.
GaussMapImage mu2_image(const std::vector<QuadricForm>& quadrics);
GaussMapImage mu2_image(const std::vector<QuadricForm>& quadrics,
                        const std::vector<KForm>& forms);

/// mu2_image over a freshly computed i2_basis.
GaussMapImage rank_mu2(const CurvePtr& curve);

/// Pair ordering of the symmetrized basis: (0,0), (0,1), ..., (1,1), ...
std::vector<std::pair<std::size_t, std::size_t>> symmetric_pairs(
    std::size_t g);

}  // namespace gaussmap
