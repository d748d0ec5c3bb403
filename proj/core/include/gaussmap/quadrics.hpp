#pragma once

#include "gaussmap/gaussian.hpp"

namespace gaussmap {

/// Two pencils, (u0, u1) of functions and (w0, w1) of differentials, with
/// every product u_a w_b certified to lie in the span of the canonical
/// basis; the coordinates of the four products are stored. Such a pair
/// yields a quadric of rank at most 4 in I2.
struct AdjointPair {
  CurvePtr curve;
  KForm u0, u1;
  KForm w0, w1;
  // Canonical coordinates of u0 w0, u0 w1, u1 w0, u1 w1.
  std::vector<Rational> p00, p01, p10, p11;
};

/// Certifies the pair by solving the four exact linear systems expressing
/// u_a w_b in the canonical basis. Throws NotAdjointError when a product
/// falls outside the span.
AdjointPair make_adjoint_pair(const CanonicalBasis& basis, KForm u0,
                              KForm u1, KForm w0, KForm w1);

/// The quadric (u0 w0) . (u1 w1) - (u0 w1) . (u1 w0), "." the symmetric
/// product. Always satisfies the membership identity; rank is at most 4.
QuadricForm adjoint_quadric(const AdjointPair& pair);

/// Rank of the symmetric coefficient matrix, computed by congruence
/// elimination (symmetric row and column operations), not eigenvalues.
long quadric_rank(const QuadricForm& q);

/// The quadric attached to the pair (t_i, t_j) of fiber-vanishing forms
/// under the pencil (1, 1/x): psi(t_i ^ t_j) = (1 t_i).(x^-1 t_j) -
/// (1 t_j).(x^-1 t_i). Requires i < j, indices into subsystem_K_minus_F.
QuadricForm psi(const CurvePtr& curve, std::size_t i, std::size_t j);

/// The product (u0 u1' - u1 u0') (w0 w1' - w1 w0') of the two pencil
/// Wronskians, a weight-4 form.
KForm wronskian_product(const AdjointPair& pair);

/// Exact identity test: mu2(adjoint_quadric(pair)) against
/// wronskian_product(pair). A false return violates the factorization
/// law; callers treat it as a reportable failure.
bool factorization_check(const AdjointPair& pair);

}  // namespace gaussmap
