#include "gaussmap/quadrics.hpp"

#include <utility>

#include "gaussmap/errors.hpp"

namespace gaussmap {

namespace {

/// Coordinates of `form` in the canonical basis, obtained by solving the
/// exact linear system against the basis coordinate matrix.
std::vector<Rational> canonical_coordinates(const CanonicalBasis& basis,
                                            const KForm& form) {
  std::vector<KForm> stacked = basis.forms;
  stacked.push_back(form);
  RatMatrix coords = coordinatize(stacked);
  const std::size_t g = basis.forms.size();
  RatMatrix a(coords.cols(), g);
  std::vector<Rational> b(coords.cols());
  for (std::size_t c = 0; c < coords.cols(); ++c) {
    for (std::size_t i = 0; i < g; ++i) a.at(c, i) = coords.at(i, c);
    b[c] = coords.at(g, c);
  }
  auto x = solve(a, b);
  if (!x) {
    throw NotAdjointError("product lies outside the canonical system");
  }
  return *x;
}

FFElement wronskian(const KForm& a, const KForm& b) {
  return a.elt * ff_derive(b.elt) - b.elt * ff_derive(a.elt);
}

}  // namespace

AdjointPair make_adjoint_pair(const CanonicalBasis& basis, KForm u0,
                              KForm u1, KForm w0, KForm w1) {
  if (u0.weight != 0 || u1.weight != 0 || w0.weight != 1 || w1.weight != 1) {
    throw NotAdjointError("pencils must have weights 0 and 1");
  }
  std::vector<Rational> p00 = canonical_coordinates(basis, u0 * w0);
  std::vector<Rational> p01 = canonical_coordinates(basis, u0 * w1);
  std::vector<Rational> p10 = canonical_coordinates(basis, u1 * w0);
  std::vector<Rational> p11 = canonical_coordinates(basis, u1 * w1);
  return AdjointPair{basis.curve,    std::move(u0),  std::move(u1),
                     std::move(w0),  std::move(w1),  std::move(p00),
                     std::move(p01), std::move(p10), std::move(p11)};
}

QuadricForm adjoint_quadric(const AdjointPair& pair) {
  const std::size_t g = pair.p00.size();
  RatMatrix a(g, g);
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      Rational v = pair.p00[i] * pair.p11[j] + pair.p11[i] * pair.p00[j] -
                   pair.p01[i] * pair.p10[j] - pair.p10[i] * pair.p01[j];
      a.at(i, j) = v / 2;
    }
  }
  QuadricForm q{pair.curve, std::move(a)};
  if (!i2_membership(q)) {
    throw InternalError("adjoint quadric fails the membership identity");
  }
  return q;
}

long quadric_rank(const QuadricForm& q) {
  const std::size_t g = q.matrix.rows();
  if (q.matrix.cols() != g) throw InternalError("quadric matrix not square");
  std::vector<std::vector<Rational>> a(g, std::vector<Rational>(g));
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      a[i][j] = q.matrix.at(i, j);
      if (a[i][j] != q.matrix.at(j, i)) {
        throw InternalError("quadric matrix not symmetric");
      }
    }
  }
  std::size_t r = 0;
  for (std::size_t k = 0; k < g; ++k) {
    // Bring a nonzero entry to the (k, k) slot by congruence moves.
    std::size_t dk = k;
    while (dk < g && is_zero(a[dk][dk])) ++dk;
    if (dk < g) {
      std::swap(a[dk], a[k]);
      for (auto& row : a) std::swap(row[dk], row[k]);
    } else {
      std::size_t pi = g, pj = g;
      for (std::size_t i = k; i < g && pi == g; ++i) {
        for (std::size_t j = i + 1; j < g; ++j) {
          if (!is_zero(a[i][j])) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == g) break;  // remaining block is zero
      // row/col pi += row/col pj makes the (pi, pi) diagonal entry 2a_ij.
      for (std::size_t j = 0; j < g; ++j) a[pi][j] += a[pj][j];
      for (std::size_t i = 0; i < g; ++i) a[i][pi] += a[i][pj];
      std::swap(a[pi], a[k]);
      for (auto& row : a) std::swap(row[pi], row[k]);
    }
    Rational inv = Rational(1) / a[k][k];
    for (std::size_t i = k + 1; i < g; ++i) {
      if (is_zero(a[i][k])) continue;
      Rational factor = a[i][k] * inv;
      for (std::size_t j = 0; j < g; ++j) a[i][j] -= factor * a[k][j];
      for (std::size_t j = 0; j < g; ++j) a[j][i] -= factor * a[j][k];
    }
    ++r;
  }
  return static_cast<long>(r);
}

QuadricForm psi(const CurvePtr& curve, std::size_t i, std::size_t j) {
  CanonicalBasis basis = canonical_basis(curve);
  std::vector<KForm> t = subsystem_K_minus_F(basis);
  if (!(i < j && j < t.size())) {
    throw CurveError("psi needs indices i < j into the fiber subsystem");
  }
  auto [u0, u1] = pencil_F(curve);
  AdjointPair pair = make_adjoint_pair(basis, std::move(u0), std::move(u1),
                                       t[i], t[j]);
  return adjoint_quadric(pair);
}

KForm wronskian_product(const AdjointPair& pair) {
  KForm wu{wronskian(pair.u0, pair.u1), 1};
  KForm ww{wronskian(pair.w0, pair.w1), 3};
  return wu * ww;
}

bool factorization_check(const AdjointPair& pair) {
  return mu2(adjoint_quadric(pair)) == wronskian_product(pair);
}

}  // namespace gaussmap
