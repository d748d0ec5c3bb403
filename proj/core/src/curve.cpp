#include "gaussmap/curve.hpp"

#include <numeric>

#include "gaussmap/errors.hpp"
#include "gaussmap/ffelement.hpp"

namespace gaussmap {

CurvePtr CurveModel::superelliptic(long n, UniPoly f) {
  if (n < 2) throw CurveError("cover degree must be at least 2");
  const long m = f.degree();
  if (m < 3) throw CurveError("deg f must be at least 3");
  if (!is_squarefree(f)) throw CurveError("f must be squarefree");
  const long d = std::gcd(n, m);
  if (d != 1 && d != n) {
    throw CurveError("gcd(n, deg f) must be 1 or n; got " +
                     std::to_string(d));
  }
  const long twice_genus = (n - 1) * (m - 1) + 1 - d;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw InternalError("genus formula produced a non-integer");
  }

  auto model = std::shared_ptr<CurveModel>(new CurveModel());
  model->n_ = n;
  model->superelliptic_ = true;
  model->f_ = f;
  model->m_ = m;
  model->c_ = f.leading();
  model->d_ = d;
  model->genus_ = twice_genus / 2;
  std::vector<UniPoly> eq(static_cast<std::size_t>(n) + 1);
  eq[0] = -f;
  eq[static_cast<std::size_t>(n)] = UniPoly::constant(1);
  model->equation_ = BiPoly(std::move(eq));
  // dy/dx = f' y / (n f), the pole-explicit form of f'/(n y^{n-1}).
  model->dy_.assign(static_cast<std::size_t>(n), RatFunc());
  model->dy_[1] = RatFunc(f.derivative(), Rational(n) * f);
  model->eq_tail_.assign(static_cast<std::size_t>(n), RatFunc());
  for (long i = 0; i < n; ++i) {
    const UniPoly& ei = model->equation_.coeff(static_cast<std::size_t>(i));
    if (!ei.is_zero()) model->eq_tail_[static_cast<std::size_t>(i)] = RatFunc(ei);
  }
  return model;
}

CurvePtr CurveModel::general(BiPoly equation) {
  const long n = equation.y_degree();
  if (n < 2) throw CurveError("equation must have y-degree at least 2");
  if (!equation.monic_in_y()) throw CurveError("equation must be monic in y");

  auto model = std::shared_ptr<CurveModel>(new CurveModel());
  model->n_ = n;
  model->superelliptic_ = false;
  model->equation_ = std::move(equation);
  model->dy_.assign(static_cast<std::size_t>(n), RatFunc());
  model->eq_tail_.assign(static_cast<std::size_t>(n), RatFunc());
  for (long i = 0; i < n; ++i) {
    const UniPoly& ei = model->equation_.coeff(static_cast<std::size_t>(i));
    if (!ei.is_zero()) model->eq_tail_[static_cast<std::size_t>(i)] = RatFunc(ei);
  }

  // Implicit differentiation: dy/dx = -E_x / E_y in the function field.
  const BiPoly& eq = model->equation_;
  std::vector<RatFunc> ex(static_cast<std::size_t>(n), RatFunc());
  std::vector<RatFunc> ey(static_cast<std::size_t>(n), RatFunc());
  for (long i = 0; i <= n; ++i) {
    UniPoly di = eq.coeff(static_cast<std::size_t>(i)).derivative();
    if (i < n && !di.is_zero()) ex[static_cast<std::size_t>(i)] = RatFunc(di);
    if (i >= 1) {
      ey[static_cast<std::size_t>(i - 1)] =
          RatFunc(Rational(i) * eq.coeff(static_cast<std::size_t>(i)));
    }
  }
  try {
    FFElement exe(model, std::move(ex));
    FFElement eye(model, std::move(ey));
    model->dy_ = (-(exe * ff_inv(eye))).coeffs();
  } catch (const NotInvertibleError&) {
    throw CurveError("equation is not squarefree in y");
  }
  return model;
}

const UniPoly& CurveModel::f() const {
  if (!superelliptic_) throw CurveError("model has no branch polynomial");
  return f_;
}

long CurveModel::m() const {
  if (!superelliptic_) throw CurveError("model has no branch polynomial");
  return m_;
}

const Rational& CurveModel::leading_coeff() const {
  if (!superelliptic_) throw CurveError("model has no branch polynomial");
  return c_;
}

long CurveModel::d() const {
  if (!superelliptic_) throw CurveError("model has no branch polynomial");
  return d_;
}

long CurveModel::genus() const {
  if (!superelliptic_) throw CurveError("genus unavailable for general models");
  return genus_;
}

long smallest_unramified_shift(const UniPoly& f) {
  for (long t = 0;; ++t) {
    if (!is_zero(f.evaluate(Rational(t)))) return t;
  }
}

}  // namespace gaussmap
