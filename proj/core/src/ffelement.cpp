#include "gaussmap/ffelement.hpp"

#include <algorithm>

#include "gaussmap/errors.hpp"

namespace gaussmap {

namespace {

void check_same_curve(const FFElement& a, const FFElement& b) {
  if (a.curve() == b.curve()) return;
  if (!a.curve()->same_as(*b.curve())) {
    throw CurveMismatchError("elements belong to different curves");
  }
}

// Polynomials in y over Q(x), used only by the inversion routine. Unlike
// FFElement these have no fixed length.
using YPoly = std::vector<RatFunc>;

void ystrip(YPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

YPoly ysub_scaled(YPoly a, const YPoly& b, const RatFunc& s,
                  std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift);
  for (std::size_t i = 0; i < b.size(); ++i) {
    a[i + shift] -= s * b[i];
  }
  ystrip(a);
  return a;
}

/// Remainder and the transform it applies: returns (q, r) with a = q b + r.
std::pair<YPoly, YPoly> ydivmod(YPoly a, const YPoly& b) {
  YPoly q;
  ystrip(a);
  if (b.empty()) throw InternalError("y-polynomial division by zero");
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, RatFunc());
  const RatFunc lead_inv = b.back().inverse();
  while (a.size() >= b.size() && !a.empty()) {
    RatFunc c = a.back() * lead_inv;
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    a = ysub_scaled(std::move(a), b, c, shift);
    if (a.size() == b.size() + shift) {
      // Leading term must have cancelled exactly.
      throw InternalError("y-division failed to reduce degree");
    }
  }
  ystrip(q);
  return {q, a};
}

YPoly ymul(const YPoly& a, const YPoly& b) {
  if (a.empty() || b.empty()) return {};
  YPoly p(a.size() + b.size() - 1, RatFunc());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      p[i + j] += a[i] * b[j];
    }
  }
  ystrip(p);
  return p;
}

YPoly ysub(YPoly a, const YPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  ystrip(a);
  return a;
}

}  // namespace

FFElement::FFElement(CurvePtr curve, std::vector<RatFunc> coeffs)
    : curve_(std::move(curve)), coeffs_(std::move(coeffs)) {
  if (!curve_) throw InternalError("element without a curve");
  if (coeffs_.size() != static_cast<std::size_t>(curve_->n())) {
    throw InternalError("element with wrong coefficient count");
  }
}

FFElement FFElement::zero(CurvePtr curve) {
  std::size_t n = static_cast<std::size_t>(curve->n());
  return FFElement(std::move(curve), std::vector<RatFunc>(n, RatFunc()));
}

FFElement FFElement::one(CurvePtr curve) {
  return from_ratfunc(std::move(curve), RatFunc(Rational(1)));
}

FFElement FFElement::from_ratfunc(CurvePtr curve, RatFunc r) {
  FFElement e = zero(std::move(curve));
  e.coeffs_[0] = std::move(r);
  return e;
}

FFElement FFElement::y_power(CurvePtr curve, RatFunc r, long b) {
  const long n = curve->n();
  if (b < 0 || b >= n) {
    if (!curve->is_superelliptic()) {
      throw CurveError("y-power normalization needs a superelliptic model");
    }
    RatFunc f{curve->f()};
    while (b < 0) {
      b += n;
      r = r / f;
    }
    while (b >= n) {
      b -= n;
      r = r * f;
    }
  }
  FFElement e = zero(std::move(curve));
  e.coeffs_[static_cast<std::size_t>(b)] = std::move(r);
  return e;
}

bool FFElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const RatFunc& r) { return r.is_zero(); });
}

bool FFElement::operator==(const FFElement& o) const {
  check_same_curve(*this, o);
  return coeffs_ == o.coeffs_;
}

FFElement FFElement::operator-() const {
  FFElement r(*this);
  for (RatFunc& c : r.coeffs_) c = -c;
  return r;
}

FFElement operator+(const FFElement& a, const FFElement& b) {
  check_same_curve(a, b);
  FFElement r(a);
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
    r.coeffs_[i] += b.coeffs_[i];
  }
  return r;
}

FFElement operator-(const FFElement& a, const FFElement& b) {
  return a + (-b);
}

FFElement operator*(const RatFunc& c, const FFElement& a) {
  FFElement r(a);
  for (RatFunc& x : r.coeffs_) x = c * x;
  return r;
}

FFElement ff_mul(const FFElement& a, const FFElement& b) {
  check_same_curve(a, b);
  const std::size_t n = a.coeffs_.size();
  std::vector<RatFunc> conv(2 * n - 1, RatFunc());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  // Rewrite y^t for t >= n via y^n = -sum_{i<n} E_i y^i.
  const std::vector<RatFunc>& tail = a.curve_->equation_tail();
  for (std::size_t t = 2 * n - 2; t >= n; --t) {
    if (conv[t].is_zero()) continue;
    RatFunc c = std::move(conv[t]);
    conv[t] = RatFunc();
    for (std::size_t i = 0; i < n; ++i) {
      if (tail[i].is_zero()) continue;
      conv[t - n + i] -= c * tail[i];
    }
  }
  conv.resize(n);
  return FFElement(a.curve_, std::move(conv));
}

FFElement ff_inv(const FFElement& a) {
  if (a.is_zero()) throw NotInvertibleError("inverse of zero");
  const std::size_t n = a.coeffs_.size();
  // Extended Euclid in Q(x)[y] against the defining equation.
  YPoly r0(n + 1), t0, t1{RatFunc(Rational(1))};
  for (std::size_t i = 0; i <= n; ++i) {
    r0[i] = RatFunc(a.curve_->equation().coeff(i));
  }
  YPoly r1 = a.coeffs_;
  ystrip(r1);
  while (!r1.empty()) {
    auto [q, r] = ydivmod(std::move(r0), r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    YPoly t2 = ysub(std::move(t0), ymul(q, t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) {
    throw NotInvertibleError("element is a zero divisor");
  }
  RatFunc scale = r0[0].inverse();
  std::vector<RatFunc> inv(n, RatFunc());
  for (std::size_t i = 0; i < t0.size(); ++i) inv[i] = scale * t0[i];
  return FFElement(a.curve_, std::move(inv));
}

FFElement ff_derive(const FFElement& a) {
  const std::size_t n = a.coeffs_.size();
  // d(sum r_b y^b) = sum r_b' y^b + (sum b r_b y^{b-1}) dy.
  std::vector<RatFunc> dx_part(n);
  std::vector<RatFunc> dy_factor(n, RatFunc());
  for (std::size_t b = 0; b < n; ++b) {
    dx_part[b] = a.coeffs_[b].derivative();
    if (b >= 1) {
      dy_factor[b - 1] = RatFunc(Rational(static_cast<long>(b))) * a.coeffs_[b];
    }
  }
  FFElement result(a.curve_, std::move(dx_part));
  FFElement py(a.curve_, std::move(dy_factor));
  if (!py.is_zero()) {
    FFElement dy(a.curve_, a.curve_->dy());
    result = result + py * dy;
  }
  return result;
}

std::string FFElement::to_string() const {
  std::string out;
  for (std::size_t b = 0; b < coeffs_.size(); ++b) {
    if (coeffs_[b].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[b].to_string() + ")";
    if (b >= 1) out += "*y";
    if (b >= 2) out += "^" + std::to_string(b);
  }
  return out.empty() ? "0" : out;
}

RatMatrix coordinatize(const std::vector<KForm>& elements) {
  if (elements.empty()) return RatMatrix();
  const CurvePtr& curve = elements.front().elt.curve();
  const long weight = elements.front().weight;
  for (const KForm& e : elements) {
    check_same_curve(elements.front().elt, e.elt);
    if (e.weight != weight) {
      throw InternalError("coordinatize over mixed weights");
    }
  }
  const std::size_t n = static_cast<std::size_t>(curve->n());

  UniPoly common_den = UniPoly::constant(1);
  for (const KForm& e : elements) {
    for (const RatFunc& r : e.elt.coeffs()) {
      if (!r.is_zero()) common_den = poly_lcm(common_den, r.den());
    }
  }

  std::vector<std::vector<UniPoly>> cleared;
  cleared.reserve(elements.size());
  long max_deg = 0;
  for (const KForm& e : elements) {
    std::vector<UniPoly> row;
    row.reserve(n);
    for (const RatFunc& r : e.elt.coeffs()) {
      UniPoly p;
      if (!r.is_zero()) {
        p = r.num() * divide_exact(common_den, r.den());
        max_deg = std::max(max_deg, p.degree());
      }
      row.push_back(std::move(p));
    }
    cleared.push_back(std::move(row));
  }

  const std::size_t width = static_cast<std::size_t>(max_deg) + 1;
  RatMatrix m(elements.size(), n * width);
  for (std::size_t i = 0; i < cleared.size(); ++i) {
    for (std::size_t b = 0; b < n; ++b) {
      const UniPoly& p = cleared[i][b];
      for (std::size_t a = 0; a < p.coeffs().size(); ++a) {
        m.at(i, b * width + a) = p.coeff(a);
      }
    }
  }
  return m;
}

}  // namespace gaussmap
