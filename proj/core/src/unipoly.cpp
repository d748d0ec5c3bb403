#include "gaussmap/unipoly.hpp"

#include <algorithm>

#include "gaussmap/errors.hpp"
#include "modarith.hpp"

namespace gaussmap {

namespace {

const Rational kZero = 0;

// --- integer polynomial helpers for the gcd kernel ----------------------

using ZPoly = std::vector<Integer>;  // same dense layout as UniPoly

void zstrip(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer zcontent(const ZPoly& p) {
  Integer g = 0;
  for (const Integer& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void zdivide_by(ZPoly& p, const Integer& d) {
  for (Integer& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

/// Clears denominators and removes integer content; the result is primitive
/// with positive leading coefficient. Input must be nonzero.
ZPoly primitive_image(const UniPoly& p) {
  Integer lcm = 1;
  for (const Rational& c : p.coeffs()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  ZPoly z;
  z.reserve(p.coeffs().size());
  for (const Rational& c : p.coeffs()) {
    z.push_back(Integer(c.get_num() * (lcm / c.get_den())));
  }
  Integer cont = zcontent(z);
  if (z.back() < 0) cont = -cont;
  zdivide_by(z, cont);
  return z;
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a reduced modulo b.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
  const long db = static_cast<long>(b.size()) - 1;
  const Integer& lb = b.back();
  long da = static_cast<long>(a.size()) - 1;
  long steps = da - db + 1;
  while (da >= db && !a.empty()) {
    Integer lead = a.back();
    for (Integer& c : a) c *= lb;
    for (long i = 0; i <= db; ++i) {
      a[static_cast<std::size_t>(da - db + i)] -= lead * b[static_cast<std::size_t>(i)];
    }
    zstrip(a);
    --steps;
    da = static_cast<long>(a.size()) - 1;
  }
  // Keep the defined power of lc(b) even when degrees drop early.
  while (steps-- > 0) {
    for (Integer& c : a) c *= lb;
  }
  return a;
}

ZPoly primitive_prs_gcd(ZPoly a, ZPoly b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = pseudo_rem(a, b);
    zstrip(r);
    if (!r.empty()) {
      Integer cont = zcontent(r);
      if (r.back() < 0) cont = -cont;
      zdivide_by(r, cont);
    }
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// --- modular coprimality fast path ---------------------------------------

using MPoly = std::vector<std::uint64_t>;

void mstrip(MPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

MPoly mod_image(const ZPoly& p, std::uint64_t q) {
  MPoly m;
  m.reserve(p.size());
  for (const Integer& c : p) m.push_back(mpz_fdiv_ui(c.get_mpz_t(), q));
  mstrip(m);
  return m;
}

MPoly mod_rem(MPoly a, const MPoly& b, std::uint64_t q) {
  const long db = static_cast<long>(b.size()) - 1;
  std::uint64_t inv_lb = detail::invmod(b.back(), q);
  while (static_cast<long>(a.size()) - 1 >= db) {
    long da = static_cast<long>(a.size()) - 1;
    std::uint64_t factor = detail::mulmod(a.back(), inv_lb, q);
    for (long i = 0; i <= db; ++i) {
      std::uint64_t& t = a[static_cast<std::size_t>(da - db + i)];
      std::uint64_t sub = detail::mulmod(factor, b[static_cast<std::size_t>(i)], q);
      t = (t + q - sub) % q;
    }
    mstrip(a);
    if (a.empty()) break;
  }
  return a;
}

/// True when the images of a and b mod q are provably coprime over Q.
/// Requires q to preserve both leading coefficients; returns false (no
/// verdict) otherwise.
bool coprime_mod(const ZPoly& a, const ZPoly& b, std::uint64_t q) {
  if (mpz_fdiv_ui(a.back().get_mpz_t(), q) == 0) return false;
  if (mpz_fdiv_ui(b.back().get_mpz_t(), q) == 0) return false;
  MPoly x = mod_image(a, q), y = mod_image(b, q);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    MPoly r = mod_rem(std::move(x), y, q);
    x = std::move(y);
    y = std::move(r);
  }
  return x.size() == 1;  // constant gcd mod q bounds the true gcd degree
}

}  // namespace

// --- UniPoly basics -------------------------------------------------------

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (Rational& c : coeffs_) c.canonicalize();
  strip();
}

UniPoly::UniPoly(std::initializer_list<Rational> coeffs)
    : UniPoly(std::vector<Rational>(coeffs)) {}

UniPoly UniPoly::constant(const Rational& c) {
  return UniPoly(std::vector<Rational>{c});
}

UniPoly UniPoly::monomial(std::size_t degree, const Rational& c) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::strip() {
  while (!coeffs_.empty() && gaussmap::is_zero(coeffs_.back())) {
    coeffs_.pop_back();
  }
}

const Rational& UniPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw InternalError("leading coefficient of zero");
  return coeffs_.back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r(*this);
  for (Rational& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  strip();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  strip();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (is_zero(a.coeffs_[i])) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return UniPoly(std::move(prod));
}

UniPoly operator*(const Rational& c, const UniPoly& p) {
  if (is_zero(c)) return UniPoly();
  UniPoly r(p);
  for (Rational& x : r.coeffs_) x *= c;
  return r;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
  }
  return UniPoly(std::move(d));
}

Rational UniPoly::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * at + coeffs_[i];
  }
  return acc;
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly base(*this), acc = UniPoly::constant(1);
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return Rational(1) / leading() * *this;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (gaussmap::is_zero(c)) continue;
    Rational a = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

// --- division and gcd -----------------------------------------------------

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw InternalError("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Rational> quot(
      static_cast<std::size_t>(a.degree() - b.degree() + 1), Rational(0));
  const long db = b.degree();
  const Rational& lb = b.leading();
  for (long i = a.degree(); i >= db; --i) {
    Rational q = rem[static_cast<std::size_t>(i)] / lb;
    if (is_zero(q)) continue;
    quot[static_cast<std::size_t>(i - db)] = q;
    for (long j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeff(static_cast<std::size_t>(j));
    }
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly divide_exact(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalError("inexact polynomial division");
  return q;
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) return UniPoly();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  ZPoly za = primitive_image(a), zb = primitive_image(b);
  // One cheap modular probe settles the common coprime case.
  if (coprime_mod(za, zb, 1073741827ull) ||
      coprime_mod(za, zb, 1073741831ull)) {
    return UniPoly::constant(1);
  }
  ZPoly g = primitive_prs_gcd(std::move(za), std::move(zb));
  std::vector<Rational> coeffs;
  coeffs.reserve(g.size());
  for (Integer& c : g) coeffs.emplace_back(std::move(c));
  return UniPoly(std::move(coeffs)).monic();
}

bool is_squarefree(const UniPoly& p) {
  if (p.is_zero()) throw CurveError("squarefree test on the zero polynomial");
  return poly_gcd(p, p.derivative()).degree() <= 0;
}

}  // namespace gaussmap
