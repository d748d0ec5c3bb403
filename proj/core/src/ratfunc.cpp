#include "gaussmap/ratfunc.hpp"

#include <utility>

#include "gaussmap/errors.hpp"

namespace gaussmap {

RatFunc::RatFunc(UniPoly num, UniPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InternalError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = UniPoly::constant(1);
    return;
  }
  UniPoly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
  const Rational& lead = den_.leading();
  if (lead != 1) {
    Rational inv = Rational(1) / lead;
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // With both inputs reduced, any common factor of the sum's numerator and
  // denominator must divide g = gcd of the denominators.
  UniPoly g = poly_gcd(a.den_, b.den_);
  if (g.degree() <= 0) {
    RatFunc r;
    r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
    if (r.num_.is_zero()) return RatFunc();
    r.den_ = a.den_ * b.den_;
    const Rational& lead = r.den_.leading();
    if (lead != 1) {
      Rational inv = Rational(1) / lead;
      r.num_ = inv * r.num_;
      r.den_ = inv * r.den_;
    }
    return r;
  }
  UniPoly bd = divide_exact(b.den_, g);
  UniPoly num = a.num_ * bd + b.num_ * divide_exact(a.den_, g);
  if (num.is_zero()) return RatFunc();
  // a.den_ * bd is the lcm of the denominators; with reduced inputs the
  // only cancellation left is against g, so one small gcd finishes the job.
  UniPoly den = a.den_ * bd;
  UniPoly h = poly_gcd(num, g);
  if (h.degree() > 0) {
    num = divide_exact(num, h);
    den = divide_exact(den, h);
  }
  RatFunc r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  const Rational& lead = r.den_.leading();
  if (lead != 1) {
    Rational inv = Rational(1) / lead;
    r.num_ = inv * r.num_;
    r.den_ = inv * r.den_;
  }
  return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  // Cross-cancel first: for reduced inputs gcd(ac, bd) = gcd(a,d)gcd(c,b).
  UniPoly g1 = poly_gcd(a.num_, b.den_);
  UniPoly g2 = poly_gcd(b.num_, a.den_);
  UniPoly n1 = g1.degree() > 0 ? divide_exact(a.num_, g1) : a.num_;
  UniPoly d2 = g1.degree() > 0 ? divide_exact(b.den_, g1) : b.den_;
  UniPoly n2 = g2.degree() > 0 ? divide_exact(b.num_, g2) : b.num_;
  UniPoly d1 = g2.degree() > 0 ? divide_exact(a.den_, g2) : a.den_;
  RatFunc r;
  r.num_ = n1 * n2;
  r.den_ = d1 * d2;
  const Rational& lead = r.den_.leading();
  if (lead != 1) {
    Rational inv = Rational(1) / lead;
    r.num_ = inv * r.num_;
    r.den_ = inv * r.den_;
  }
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  return a * b.inverse();
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw InternalError("inverse of the zero rational function");
  RatFunc r;
  r.num_ = den_;
  r.den_ = num_;
  const Rational& lead = r.den_.leading();
  if (lead != 1) {
    Rational inv = Rational(1) / lead;
    r.num_ = inv * r.num_;
    r.den_ = inv * r.den_;
  }
  return r;
}

RatFunc RatFunc::derivative() const {
  if (is_polynomial()) return RatFunc(num_.derivative());
  return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(),
                 den_ * den_);
}

RatFunc RatFunc::pow(unsigned e) const {
  RatFunc base(*this), acc(Rational(1));
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

UniPoly poly_lcm(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  UniPoly g = poly_gcd(a, b);
  return (divide_exact(a, g) * b).monic();
}

bool divides_power_of(const UniPoly& d, const UniPoly& f) {
  if (d.is_zero()) return false;
  UniPoly rest = d;
  while (rest.degree() > 0) {
    UniPoly g = poly_gcd(rest, f);
    if (g.degree() <= 0) return false;
    rest = divide_exact(rest, g);
  }
  return true;
}

}  // namespace gaussmap
