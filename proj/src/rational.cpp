#include "statesum/rational.hpp"

#include <utility>

namespace statesum {

namespace {

Int gcd_int(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

LaurentPoly scale_down(const LaurentPoly& p, const Int& d) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r += LaurentPoly::monomial(c / d, e);
  return r;
}

LaurentPoly scale_up(const LaurentPoly& p, const Int& d) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r += LaurentPoly::monomial(c * d, e);
  return r;
}

/// Primitive part with lowest exponent 0 and positive lowest coefficient.
LaurentPoly normalize_primitive(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly q = p.shifted(-degree_bounds(p).rho_l);
  Int c = poly_content(q);
  if (q.terms().begin()->second < 0) c = -c;
  return scale_down(q, c);
}

/// Pseudo-remainder of a by b (both ordinary, b nonzero): leading-coefficient
/// scaled long division, so all arithmetic stays in the integers.
LaurentPoly pseudo_rem(LaurentPoly a, const LaurentPoly& b) {
  const int db = degree_bounds(b).rho_h;
  const Int& lb = b.terms().rbegin()->second;
  while (!a.is_zero() && degree_bounds(a).rho_h >= db) {
    const int da = degree_bounds(a).rho_h;
    const Int la = a.terms().rbegin()->second;
    a = scale_up(a, lb) - b * LaurentPoly::monomial(la, da - db);
  }
  return a;
}

}  // namespace

Int poly_content(const LaurentPoly& p) {
  Int g = 0;
  for (const auto& [e, c] : p.terms()) g = gcd_int(g, c);
  return g;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly x = normalize_primitive(a);
  LaurentPoly y = normalize_primitive(b);
  while (!y.is_zero()) {
    LaurentPoly r = normalize_primitive(pseudo_rem(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

RationalFunc::RationalFunc(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw ZeroPolynomialError{};
  reduce();
}

void RationalFunc::reduce() {
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  const LaurentPoly g = poly_gcd(num_, den_);
  if (degree_bounds(g).rho_h > 0) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  // move the denominator's monomial part into the numerator
  const int shift = degree_bounds(den_).rho_l;
  den_ = den_.shifted(-shift);
  num_ = num_.shifted(-shift);
  Int c = gcd_int(poly_content(num_), poly_content(den_));
  if (den_.terms().begin()->second < 0) c = -c;
  if (c != 1) {
    num_ = scale_down(num_, c);
    den_ = scale_down(den_, c);
  }
}

bool RationalFunc::is_poly() const { return den_ == LaurentPoly(1); }

LaurentPoly RationalFunc::as_poly() const {
  if (is_poly()) return num_;
  return exact_div(num_, den_);
}

RationalFunc& RationalFunc::operator+=(const RationalFunc& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RationalFunc& RationalFunc::operator-=(const RationalFunc& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RationalFunc& RationalFunc::operator*=(const RationalFunc& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

RationalFunc& RationalFunc::operator/=(const RationalFunc& o) {
  if (o.num_.is_zero()) throw ZeroPolynomialError{};
  num_ *= o.den_;
  den_ *= o.num_;
  reduce();
  return *this;
}

RationalFunc operator+(RationalFunc a, const RationalFunc& b) { return a += b; }
RationalFunc operator-(RationalFunc a, const RationalFunc& b) { return a -= b; }
RationalFunc operator*(RationalFunc a, const RationalFunc& b) { return a *= b; }
RationalFunc operator/(RationalFunc a, const RationalFunc& b) { return a /= b; }

}  // namespace statesum
