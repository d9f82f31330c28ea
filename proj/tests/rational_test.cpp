#include <doctest.h>

#include "statesum/rational.hpp"

using namespace statesum;

namespace {
LaurentPoly P(const char* s) { return parse_poly(s); }
}

TEST_CASE("gcd") {
  // canonical: lowest exponent 0, positive lowest coefficient, content 1
  CHECK(poly_gcd(P("A^8 - 1"), P("A^4 - 1")) == P("1 - A^4"));
  CHECK(poly_gcd(P("A^2 + 2 + A^-2"), P("A + A^-1")) == P("A^2 + 1"));
  CHECK(poly_gcd(P("A^4 + 2"), P("A^2 + 1")) == P("1"));
  CHECK(poly_gcd(LaurentPoly(), P("-2*A^3 - 2*A")) == P("A^2 + 1"));
}

TEST_CASE("canonical form") {
  const RationalFunc r{P("A^8 - 1"), P("A^6 + A^2")};  // (A^8-1)/(A^2(A^4+1)) -> (A^4-1)A^-2/1... reduced
  CHECK(r.num() == P("A^2 - A^-2"));
  CHECK(r.den() == P("1"));
  CHECK(r.is_poly());

  const RationalFunc s{P("A^2"), P("-A^5 - A")};  // denominator sign and monomial normalize
  CHECK(s.den() == P("A^4 + 1"));
  CHECK(s.num() == P("-A"));

  CHECK_THROWS_AS(RationalFunc(P("A"), LaurentPoly()), ZeroPolynomialError);
}

TEST_CASE("arithmetic") {
  const RationalFunc half_sum =
      RationalFunc{P("1"), P("1 + A^4")} + RationalFunc{P("A^4"), P("1 + A^4")};
  CHECK(half_sum.is_poly());
  CHECK(half_sum.as_poly() == P("1"));

  const RationalFunc x{P("A^2 - A^-2 + A^-6"), P("A^4 + 1")};
  CHECK(!x.is_poly());  // numerator coprime to A^4 + 1
  const RationalFunc y{P("A^6 + A^-6"), P("A^4 + 1")};
  CHECK(y.is_poly());  // A^12 + 1 = (A^4 + 1)(A^8 - A^4 + 1)
  CHECK(y.as_poly() == P("A^2 - A^-2 + A^-6"));
  CHECK((x * RationalFunc(P("1 - A^8"))).is_poly());  // the factor cancels the denominator

  const RationalFunc q = RationalFunc{P("A^2 - 1")} / RationalFunc{P("A - 1")};
  CHECK(q.is_poly());
  CHECK(q.as_poly() == P("A + 1"));
  CHECK_THROWS_AS(RationalFunc(P("1")) / RationalFunc(LaurentPoly()), ZeroPolynomialError);

  const RationalFunc not_poly{P("A^4 + 2"), P("A^2 + 1")};
  CHECK(!not_poly.is_poly());
  CHECK_THROWS_AS(not_poly.as_poly(), NotDivisibleError);
}
