#pragma once

#include "statesum/laurent.hpp"

namespace statesum {

/// Ratio of Laurent polynomials in canonical form: common polynomial and
/// integer factors removed, denominator shifted to lowest exponent 0 with a
/// positive lowest coefficient. Exact throughout; no truncation ever.
class RationalFunc {
 public:
  RationalFunc() : num_(), den_(1) {}
  RationalFunc(LaurentPoly n) : num_(std::move(n)), den_(1) {}  // NOLINT
  RationalFunc(LaurentPoly n, LaurentPoly d);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const;

  /// The polynomial value; throws NotDivisibleError if the denominator has
  /// not cancelled.
  LaurentPoly as_poly() const;

  RationalFunc& operator+=(const RationalFunc& o);
  RationalFunc& operator-=(const RationalFunc& o);
  RationalFunc& operator*=(const RationalFunc& o);
  RationalFunc& operator/=(const RationalFunc& o);

  bool operator==(const RationalFunc&) const = default;

 private:
  LaurentPoly num_;
  LaurentPoly den_;
  void reduce();
};

RationalFunc operator+(RationalFunc a, const RationalFunc& b);
RationalFunc operator-(RationalFunc a, const RationalFunc& b);
RationalFunc operator*(RationalFunc a, const RationalFunc& b);
RationalFunc operator/(RationalFunc a, const RationalFunc& b);

/// Content (gcd of coefficients, positive) of a nonzero polynomial.
Int poly_content(const LaurentPoly& p);

/// Primitive polynomial gcd; result has lowest exponent 0, positive lowest
/// coefficient, content 1. gcd(0, p) = normalized p.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace statesum
