#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace statesum {

using Int = boost::multiprecision::cpp_int;

struct ZeroPolynomialError : std::runtime_error {
  ZeroPolynomialError() : std::runtime_error("operation undefined for the zero polynomial") {}
};
struct NotDivisibleError : std::runtime_error {
  NotDivisibleError() : std::runtime_error("exact division leaves a nonzero remainder") {}
};
struct NotAPowerOfTError : std::runtime_error {
  explicit NotAPowerOfTError(int exp)
      : std::runtime_error("exponent " + std::to_string(exp) + " is not a multiple of 4") {}
};
struct PolyParseError : std::runtime_error {
  explicit PolyParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Sparse Laurent polynomial in a single variable with exact integer
/// coefficients. The variable is abstract; rendering names it (A or t).
/// Invariant: no stored coefficient is zero, so equality is structural.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int constant) { set(0, Int(constant)); }          // NOLINT: implicit by design
  LaurentPoly(const Int& constant) { set(0, constant); }        // NOLINT

  static LaurentPoly monomial(Int coeff, int exp) {
    LaurentPoly p;
    p.set(exp, std::move(coeff));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Int>& terms() const { return terms_; }
  Int coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
  }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  /// Multiply by A^k.
  LaurentPoly shifted(int k) const;
  LaurentPoly pow(unsigned n) const;

  /// Sum of coefficients (evaluation at 1); used by state-count checks.
  Int eval_one() const;

  bool operator==(const LaurentPoly&) const = default;

 private:
  std::map<int, Int> terms_;
  void set(int exp, Int c) {
    if (c != 0) terms_[exp] = std::move(c);
  }
  friend LaurentPoly operator*(const LaurentPoly&, const LaurentPoly&);
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

struct DegreeBounds {
  int rho_h = 0;
  int rho_l = 0;
  int breadth() const { return rho_h - rho_l; }
};

/// Highest/lowest occurring exponents. Throws ZeroPolynomialError on 0.
DegreeBounds degree_bounds(const LaurentPoly& p);

/// Exact quotient a/b; throws NotDivisibleError if the remainder is nonzero.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// Change of variable t = A^-4: exponent k of A becomes exponent -k/4 of t.
/// Every exponent must be divisible by 4, else NotAPowerOfTError.
LaurentPoly substitute_t(const LaurentPoly& p);

/// Inverse change of variable: exponent k of t becomes exponent -4k of A.
LaurentPoly substitute_t_inverse(const LaurentPoly& p);

/// Canonical text form: terms in decreasing exponent order, "c*V^k" with
/// " + "/" - " separators; exponent 0 renders as a bare integer, exponent 1
/// as V, unit coefficients drop the "c*". The zero polynomial renders "0".
std::string render(const LaurentPoly& p, std::string_view var = "A");

/// Parses the same grammar (term order free). Throws PolyParseError.
LaurentPoly parse_poly(std::string_view text, std::string_view var = "A");

/// Parameters of a Lucas sequence U_k: U_0 = 0, U_1 = 1,
/// U_k = P*U_{k-1} - Q*U_{k-2}. Equals (a^k - b^k)/(a - b) for a+b=P, ab=Q,
/// so symmetric root combinations evaluate without radicals.
struct LucasParams {
  LaurentPoly p;
  LaurentPoly q;
};

LaurentPoly lucas_u(const LucasParams& params, unsigned k);

}  // namespace statesum
