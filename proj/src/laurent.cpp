#include "statesum/laurent.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace statesum {

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, -c);
    } else {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      auto it = r.terms_.find(ea + eb);
      if (it == r.terms_.end()) {
        r.terms_.emplace(ea + eb, ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly r = 1;
  for (unsigned i = 0; i < n; ++i) r *= *this;
  return r;
}

Int LaurentPoly::eval_one() const {
  Int s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

DegreeBounds degree_bounds(const LaurentPoly& p) {
  if (p.is_zero()) throw ZeroPolynomialError{};
  return {p.terms().rbegin()->first, p.terms().begin()->first};
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw ZeroPolynomialError{};
  if (a.is_zero()) return {};
  // Monomial shifts are units in the Laurent ring, so divide the shifted
  // ordinary polynomials and restore the exponent offset at the end.
  const int la = degree_bounds(a).rho_l;
  const int lb = degree_bounds(b).rho_l;
  LaurentPoly rem = a.shifted(-la);
  const LaurentPoly div = b.shifted(-lb);
  const int bdeg = degree_bounds(div).rho_h;
  const Int& blead = div.terms().rbegin()->second;
  LaurentPoly quot;
  while (!rem.is_zero()) {
    const int rdeg = degree_bounds(rem).rho_h;
    if (rdeg < bdeg) throw NotDivisibleError{};
    const Int& rlead = rem.terms().rbegin()->second;
    if (rlead % blead != 0) throw NotDivisibleError{};
    LaurentPoly term = LaurentPoly::monomial(rlead / blead, rdeg - bdeg);
    quot += term;
    rem -= term * div;
  }
  return quot.shifted(la - lb);
}

LaurentPoly substitute_t(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) {
    if (e % 4 != 0) throw NotAPowerOfTError(e);
    r += LaurentPoly::monomial(c, -e / 4);
  }
  return r;
}

LaurentPoly substitute_t_inverse(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r += LaurentPoly::monomial(c, -4 * e);
  return r;
}

std::string render(const LaurentPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c < 0;
    if (first) {
      if (neg) out << '-';
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    Int ac = neg ? Int(-c) : c;
    if (e == 0) {
      out << ac;
    } else {
      if (ac != 1) out << ac << '*';
      out << var;
      if (e != 1) out << '^' << e;
    }
  }
  return out.str();
}

namespace {

struct Parser {
  std::string_view text;
  std::string_view var;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() { return text[pos]; }

  [[noreturn]] void fail(const std::string& msg) {
    throw PolyParseError(msg + " at offset " + std::to_string(pos));
  }

  Int integer() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      ++digits;
    }
    if (digits == 0) fail("expected integer");
    return Int(std::string(text.substr(start, pos - start)));
  }

  bool match_var() {
    skip_ws();
    if (text.compare(pos, var.size(), var) == 0) {
      pos += var.size();
      return true;
    }
    return false;
  }

  // term := integer ['*' var ['^' int]] | var ['^' int]
  LaurentPoly term(int sign) {
    skip_ws();
    Int c = 1;
    bool have_coeff = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      c = integer();
      have_coeff = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
      } else if (!(pos < text.size() && text.compare(pos, var.size(), var) == 0)) {
        return LaurentPoly::monomial(sign * c, 0);
      }
    }
    if (!match_var()) {
      if (have_coeff) fail("expected variable after '*'");
      fail("expected term");
    }
    int e = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      Int ei = integer();
      e = static_cast<int>(ei);
    }
    return LaurentPoly::monomial(sign * c, e);
  }

  LaurentPoly parse() {
    LaurentPoly p;
    skip_ws();
    int sign = 1;
    if (!eof() && (peek() == '+' || peek() == '-')) {
      sign = peek() == '-' ? -1 : 1;
      ++pos;
    }
    if (eof()) fail("empty polynomial");
    p += term(sign);
    while (!eof()) {
      skip_ws();
      if (peek() == '+') {
        sign = 1;
      } else if (peek() == '-') {
        sign = -1;
      } else {
        fail("expected '+' or '-'");
      }
      ++pos;
      p += term(sign);
    }
    return p;
  }
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, std::string_view var) {
  Parser parser{text, var};
  return parser.parse();
}

LaurentPoly lucas_u(const LucasParams& params, unsigned k) {
  LaurentPoly prev;      // U_0
  LaurentPoly cur = 1;   // U_1
  if (k == 0) return prev;
  for (unsigned i = 1; i < k; ++i) {
    LaurentPoly next = params.p * cur - params.q * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace statesum
