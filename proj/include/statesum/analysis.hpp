#pragma once

#include <string>
#include <vector>

#include "statesum/laurent.hpp"

namespace statesum {

/// Breadth of a polynomial in t: highest minus lowest exponent.
int breadth_t(const LaurentPoly& v_in_t);

enum class Verdict { certified_non_alternating, inconclusive };

struct AlternatingVerdict {
  int crossing_count = 0;
  int breadth = 0;
  Verdict verdict = Verdict::inconclusive;
  std::string rationale;
};

/// A connected irreducible alternating diagram's Jones breadth equals its
/// crossing count, so breadth < count certifies non-alternating. The
/// hypothesis (connected, irreducible) is the caller's assertion; equality
/// certifies nothing.
AlternatingVerdict alternating_certificate(int crossing_count, const LaurentPoly& v_in_t,
                                           bool connected_irreducible_asserted);

struct BoundViolation {
  int i;
  int rho_h;
  int rho_l;
};

struct BoundReport {
  int n = 0;
  int rho_h_limit = 0;
  int rho_l_limit = 0;
  std::vector<BoundViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the degree bounds of the folded KV class sums
/// f_i(n) = p_i(KV_n) * (-A^2-A^-2)^(i-1): rho_h <= 8n+14, rho_l >= -4n-10.
BoundReport kv_degree_bound_check(int n);

}  // namespace statesum
