#pragma once

#include <optional>
#include <vector>

#include "statesum/laurent.hpp"

namespace statesum {

/// Exponent-wise difference between the closed-form value and the
/// recurrence oracle, or a note that the rational form failed to reduce.
struct Discrepancy {
  std::string note;
  struct Diff {
    int exp;
    Int expected;  // recurrence oracle coefficient
    Int actual;    // closed-form coefficient
  };
  std::vector<Diff> diffs;
};

struct ClosedFormResult {
  LaurentPoly value;  // the binding value: oracle when checked, else closed form
  bool in_t = false;
  std::optional<Discrepancy> discrepancy;
};

/// Jones polynomial of RT_n by Lucas evaluation in t:
///   t^(3n) * ((t + t^3 - t^4) U_{n+1} - t^3 U_n)
/// over U given by P = t^-2 - t^-1 + 2 - t + t^2, Q = 1. The bracket
/// coefficients are the ones consistent with the transfer recursion (the
/// n = 0 and n = 1 values pin them). check_oracle compares against rt_pi.
ClosedFormResult rt_jones_closed(int n, bool check_oracle = true);

/// Kauffman-Jones polynomial of RT'_n:
///   A^(-12n) * ((A^-4 + A^-6 - A^-10) U_{n+1} - (-A^-2 + A^-6 + A^-8) U_n)
/// over P = A^8 - A^4 + 2 - A^-4 + A^-8, Q = 1; coefficients pinned the
/// same way.
ClosedFormResult rtv_f_closed(int n, bool check_oracle = true);

/// Jones polynomial of KV_n per the published three-part closed form
/// (rational arithmetic, Lucas evaluation of both root systems). The value
/// is reduced exactly; any failure to reduce, or any difference from the
/// recurrence, is reported as a structured discrepancy with the recurrence
/// value binding. Never silently wrong.
ClosedFormResult kv_jones_closed(int n, bool check_oracle = true);

}  // namespace statesum
