#include "statesum/analysis.hpp"

#include "statesum/recurrence.hpp"

namespace statesum {

int breadth_t(const LaurentPoly& v_in_t) { return degree_bounds(v_in_t).breadth(); }

AlternatingVerdict alternating_certificate(int crossing_count, const LaurentPoly& v_in_t,
                                           bool connected_irreducible_asserted) {
  AlternatingVerdict out;
  out.crossing_count = crossing_count;
  out.breadth = breadth_t(v_in_t);
  if (!connected_irreducible_asserted) {
    out.verdict = Verdict::inconclusive;
    out.rationale = "connected/irreducible hypothesis not asserted";
    return out;
  }
  if (out.breadth < crossing_count) {
    out.verdict = Verdict::certified_non_alternating;
    out.rationale = "breadth " + std::to_string(out.breadth) + " < crossing count " +
                    std::to_string(crossing_count);
  } else {
    out.verdict = Verdict::inconclusive;
    out.rationale = "breadth " + std::to_string(out.breadth) +
                    " >= crossing count; the certificate is one-directional";
  }
  return out;
}

BoundReport kv_degree_bound_check(int n) {
  if (n < 1) throw std::invalid_argument("kv_degree_bound_check: n must be >= 1");
  BoundReport report;
  report.n = n;
  report.rho_h_limit = 8 * n + 14;
  report.rho_l_limit = -4 * n - 10;
  const PiVector total = kv_pi(n).total();
  const LaurentPoly d = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
  for (const auto& [i, p] : total.p_range()) {
    const LaurentPoly f = p * d.pow(static_cast<unsigned>(i - 1));
    if (f.is_zero()) continue;
    const DegreeBounds b = degree_bounds(f);
    if (b.rho_h > report.rho_h_limit || b.rho_l < report.rho_l_limit)
      report.violations.push_back({i, b.rho_h, b.rho_l});
  }
  return report;
}

}  // namespace statesum
