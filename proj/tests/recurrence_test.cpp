#include <doctest.h>

#include "statesum/families.hpp"
#include "statesum/recurrence.hpp"

using namespace statesum;

namespace {
LaurentPoly P(const char* s) { return parse_poly(s); }
LaurentPoly Pt(const char* s) { return parse_poly(s, "t"); }
}

TEST_CASE("rt_pi seeds and totals") {
  const ClassifiedPi cp0 = rt_pi(0);
  CHECK(cp0.tables.at({0, 3}).at(2) == P("2*A^-1"));
  const PiVector t0 = cp0.total();
  CHECK(t0.at(1) == P("3*A"));
  CHECK(t0.at(2) == P("A^3 + 3*A^-1"));
  CHECK(t0.at(3) == P("A^-3"));

  CHECK(rt_pi(1).total() == enumerate_pi(gen_rt(1)));
  CHECK(rt_pi(2).total() == enumerate_pi(gen_rt(2)));
}

TEST_CASE("rt_pi state counts grow by 16 per step") {
  for (int n : {0, 1, 2, 3, 5}) {
    CHECK(rt_pi(n).total().total_states() == Int(1) << (4 * n + 3));
  }
}

TEST_CASE("rtv_pi seeds and totals") {
  const PiVector t0 = rtv_pi(0).total();
  CHECK(t0.at(1) == P("2 + A^2"));
  CHECK(t0.at(2) == P("A^-2"));
  CHECK(assemble(rtv_pi(0)) == P("A^-4 + A^-6 - A^-10"));
  CHECK(rtv_pi(1).total() == enumerate_pi(gen_rt_virtual(1)));
  for (int n : {0, 1, 2, 4}) {
    CHECK(rtv_pi(n).total().total_states() == Int(1) << (4 * n + 2));
  }
}

TEST_CASE("kv_pi class values at n=1") {
  const ClassifiedPi kv1 = kv_pi(1);
  // part (1)
  CHECK(kv1.tables.at({1, 1}).at(3) == P("A^-10"));
  CHECK(kv1.tables.at({1, 2}).at(2) == P("2*A^-8"));
  CHECK(kv1.tables.at({1, 2}).at(3) == P("A^-6"));
  CHECK(kv1.tables.at({1, 3}) == kv1.tables.at({1, 2}));
  CHECK(kv1.tables.at({1, 5}).at(1) == P("4*A^-6"));
  CHECK(kv1.tables.at({1, 5}).at(2) == P("4*A^-4"));
  CHECK(kv1.tables.at({1, 5}).at(3) == P("A^-2"));
  // part (2)
  CHECK(kv1.tables.at({2, 1}).at(1) == P("6*A^-6"));
  CHECK(kv1.tables.at({2, 2}).at(2) == P("12*A^-4 + 3*A^-8"));
  CHECK(kv1.tables.at({2, 2}).at(6) == P("A^4 + 1"));
  // part (3)
  CHECK(kv1.tables.at({3, 1}).at(7) == P("A^6"));
  CHECK(kv1.tables.at({3, 2}).at(1) == P("36*A^-2 + 15*A^-6"));
  // totals
  const PiVector total = kv1.total();
  CHECK(total.at(1) == P("36*A^-2 + 25*A^-6"));
  CHECK(total.total_states() == Int(1) << 10);
}

TEST_CASE("kv_pi assembles the published invariant") {
  const ClassifiedPi kv1 = kv_pi(1);
  CHECK(bracket(kv1.total()) ==
        P("A^22 - 2*A^18 + 2*A^14 - 3*A^10 + 2*A^6 - 2*A^2 + A^-2 + A^-6 + A^-14"));
  CHECK(substitute_t(assemble(kv1)) ==
        Pt("t^-4 + t^-6 + t^-7 - 2*t^-8 + 2*t^-9 - 3*t^-10 + 2*t^-11 - 2*t^-12 + t^-13"));
  for (int n : {0, 1, 2, 3}) {
    CHECK(kv_pi(n).total().total_states() == Int(1) << (4 * n + 6));
  }
}

TEST_CASE("assemble") {
  CHECK(substitute_t(assemble(rt_pi(0))) == Pt("t + t^3 - t^4"));
  CHECK(family_writhe(Family::rt, 2) == 11);
  CHECK(family_writhe(Family::kv, 2) == -14);
  CHECK(family_writhe(Family::rtv, 2) == 10);
}

TEST_CASE("recurrence scales to large n") {
  // touches O(n^2) table entries; far below the 2^(4n+3) state count
  const ClassifiedPi cp = rt_pi(40);
  CHECK(cp.total().total_states() == Int(1) << 163);
}

TEST_CASE("folded evolution equals the table route") {
  for (int n : {0, 1, 2, 5, 9}) {
    CHECK(family_invariant(Family::rt, n) == assemble(rt_pi(n)));
    CHECK(family_invariant(Family::rtv, n) == assemble(rtv_pi(n)));
    CHECK(family_invariant(Family::kv, n) == assemble(kv_pi(n)));
  }
}
