#include <doctest.h>

#include "statesum/bracket.hpp"
#include "statesum/families.hpp"
#include "statesum/recurrence.hpp"

using namespace statesum;

namespace {

LaurentPoly P(const char* s) { return parse_poly(s); }

State all_markers(const Diagram& d, Marker m) {
  State s;
  for (const auto& c : d.crossings)
    if (c.kind == CrossingKind::classical) s.markers[c.name] = m;
  return s;
}

}  // namespace

TEST_CASE("loop counts") {
  const Diagram o = unknot_o();
  CHECK(loop_count(o, all_markers(o, Marker::a)) == 2);
  CHECK(loop_count(o, all_markers(o, Marker::a_inv)) == 1);

  const Diagram rt0 = rt_base();
  CHECK(loop_count(rt0, all_markers(rt0, Marker::a)) == 2);
  CHECK(loop_count(rt0, all_markers(rt0, Marker::a_inv)) == 3);

  State incomplete = all_markers(rt0, Marker::a);
  incomplete.markers.erase("x2");
  CHECK_THROWS_AS(loop_count(rt0, incomplete), IncompleteStateError);
}

TEST_CASE("enumerate_pi") {
  const PiVector po = enumerate_pi(unknot_o());
  CHECK(po.at(1) == P("A^-1"));
  CHECK(po.at(2) == P("A"));

  const PiVector pr = enumerate_pi(rt_base());
  CHECK(pr.at(1) == P("3*A"));
  CHECK(pr.at(2) == P("A^3 + 3*A^-1"));
  CHECK(pr.at(3) == P("A^-3"));

  const PiVector pl = enumerate_pi(parse_diagram("loops: 1\n"));
  CHECK(pl.at(1) == P("1"));
  CHECK(pl.table.size() == 1);

  CHECK_THROWS_AS(enumerate_pi(gen_rt(1), {5, 1}), TooLargeError);
}

TEST_CASE("state count and loop bounds") {
  for (const Diagram& d : {rt_base(), gen_rt(1), gen_rt_virtual(1), kv_base()}) {
    const PiVector pi = enumerate_pi(d);
    CHECK(pi.total_states() == Int(1) << d.classical_count());
    const int c = static_cast<int>(d.classical_count());
    for (const auto& [i, p] : pi.p_range()) {
      CHECK(i >= 1);
      CHECK(i <= c + 1 + d.free_loops);
    }
  }
}

TEST_CASE("parallel determinism") {
  const Diagram d = gen_rt(1);
  const PiVector base = enumerate_pi(d, {30, 1});
  for (unsigned workers : {2u, 3u, 8u}) CHECK(enumerate_pi(d, {30, workers}) == base);
}

TEST_CASE("bracket assembly") {
  CHECK(bracket(enumerate_pi(rt_base())) == P("-A^5 - A^-3 + A^-7"));
  CHECK(bracket(enumerate_pi(unknot_o())) == P("-A^3"));
  PiVector unit;
  unit.add(1, P("1"));
  CHECK(bracket(unit) == P("1"));
}

TEST_CASE("jones") {
  const JonesResult v = jones(rt_base());
  CHECK(v.in_t);
  CHECK(v.poly == parse_poly("t + t^3 - t^4", "t"));
  CHECK(jones(parse_diagram("loops: 1\n")).poly == P("1"));
  CHECK_THROWS_AS(jones(gen_rt_virtual(0)), VirtualCrossingPresentError);

  // a two-component link: exponents stay in A with the flag cleared
  const JonesResult hopf = jones(mstring_base());
  CHECK(!hopf.in_t);
}

TEST_CASE("kauffman-jones") {
  CHECK(kauffman_jones(rt_base()) == P("A^-4 + A^-12 - A^-16"));
  CHECK(kauffman_jones(gen_rt_virtual(0)) == P("A^-4 + A^-6 - A^-10"));
  CHECK(kauffman_jones(parse_diagram("loops: 1\n")) == P("1"));
  // equals the Jones polynomial's A form on classical diagrams
  CHECK(substitute_t(kauffman_jones(rt_base())) == jones(rt_base()).poly);
}

TEST_CASE("classify RT_0 states") {
  State s;
  s.markers = {{"x1", Marker::a}, {"x2", Marker::a}, {"x3", Marker::a}};
  CHECK(classify_state(Family::rt, 0, s) == ClassLabel{0, 2});  // S_II
  s.markers = {{"x1", Marker::a_inv}, {"x2", Marker::a_inv}, {"x3", Marker::a_inv}};
  CHECK(classify_state(Family::rt, 0, s) == ClassLabel{0, 3});  // S_III
  s.markers = {{"x1", Marker::a_inv}, {"x2", Marker::a}, {"x3", Marker::a}};
  CHECK(classify_state(Family::rt, 0, s) == ClassLabel{0, 1});  // S_I
  CHECK(to_string(ClassLabel{0, 1}) == "S_I");
  CHECK(to_string(ClassLabel{1, 5}) == "S^(1)_V");

  State bad;
  bad.markers = {{"q", Marker::a}};
  CHECK_THROWS_AS(classify_state(Family::rt, 0, bad), NotInFamilyError);
}

TEST_CASE("classified enumeration reproduces the recurrence tables") {
  for (int n : {0, 1}) {
    const auto brute = classified_enumerate(Family::rt, n, gen_rt(n));
    const auto recur = rt_pi(n);
    for (const auto& [label, table] : brute) CHECK(recur.tables.at(label) == table);
    PiVector all;
    for (const auto& [label, table] : brute) all.merge(table);
    CHECK(all.total_states() == Int(1) << (4 * n + 3));
  }
  for (int n : {0, 1}) {
    const auto brute = classified_enumerate(Family::rtv, n, gen_rt_virtual(n));
    const auto recur = rtv_pi(n);
    for (const auto& [label, table] : brute) CHECK(recur.tables.at(label) == table);
  }
}
