#include "statesum/recurrence.hpp"

namespace statesum {

PiVector ClassifiedPi::total() const {
  PiVector t;
  for (const auto& [label, table] : tables) t.merge(table);
  return t;
}

namespace {

LaurentPoly mono(int c, int e) { return LaurentPoly::monomial(c, e); }

/// One transfer rule: target gains coeff * p_{i-shift, source} per step.
struct Rule {
  int target;
  int source;
  LaurentPoly coeff;
  int shift;
};

struct System {
  Family family;
  std::vector<ClassLabel> labels;
  std::vector<std::pair<std::pair<int, LaurentPoly>, int>> seeds;  // ((i, poly), label idx)
  std::vector<Rule> rules;
};

const LaurentPoly kTwoAm2 = mono(2, -2);
const LaurentPoly kAm4 = mono(1, -4);
const LaurentPoly kTwoA2 = mono(2, 2);
const LaurentPoly kA4 = mono(1, 4);
const LaurentPoly kA4p4 = mono(1, 4) + mono(4, 0);
const LaurentPoly kA4p1 = mono(1, 4) + mono(1, 0);
const LaurentPoly kFive = mono(5, 0);
const LaurentPoly kFour = mono(4, 0);
const LaurentPoly kFourA2 = mono(4, 2);
const LaurentPoly kMix = mono(4, 2) + mono(2, -2);      // 4A^2 + 2A^-2
const LaurentPoly kSym = mono(2, 2) + mono(2, -2);      // 2A^2 + 2A^-2
const LaurentPoly kFourPm4 = mono(4, 0) + mono(1, -4);  // 4 + A^-4
const LaurentPoly kOne = mono(1, 0);

const System& rt_system() {
  static const System sys = [] {
    System s;
    s.family = Family::rt;
    s.labels = {{0, 1}, {0, 2}, {0, 3}, {0, 4}};
    s.seeds = {{{1, mono(1, 1)}, 0},  {{2, mono(1, 3)}, 1},  {{2, mono(2, -1)}, 2},
               {{3, mono(1, -3)}, 2}, {{1, mono(2, 1)}, 3},  {{2, mono(1, -1)}, 3}};
    s.rules = {
        {0, 0, kOne, 0},    {0, 0, kTwoAm2, 1}, {0, 0, kAm4, 2},
        {0, 1, kTwoAm2, -1}, {0, 1, kAm4, 0},
        {1, 0, kTwoA2, 1},  {1, 0, kA4p4, 2},   {1, 0, kSym, 3},  {1, 0, kOne, 4},
        {1, 1, kFive, 0},   {1, 1, kMix, 1},    {1, 1, kA4p1, 2},
        {2, 2, kOne, 0},    {2, 2, kTwoAm2, 1}, {2, 2, kAm4, 2},
        {2, 3, kTwoAm2, 1}, {2, 3, kAm4, 2},
        {3, 2, kTwoA2, -1}, {3, 2, kA4p4, 0},   {3, 2, kSym, 1},  {3, 2, kOne, 2},
        {3, 3, kFive, 0},   {3, 3, kMix, 1},    {3, 3, kA4p1, 2},
    };
    return s;
  }();
  return sys;
}

const System& rtv_system() {
  static const System sys = [] {
    System s;
    s.family = Family::rtv;
    s.labels = {{0, 1}, {0, 2}, {0, 3}, {0, 4}};
    s.seeds = {{{1, kOne}, 0}, {{1, mono(1, 2)}, 1}, {{2, mono(1, -2)}, 2}, {{1, kOne}, 3}};
    // class I pulls p_{i,II} and p_{i-1,II}; one index lower than the rt case
    s.rules = {
        {0, 0, kOne, 0},    {0, 0, kTwoAm2, 1}, {0, 0, kAm4, 2},
        {0, 1, kTwoAm2, 0}, {0, 1, kAm4, 1},
        {1, 0, kTwoA2, 0},  {1, 0, kA4p4, 1},   {1, 0, kSym, 2},  {1, 0, kOne, 3},
        {1, 1, kFive, 0},   {1, 1, kMix, 1},    {1, 1, kA4p1, 2},
        {2, 2, kOne, 0},    {2, 2, kTwoAm2, 1}, {2, 2, kAm4, 2},
        {2, 3, kTwoAm2, 1}, {2, 3, kAm4, 2},
        {3, 2, kTwoA2, -1}, {3, 2, kA4p4, 0},   {3, 2, kSym, 1},  {3, 2, kOne, 2},
        {3, 3, kFive, 0},   {3, 3, kMix, 1},    {3, 3, kA4p1, 2},
    };
    return s;
  }();
  return sys;
}

const System& kv_system() {
  static const System sys = [] {
    System s;
    s.family = Family::kv;
    // 0..4: part (1) I..V; 5..6: part (2) I..II; 7..8: part (3) I..II
    s.labels = {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 1}, {2, 2}, {3, 1}, {3, 2}};
    s.seeds = {{{3, mono(1, -6)}, 0},
               {{2, mono(3, -4)}, 6}, {{3, mono(3, -2)}, 6}, {{4, kOne}, 6},
               {{2, mono(3, -4)}, 7}, {{3, mono(3, -2)}, 7}, {{4, kOne}, 7},
               {{1, mono(9, -2)}, 8}, {{2, mono(18, 0)}, 8}, {{3, mono(15, 2)}, 8},
               {{4, mono(6, 4)}, 8},  {{5, mono(1, 6)}, 8}};
    s.rules = {
        {0, 0, kAm4, 0},
        {1, 0, kTwoAm2, -1}, {1, 0, kOne, 0},
        {1, 1, kA4p4, 0},    {1, 1, kMix, 1},    {1, 1, kA4p1, 2},
        {1, 3, kTwoAm2, 1},  {1, 3, kFive, 2},   {1, 3, kFourA2, 3}, {1, 3, kA4, 4},
        {2, 0, kTwoAm2, -1}, {2, 0, kOne, 0},
        {2, 2, kAm4, 0},     {2, 2, kTwoAm2, 1}, {2, 2, kOne, 2},
        {2, 4, kTwoAm2, 1},  {2, 4, kOne, 2},
        {3, 1, kTwoAm2, -1}, {3, 1, kOne, 0},
        {3, 3, kA4, 0},      {3, 3, kTwoAm2, 1}, {3, 3, kOne, 2},
        {4, 0, kFour, -2},   {4, 0, kFourA2, -1}, {4, 0, kA4, 0},
        {4, 2, kTwoAm2, -1}, {4, 2, kFive, 0},   {4, 2, kFourA2, 1}, {4, 2, kA4, 2},
        {4, 4, kFourPm4, 0}, {4, 4, kMix, 1},    {4, 4, kA4p1, 2},
        {5, 5, kAm4, 0},     {5, 5, kTwoAm2, 1}, {5, 5, kOne, 2},
        {5, 6, kTwoAm2, -1}, {5, 6, kOne, 0},
        {6, 5, kTwoAm2, 1},  {6, 5, kFive, 2},   {6, 5, kFourA2, 3}, {6, 5, kA4, 4},
        {6, 6, kFourPm4, 0}, {6, 6, kMix, 1},    {6, 6, kA4p1, 2},
        {7, 7, kAm4, 0},     {7, 7, kTwoAm2, 1}, {7, 7, kOne, 2},
        {7, 8, kTwoAm2, 1},  {7, 8, kOne, 2},
        {8, 7, kTwoAm2, -1}, {8, 7, kFive, 0},   {8, 7, kFourA2, 1}, {8, 7, kA4, 2},
        {8, 8, kFourPm4, 0}, {8, 8, kMix, 1},    {8, 8, kA4p1, 2},
    };
    return s;
  }();
  return sys;
}

const System& system_for(Family f) {
  switch (f) {
    case Family::rt:
      return rt_system();
    case Family::rtv:
      return rtv_system();
    case Family::kv:
      return kv_system();
  }
  throw std::invalid_argument("unknown family");
}

ClassifiedPi evolve_tables(const System& sys, int n) {
  std::vector<PiVector> cur(sys.labels.size());
  for (const auto& [seed, idx] : sys.seeds) cur[idx].add(seed.first, seed.second);
  for (int step = 0; step < n; ++step) {
    std::vector<PiVector> next(sys.labels.size());
    for (const auto& rule : sys.rules) {
      for (const auto& [i, p] : cur[rule.source].p_range()) {
        const int j = i + rule.shift;
        if (j >= 1) next[rule.target].add(j, rule.coeff * p);
      }
    }
    cur = std::move(next);
  }
  ClassifiedPi cp;
  cp.family = sys.family;
  cp.n = n;
  for (size_t k = 0; k < sys.labels.size(); ++k) cp.tables[sys.labels[k]] = std::move(cur[k]);
  return cp;
}

}  // namespace

ClassifiedPi rt_pi(int n) {
  if (n < 0) throw std::invalid_argument("rt_pi: n must be >= 0");
  return evolve_tables(rt_system(), n);
}

ClassifiedPi rtv_pi(int n) {
  if (n < 0) throw std::invalid_argument("rtv_pi: n must be >= 0");
  return evolve_tables(rtv_system(), n);
}

ClassifiedPi kv_pi(int n) {
  if (n < 0) throw std::invalid_argument("kv_pi: n must be >= 0");
  return evolve_tables(kv_system(), n);
}

int family_writhe(Family family, int n) {
  switch (family) {
    case Family::rt:
      return 4 * n + 3;
    case Family::kv:
      return -4 * n - 6;
    case Family::rtv:
      return 4 * n + 2;
  }
  throw std::invalid_argument("unknown family");
}

LaurentPoly assemble(const ClassifiedPi& cp) {
  return kauffman_jones_from_pi(cp.total(), family_writhe(cp.family, cp.n));
}

LaurentPoly family_invariant(Family family, int n) {
  if (n < 0) throw std::invalid_argument("family_invariant: n must be >= 0");
  const System& sys = system_for(family);
  const LaurentPoly x = mono(-1, 2) + mono(-1, -2);
  // g_X = sum_i p_{i,X} x^(i-1); a shift by k multiplies by x^k. Negative
  // shifts divide exactly: the lemma systems never reference an index below
  // the smallest populated loop count (exact_div would throw otherwise).
  std::vector<LaurentPoly> g(sys.labels.size());
  for (const auto& [seed, idx] : sys.seeds)
    g[idx] += seed.second * x.pow(static_cast<unsigned>(seed.first - 1));
  std::vector<LaurentPoly> xpow = {kOne, x, x * x, x * x * x, x.pow(4)};
  for (int step = 0; step < n; ++step) {
    std::vector<LaurentPoly> next(g.size());
    for (const auto& rule : sys.rules) {
      if (g[rule.source].is_zero()) continue;
      if (rule.shift >= 0)
        next[rule.target] += rule.coeff * xpow[static_cast<size_t>(rule.shift)] * g[rule.source];
      else
        next[rule.target] +=
            rule.coeff * exact_div(g[rule.source], xpow[static_cast<size_t>(-rule.shift)]);
    }
    g = std::move(next);
  }
  PiVector folded;
  for (const auto& gi : g) folded.add(1, gi);  // already the full bracket sum
  return kauffman_jones_from_pi(folded, family_writhe(family, n));
}

}  // namespace statesum
