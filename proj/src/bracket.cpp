#include "statesum/bracket.hpp"

#include <algorithm>
#include <thread>

namespace statesum {

namespace {

/// Flattened diagram for mask-indexed enumeration. Classical crossings are
/// bit positions in name order; the fixed order keeps runs reproducible.
struct Compiled {
  std::vector<int> mate;           // slot id -> slot id over edges
  std::vector<int> classical;      // crossing indices that take markers
  std::vector<bool> is_classical;  // by crossing index
  int free_loops = 0;
  size_t slots() const { return mate.size(); }
};

Compiled compile(const Diagram& d) {
  require_valid(d);
  Compiled c;
  c.mate.assign(4 * d.crossings.size(), -1);
  for (const auto& e : d.edges) {
    int a = 4 * d.crossing_index(e.a.crossing) + e.a.slot;
    int b = 4 * d.crossing_index(e.b.crossing) + e.b.slot;
    c.mate[a] = b;
    c.mate[b] = a;
  }
  c.is_classical.resize(d.crossings.size());
  for (size_t i = 0; i < d.crossings.size(); ++i) {
    c.is_classical[i] = d.crossings[i].kind == CrossingKind::classical;
    if (c.is_classical[i]) c.classical.push_back(static_cast<int>(i));
  }
  c.free_loops = d.free_loops;
  return c;
}

/// partner under the smoothing: A pairs {0,3},{1,2}; A^-1 pairs {0,1},{2,3};
/// virtual passes 0<->2, 1<->3.
constexpr int kPairA[4] = {3, 2, 1, 0};
constexpr int kPairB[4] = {1, 0, 3, 2};
constexpr int kPairV[4] = {2, 3, 0, 1};

int loops_for_mask(const Compiled& c, uint64_t mask, std::vector<int>& partner,
                   std::vector<char>& seen) {
  const size_t n = c.slots();
  for (size_t ci = 0; ci < c.is_classical.size(); ++ci) {
    const int* pair = kPairV;
    if (c.is_classical[ci]) pair = kPairB;
    partner[4 * ci + 0] = 4 * static_cast<int>(ci) + pair[0];
    partner[4 * ci + 1] = 4 * static_cast<int>(ci) + pair[1];
    partner[4 * ci + 2] = 4 * static_cast<int>(ci) + pair[2];
    partner[4 * ci + 3] = 4 * static_cast<int>(ci) + pair[3];
  }
  for (size_t bit = 0; bit < c.classical.size(); ++bit) {
    if (!(mask >> bit & 1)) continue;
    const int ci = c.classical[bit];
    partner[4 * ci + 0] = 4 * ci + kPairA[0];
    partner[4 * ci + 1] = 4 * ci + kPairA[1];
    partner[4 * ci + 2] = 4 * ci + kPairA[2];
    partner[4 * ci + 3] = 4 * ci + kPairA[3];
  }
  std::fill(seen.begin(), seen.end(), 0);
  int loops = 0;
  for (size_t s0 = 0; s0 < n; ++s0) {
    if (seen[s0]) continue;
    ++loops;
    int cur = static_cast<int>(s0);
    while (!seen[cur]) {
      seen[cur] = 1;
      const int next = partner[cur];
      seen[next] = 1;
      cur = c.mate[next];
    }
  }
  return loops + c.free_loops;
}

PiVector enumerate_range(const Compiled& c, uint64_t begin, uint64_t end) {
  PiVector pi;
  std::vector<int> partner(c.slots());
  std::vector<char> seen(c.slots());
  const int cc = static_cast<int>(c.classical.size());
  for (uint64_t mask = begin; mask < end; ++mask) {
    const int loops = loops_for_mask(c, mask, partner, seen);
    const int a = static_cast<int>(__builtin_popcountll(mask));
    pi.add(loops, LaurentPoly::monomial(1, 2 * a - cc));
  }
  return pi;
}

uint64_t state_mask(const Diagram& d, const State& s) {
  uint64_t mask = 0;
  size_t bit = 0;
  for (const auto& c : d.crossings) {
    if (c.kind != CrossingKind::classical) continue;
    auto it = s.markers.find(c.name);
    if (it == s.markers.end()) throw IncompleteStateError(c.name);
    if (it->second == Marker::a) mask |= uint64_t{1} << bit;
    ++bit;
  }
  return mask;
}

}  // namespace

int loop_count(const Diagram& d, const State& s) {
  const Compiled c = compile(d);
  std::vector<int> partner(c.slots());
  std::vector<char> seen(c.slots());
  return loops_for_mask(c, state_mask(d, s), partner, seen);
}

PiVector enumerate_pi(const Diagram& d, const EnumerateOptions& opts) {
  const Compiled c = compile(d);
  const size_t cc = c.classical.size();
  if (cc > opts.cap) throw TooLargeError(cc, opts.cap);
  const uint64_t total = uint64_t{1} << cc;
  const unsigned workers = std::max(1u, opts.workers);
  if (workers == 1 || total < 2 * workers) return enumerate_range(c, 0, total);
  std::vector<PiVector> parts(workers);
  std::vector<std::thread> pool;
  const uint64_t chunk = total / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const uint64_t lo = w * chunk;
    const uint64_t hi = w + 1 == workers ? total : lo + chunk;
    pool.emplace_back([&, w, lo, hi] { parts[w] = enumerate_range(c, lo, hi); });
  }
  for (auto& t : pool) t.join();
  PiVector pi;
  for (const auto& part : parts) pi.merge(part);
  return pi;
}

LaurentPoly bracket(const PiVector& pi) {
  const LaurentPoly d = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
  LaurentPoly sum;
  for (const auto& [i, p] : pi.p_range()) sum += p * d.pow(static_cast<unsigned>(i - 1));
  return sum;
}

namespace {

LaurentPoly normalize_by_writhe(const LaurentPoly& br, int w) {
  // (-A)^(-3w) = (-1)^w * A^(-3w)
  LaurentPoly f = LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
  return f * br;
}

}  // namespace

JonesResult jones_from_pi(const PiVector& pi, int writhe_value) {
  const LaurentPoly v = normalize_by_writhe(bracket(pi), writhe_value);
  try {
    return {substitute_t(v), true};
  } catch (const NotAPowerOfTError&) {
    return {v, false};
  }
}

LaurentPoly kauffman_jones_from_pi(const PiVector& pi, int writhe_value) {
  return normalize_by_writhe(bracket(pi), writhe_value);
}

JonesResult jones(const Diagram& d, const EnumerateOptions& opts) {
  if (d.has_virtual()) throw VirtualCrossingPresentError{};
  return jones_from_pi(enumerate_pi(d, opts), writhe(d));
}

LaurentPoly kauffman_jones(const Diagram& d, const EnumerateOptions& opts) {
  return kauffman_jones_from_pi(enumerate_pi(d, opts), writhe(d));
}

// ---------------------------------------------------------------------------
// State classification for the three diagram families.
// ---------------------------------------------------------------------------

std::string to_string(const ClassLabel& label) {
  static const char* kRoman[] = {"", "I", "II", "III", "IV", "V"};
  if (label.part == 0) return std::string("S_") + kRoman[label.sub];
  return "S^(" + std::to_string(label.part) + ")_" + kRoman[label.sub];
}

namespace {

Marker need(const State& s, const std::string& name) {
  auto it = s.markers.find(name);
  if (it == s.markers.end()) throw NotInFamilyError("state lacks crossing '" + name + "'");
  return it->second;
}

bool is_a(const State& s, const std::string& name) { return need(s, name) == Marker::a; }
bool is_b(const State& s, const std::string& name) { return need(s, name) == Marker::a_inv; }

std::string yname(int i) { return "y" + std::to_string(i); }
std::string zname(int i) { return "z" + std::to_string(i); }

/// RT / RT' chains: the patterned tail has y_i = A, z_i = A^-1. Returns the
/// smallest k0 in 0..n such that every block above k0 is patterned.
int rt_pattern_break(const State& s, int n) {
  int k0 = n;
  for (int k = n; k >= 1; --k) {
    if (is_a(s, yname(2 * k - 1)) && is_a(s, yname(2 * k)) && is_b(s, zname(2 * k - 1)) &&
        is_b(s, zname(2 * k))) {
      k0 = k - 1;
    } else {
      break;
    }
  }
  return k0;
}

ClassLabel classify_rt_like(const State& s, int n, bool use_x3) {
  const bool outer = use_x3 ? is_a(s, "x2") && is_a(s, "x3") : is_a(s, "x2");
  const int k0 = rt_pattern_break(s, n);
  bool inner;
  if (k0 == 0) {
    inner = is_b(s, "x1");
  } else {
    inner = is_b(s, zname(2 * k0 - 1)) && is_b(s, zname(2 * k0));
  }
  if (outer) return {0, inner ? 1 : 2};
  return {0, inner ? 3 : 4};
}

/// KV chains: blocks where both the y pair and z pair are all A^-1 are
/// quiet; classification keys on the first and last non-quiet block.
struct KvBreaks {
  bool any = false;
  bool first_is_pure_z = false;  // y pair quiet at the first break
  bool last_is_pure_y = false;   // z pair quiet at the last break
};

KvBreaks kv_breaks(const State& s, int n) {
  KvBreaks r;
  for (int k = 1; k <= n; ++k) {
    const bool yq = is_b(s, yname(2 * k - 1)) && is_b(s, yname(2 * k));
    const bool zq = is_b(s, zname(2 * k - 1)) && is_b(s, zname(2 * k));
    if (yq && zq) continue;
    if (!r.any) {
      r.any = true;
      r.first_is_pure_z = yq;
    }
    r.last_is_pure_y = zq;
  }
  return r;
}

ClassLabel classify_kv(const State& s, int n) {
  bool x123 = true, x456 = true;
  for (int i = 1; i <= 3; ++i) x123 = x123 && is_b(s, "x" + std::to_string(i));
  for (int i = 4; i <= 6; ++i) x456 = x456 && is_b(s, "x" + std::to_string(i));
  const KvBreaks br = kv_breaks(s, n);
  if (x123 && x456) {
    if (!br.any) return {1, 1};
    if (br.first_is_pure_z) return br.last_is_pure_y ? ClassLabel{1, 4} : ClassLabel{1, 2};
    return br.last_is_pure_y ? ClassLabel{1, 3} : ClassLabel{1, 5};
  }
  if (x123) {
    if (!br.any || !br.last_is_pure_y) return {2, 2};
    return {2, 1};
  }
  if (!br.any) return x456 ? ClassLabel{3, 1} : ClassLabel{3, 2};
  return br.last_is_pure_y ? ClassLabel{3, 1} : ClassLabel{3, 2};
}

}  // namespace

ClassLabel classify_state(Family family, int n, const State& s) {
  switch (family) {
    case Family::rt:
      return classify_rt_like(s, n, true);
    case Family::rtv:
      return classify_rt_like(s, n, false);
    case Family::kv:
      return classify_kv(s, n);
  }
  throw NotInFamilyError("unknown family");
}

std::map<ClassLabel, PiVector> classified_enumerate(Family family, int n, const Diagram& d,
                                                    const EnumerateOptions& opts) {
  const size_t cc = d.classical_count();
  if (cc > opts.cap) throw TooLargeError(cc, opts.cap);
  std::vector<std::string> names;
  for (const auto& c : d.crossings)
    if (c.kind == CrossingKind::classical) names.push_back(c.name);
  std::map<ClassLabel, PiVector> tables;
  const uint64_t total = uint64_t{1} << cc;
  for (uint64_t mask = 0; mask < total; ++mask) {
    State s;
    int a = 0;
    for (size_t bit = 0; bit < names.size(); ++bit) {
      const bool on = mask >> bit & 1;
      s.markers[names[bit]] = on ? Marker::a : Marker::a_inv;
      a += on;
    }
    const int loops = loop_count(d, s);
    tables[classify_state(family, n, s)].add(
        loops, LaurentPoly::monomial(1, 2 * a - static_cast<int>(cc)));
  }
  return tables;
}

}  // namespace statesum
