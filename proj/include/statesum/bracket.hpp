#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "statesum/diagram.hpp"
#include "statesum/laurent.hpp"

namespace statesum {

enum class Marker { a, a_inv };

/// A state: one marker per classical crossing. Virtual crossings are never
/// assigned.
struct State {
  std::map<std::string, Marker> markers;
};

struct IncompleteStateError : std::runtime_error {
  explicit IncompleteStateError(const std::string& crossing)
      : std::runtime_error("no marker for classical crossing '" + crossing + "'") {}
};
struct TooLargeError : std::runtime_error {
  TooLargeError(size_t crossings, size_t cap)
      : std::runtime_error("diagram has " + std::to_string(crossings) +
                           " classical crossings, enumeration cap is " + std::to_string(cap) +
                           " (use the transfer recurrences for family diagrams)") {}
};
struct VirtualCrossingPresentError : std::runtime_error {
  VirtualCrossingPresentError()
      : std::runtime_error("diagram has virtual crossings; use the Kauffman-Jones polynomial") {}
};

/// Table i -> p_i: the Laurent polynomial summing A^(a-b) over the states
/// with exactly i state-graph loops. Missing entries are zero.
struct PiVector {
  std::map<int, LaurentPoly> table;

  LaurentPoly at(int i) const {
    auto it = table.find(i);
    return it == table.end() ? LaurentPoly{} : it->second;
  }
  void add(int i, const LaurentPoly& p) {
    if (p.is_zero()) return;
    auto [it, fresh] = table.emplace(i, p);
    if (!fresh) {
      it->second += p;
      if (it->second.is_zero()) table.erase(it);
    }
  }
  PiVector& merge(const PiVector& o) {
    for (const auto& [i, p] : o.table) add(i, p);
    return *this;
  }
  Int total_states() const {
    Int s = 0;
    for (const auto& [i, p] : p_range()) s += p.eval_one();
    return s;
  }
  const std::map<int, LaurentPoly>& p_range() const { return table; }
  bool operator==(const PiVector&) const = default;
};

/// Loops of the state graph: marker A splits a crossing into slot pairs
/// {0,3},{1,2}; marker A^-1 into {0,1},{2,3}; a virtual crossing always
/// passes 0<->2, 1<->3. Free loops count on top.
int loop_count(const Diagram& d, const State& s);

struct EnumerateOptions {
  size_t cap = 30;
  unsigned workers = 1;
};

/// Full enumeration of all 2^c states. Deterministic for any worker count:
/// partial tables merge by polynomial addition.
PiVector enumerate_pi(const Diagram& d, const EnumerateOptions& opts = {});

/// <L> = sum_i p_i * (-A^2 - A^-2)^(i-1).
LaurentPoly bracket(const PiVector& pi);

struct JonesResult {
  LaurentPoly poly;
  bool in_t = false;  // true: poly is in t = A^-4; false: left in A
};

/// (-A)^(-3w) <L>, rendered in t when every exponent divides by 4 (always
/// for knots). Classical diagrams only.
JonesResult jones(const Diagram& d, const EnumerateOptions& opts = {});

/// f_L(A): the same normalization for virtual-link diagrams; equals the
/// A-form of the Jones polynomial when no virtual crossing is present.
LaurentPoly kauffman_jones(const Diagram& d, const EnumerateOptions& opts = {});

JonesResult jones_from_pi(const PiVector& pi, int writhe_value);
LaurentPoly kauffman_jones_from_pi(const PiVector& pi, int writhe_value);

enum class Family { rt, rtv, kv };

/// State-class label. RT/RTV states use part 0 and sub 1..4 (S_I..S_IV);
/// KV states use part 1..3 with the per-part subclass index.
struct ClassLabel {
  int part = 0;
  int sub = 0;
  auto operator<=>(const ClassLabel&) const = default;
};

std::string to_string(const ClassLabel& label);

struct NotInFamilyError : std::runtime_error {
  explicit NotInFamilyError(const std::string& what) : std::runtime_error(what) {}
};

/// The unique class of a state of the n-th family diagram.
ClassLabel classify_state(Family family, int n, const State& s);

/// Brute-force class-partitioned tables of the n-th family diagram: every
/// state is classified and accumulated into its class's p-table.
std::map<ClassLabel, PiVector> classified_enumerate(Family family, int n, const Diagram& d,
                                                    const EnumerateOptions& opts = {});

}  // namespace statesum
