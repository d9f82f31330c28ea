#pragma once

#include <optional>
#include <string>

#include "statesum/bracket.hpp"
#include "statesum/diagram.hpp"

namespace statesum {

/// One-crossing unknot presentation with p_1 = A^-1, p_2 = A.
Diagram unknot_o();

/// The right-handed trefoil presentation the RT family grows from.
Diagram rt_base();

/// The six-crossing base knot the KV family grows from (two negative
/// trefoils joined). Reconstructed; gen_kv() is gated on its oracle.
Diagram kv_base();

/// Two-crossing Hopf presentation with four parallel edges, the shipped
/// base for the m-string constructions.
Diagram mstring_base();

/// RT_n: 4n+3 crossings. n = 0 returns rt_base().
Diagram gen_rt(int n);

/// RT'_n: gen_rt(n) with crossing x3 made virtual (4n+2 classical).
Diagram gen_rt_virtual(int n);

struct KvBaseUnverifiedError : std::runtime_error {
  explicit KvBaseUnverifiedError(const std::string& what) : std::runtime_error(what) {}
};

/// KV_n: 4n+6 crossings grown from kv_base(). The first call checks the
/// reconstruction against the family's known n=1 invariant and throws
/// KvBaseUnverifiedError with a diagnostic if the oracle fails.
Diagram gen_kv(int n);

enum class MStringKind { alternating, tangle };

struct MStringSpec {
  MStringKind kind = MStringKind::alternating;
  int m = 2;
  int n = 1;
  Diagram base;
  /// m+1 marked parallel edges, e_0 first; each endpoint pair ordered
  /// (u end, v end).
  std::vector<Edge> marked;
};

struct MarkedEdgeMissingError : std::runtime_error {
  explicit MarkedEdgeMissingError(const std::string& what) : std::runtime_error(what) {}
};

/// The m-string alternating / tangle construction over spec.base: deletes
/// the marked edges, threads 2n crossings along each of e_1..e_m, and weaves
/// the strings; e_0's endpoints terminate the boundary chain.
Diagram gen_mstring(const MStringSpec& spec);

/// CLI-facing family descriptor: rt:<n> | rtv:<n> | kv:<n> |
/// al:<m>:<n>:<basefile> | tl:<m>:<n>:<basefile>.
struct FamilyDescriptor {
  enum class Kind { rt, rtv, kv, al, tl } kind = Kind::rt;
  int n = 0;
  int m = 0;              // al/tl only
  std::string base_path;  // al/tl only
};

std::optional<FamilyDescriptor> parse_descriptor(std::string_view text);

/// Builds the descriptor's diagram. For al/tl the base file is loaded and
/// its first m+1 canonical edges are marked.
Diagram build_descriptor(const FamilyDescriptor& desc);

}  // namespace statesum
