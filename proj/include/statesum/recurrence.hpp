#pragma once

#include <map>

#include "statesum/bracket.hpp"
#include "statesum/laurent.hpp"

namespace statesum {

/// Class-partitioned p-tables of a family diagram at a given n, as evolved
/// by the transfer recursions. Entries absent from a table are zero; index
/// shifts below 1 read as zero.
struct ClassifiedPi {
  Family family = Family::rt;
  int n = 0;
  std::map<ClassLabel, PiVector> tables;

  PiVector total() const;
};

/// RT_n class tables: seeds p_{1,I}=A, p_{2,II}=A^3, p_{2,III}=2A^-1,
/// p_{3,III}=A^-3, p_{1,IV}=2A, p_{2,IV}=A^-1, then n transfer steps.
/// Linear in n per table entry versus 2^(4n+3) state enumeration.
ClassifiedPi rt_pi(int n);

/// KV_n tables over the nine classes (1,I..V), (2,I..II), (3,I..II).
ClassifiedPi kv_pi(int n);

/// RT'_n class tables: seeds p_{1,I}=1, p_{1,II}=A^2, p_{2,III}=A^-2,
/// p_{1,IV}=1.
ClassifiedPi rtv_pi(int n);

/// The family's writhe at n: RT 4n+3, KV -4n-6, RT' 4n+2.
int family_writhe(Family family, int n);

/// Folds the total p-table with (-A^2-A^-2)^(i-1) and applies the
/// (-A)^(-3w) writhe normalization; the A-form invariant.
LaurentPoly assemble(const ClassifiedPi& cp);

/// The assembled invariant via the folded transfer evolution: the class
/// sums g_X = sum_i p_{i,X} x^(i-1) evolve directly (an index shift is a
/// multiplication by x = -A^2 - A^-2), so no class table is materialized.
/// Equals assemble(<family>_pi(n)) exactly at a fraction of the cost; the
/// practical route for large n.
LaurentPoly family_invariant(Family family, int n);

}  // namespace statesum
