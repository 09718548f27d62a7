#pragma once

#include "walab/root_system.hpp"

#include <string>
#include <vector>

namespace walab {

/// Effective growth of the (p,q) minimal model: 1 - 6/(pq).
Rat growth_vir_minimal(long p, long q);

/// Growth of the universal Virasoro algebra: 1.
Rat growth_vir_universal();

/// One ledger line with the identity that produced it, so reports can show
/// the whole derivation chain.
struct GrowthEntry {
  std::string name;
  Rat value;
  std::string derivation;
};

struct GrowthLedger {
  Algebra g;
  std::vector<GrowthEntry> entries;

  const GrowthEntry& find(const std::string& name) const;
  const Rat& value(const std::string& name) const;
};

/// Exact growth bookkeeping for d4/e6/e7/e8:
///   g(level1 sl2)  = g(min 2,5) + g(min 3,5) = 1
///   g(coset)       = g(level1 g) - g(level1 sl2)
///   g(minimal W)   = g(min 3,5) + g(coset)
///   g(level1 g)    = g(minimal W) + g(min 2,5)   (derived)
/// with g(level1 g) = rank(g) recorded as an external-standard input.
GrowthLedger deligne_ledger(const RootSystem& rs);

struct ContradictionResult {
  bool contradiction_reproduced; // true iff the hypothetical bound fails
  Rat hypothetical_lhs;          // g(level1 g)
  Rat hypothetical_rhs;          // g(minimal W) + 1
  std::string normal_form;       // the reduced inequality
};

/// The hypothetical bound g(level1 g) >= g(minimal W) + 1 reduces against the
/// ledger to 1 <= 2/5, which is false; true means the failure is reproduced
/// exactly.
ContradictionResult contradiction_check(const RootSystem& rs);

} // namespace walab
