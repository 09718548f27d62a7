#pragma once

#include "walab/root_system.hpp"

#include <vector>

namespace walab {

/// k(m) = -h^vee/6 + m. Requires m >= -1.
Rat k_of_m(const RootSystem& rs, long m);

/// The dual level: 1/(k+h^vee) + 1/(l+h^vee) = 1, exactly.
/// Throws when k+h^vee is 0 or 1.
Rat ff_dual(const RootSystem& rs, const Rat& k);

/// Central charge of the principal W-algebra:
///   -rk(g) * ((h+1)(k+h^vee) - h^vee) * (r^vee * Lh^vee * (k+h^vee) - (h+1)) / (k+h^vee).
Rat principal_cc(const RootSystem& rs, const Rat& k);

/// c_{p,q} = 1 - 6(p-q)^2/(pq) for coprime p,q >= 2.
Rat virasoro_c(long p, long q);

/// Kac-Wakimoto screening: k+h^vee = p/q > 0 in lowest terms with
/// p >= h^vee when gcd(q, r^vee) = 1, p >= h when r^vee divides q.
bool is_admissible(const RootSystem& rs, const Rat& k);

struct LevelTableCell {
  Algebra g;
  int m;
  Rat ell_plus_hv; // l(m) + h^vee
};

/// The dual levels of the negative-level range: d4 m=0; e6 m=0,1; e7 m=0..2;
/// e8 m=0..4.
std::vector<LevelTableCell> level_table();

/// Largest m with k(m) < 0 for the four simply-laced large members, -1 otherwise.
int negative_level_max_m(Algebra g);

} // namespace walab
