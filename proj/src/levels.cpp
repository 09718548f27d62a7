#include "walab/levels.hpp"

#include <numeric>
#include <stdexcept>

namespace walab {

Rat k_of_m(const RootSystem& rs, long m) {
  if (m < -1) throw std::invalid_argument("k(m) requires m >= -1");
  return Rat(-rs.dual_coxeter(), 6) + m;
}

Rat ff_dual(const RootSystem& rs, const Rat& k) {
  Rat t = k + rs.dual_coxeter();
  if (t == 0) throw std::invalid_argument("critical level has no dual");
  if (t == 1) throw std::invalid_argument("k + h^vee = 1 has no finite dual level");
  return t / (t - 1) - rs.dual_coxeter();
}

Rat principal_cc(const RootSystem& rs, const Rat& k) {
  Rat t = k + rs.dual_coxeter();
  if (t == 0) throw std::invalid_argument("central charge undefined at the critical level");
  Rat h1 = rs.coxeter() + 1;
  Rat a = h1 * t - rs.dual_coxeter();
  Rat b = Rat(rs.lacing()) * rs.dual_dual_coxeter() * t - h1;
  return -Rat(rs.rank()) * a * b / t;
}

Rat virasoro_c(long p, long q) {
  if (p < 2 || q < 2) throw std::invalid_argument("virasoro_c requires p,q >= 2");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("virasoro_c requires coprime p,q");
  long d = p - q;
  return 1 - Rat(6 * d * d, p * q);
}

bool is_admissible(const RootSystem& rs, const Rat& k) {
  Rat t = k + rs.dual_coxeter();
  if (t <= 0) return false;
  BigInt p = numerator(t), q = denominator(t);
  bool coprime_to_lacing = boost::multiprecision::gcd(q, BigInt(rs.lacing())) == 1;
  return coprime_to_lacing ? p >= rs.dual_coxeter() : p >= rs.coxeter();
}

std::vector<LevelTableCell> level_table() {
  std::vector<LevelTableCell> cells;
  for (Algebra g : {Algebra::d4, Algebra::e6, Algebra::e7, Algebra::e8}) {
    const RootSystem& rs = RootSystem::get(g);
    for (int m = 0; m <= negative_level_max_m(g); ++m) {
      Rat ell = ff_dual(rs, k_of_m(rs, m));
      cells.push_back({g, m, ell + rs.dual_coxeter()});
    }
  }
  return cells;
}

int negative_level_max_m(Algebra g) {
  switch (g) {
    case Algebra::d4: return 0;
    case Algebra::e6: return 1;
    case Algebra::e7: return 2;
    case Algebra::e8: return 4;
    default: return -1;
  }
}

} // namespace walab
