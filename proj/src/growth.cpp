#include "walab/growth.hpp"

#include <numeric>
#include <stdexcept>

namespace walab {

Rat growth_vir_minimal(long p, long q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1)
    throw std::invalid_argument("minimal-model growth requires coprime p,q >= 2");
  return 1 - Rat(6, p * q);
}

Rat growth_vir_universal() { return 1; }

const GrowthEntry& GrowthLedger::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return e;
  throw std::invalid_argument("no ledger entry named " + name);
}

const Rat& GrowthLedger::value(const std::string& name) const { return find(name).value; }

GrowthLedger deligne_ledger(const RootSystem& rs) {
  Algebra g = rs.id().value;
  if (g != Algebra::d4 && g != Algebra::e6 && g != Algebra::e7 && g != Algebra::e8)
    throw std::invalid_argument("growth ledger covers d4, e6, e7, e8 only");
  GrowthLedger ledger{g, {}};
  Rat g25 = growth_vir_minimal(2, 5);
  Rat g35 = growth_vir_minimal(3, 5);
  ledger.entries.push_back({"min(2,5)", g25, "1 - 6/(2*5)"});
  ledger.entries.push_back({"min(3,5)", g35, "1 - 6/(3*5)"});
  ledger.entries.push_back({"level1(sl2)", g25 + g35, "conformal extension: min(2,5) + min(3,5)"});
  Rat gl1 = Rat(rs.rank());
  ledger.entries.push_back({"level1(g)", gl1, "rank(g), external-standard input"});
  Rat coset = gl1 - (g25 + g35);
  ledger.entries.push_back({"coset", coset, "level1(g) - level1(sl2)"});
  Rat wk = g35 + coset;
  ledger.entries.push_back({"minimalW", wk, "min(3,5) + coset"});
  ledger.entries.push_back({"level1(g) [derived]", wk + g25, "minimalW + min(2,5)"});
  return ledger;
}

ContradictionResult contradiction_check(const RootSystem& rs) {
  GrowthLedger ledger = deligne_ledger(rs);
  Rat lhs = ledger.value("level1(g)");
  Rat rhs = ledger.value("minimalW") + growth_vir_universal();
  // lhs = minimalW + 2/5 by the ledger, so the bound reduces to 1 <= 2/5.
  Rat reduced = lhs - ledger.value("minimalW");
  ContradictionResult res;
  res.contradiction_reproduced = !(lhs >= rhs);
  res.hypothetical_lhs = lhs;
  res.hypothetical_rhs = rhs;
  res.normal_form = "1 <= " + rat_str(reduced) + " : " + (1 <= reduced ? "true" : "false");
  return res;
}

} // namespace walab
