#pragma once

#include "walab/linkage.hpp"

#include <string>
#include <vector>

namespace walab {

/// One certified row of the base data: the dual level l(m)+h^vee = p/(p-1),
/// the extended-Weyl-group element y, and the distinguished base element
/// beta = y(alpha_{beta_from}).
struct CertificateCase {
  Algebra g;
  int m;
  int p;
  WeylWord y;
  int beta_from; // 1-based simple-root index
};

/// All eleven certified rows (d4 m=0; e6 m=0,1; e7 m=0..2; e8 m=0..4).
const std::vector<CertificateCase>& certificate_cases();
const CertificateCase& certificate_case(Algebra g, int m); // throws if absent

/// Single named equality/predicate with exact sides kept for the report.
struct Check {
  std::string name;
  bool pass;
  std::string lhs;
  std::string rhs;
};

struct CheckList {
  std::vector<Check> checks;
  std::vector<std::string> caveats;

  bool pass() const;
  void add(std::string name, bool ok, std::string lhs, std::string rhs);
};

/// Lambda + rho_hat for the case's level, built from
/// Lambda = -(l+h^vee) rho^vee + l Lambda_0 and cross-checked against the
/// closed form -rho/(p-1) + (p/(p-1)) Lambda_0. Throws on disagreement.
AffineWeight lambda_hat(const RootSystem& rs, const CertificateCase& c);

/// The level l(m) of the case.
Rat case_level(const RootSystem& rs, const CertificateCase& c);

/// beta = y(alpha_{beta_from}).
AffineRoot case_beta(const RootSystem& rs, const CertificateCase& c);

/// Membership in the integral root system: <lam_hat, beta^vee> integral.
bool is_integral_root(const RootSystem& rs, const AffineWeight& lam_hat, const AffineRoot& beta);

/// S_(q) = {alpha_1, ..., alpha_rank, -theta + q delta}.
std::vector<AffineRoot> s_set(const RootSystem& rs, long q);

/// y(S_(p-1)); every image is checked to be a real root.
std::vector<AffineRoot> candidate_base(const RootSystem& rs, const CertificateCase& c);

/// Checks that the candidate base is a base of the integral root system:
/// (a) each element is integral; (b) the pairing matrix equals the untwisted
/// affine Cartan matrix of g up to simultaneous permutation; (c) every
/// integral positive real root with delta-coefficient <= n_bound is a
/// nonnegative-integer combination of base elements.
CheckList verify_base(const RootSystem& rs, const CertificateCase& c, long n_bound);

/// <lam_hat, beta^vee> = -1 and >= 1 on the rest; <beta, D> = 0 and > 0 on
/// the rest.
CheckList verify_findings(const RootSystem& rs, const CertificateCase& c);

/// 2 rho - (k+h^vee) theta has all simple-root coordinates >= 0.
Check cone_condition(const RootSystem& rs, const Rat& k);

/// finite(beta) + (l+h^vee) rho^vee is not in the shifted-dot orbit of any
/// dominant integral weight. Decided exactly: a lattice obstruction when it
/// applies, otherwise full orbit enumeration.
CheckList verify_exclusion(const RootSystem& rs, const CertificateCase& c);

/// Exhaustive bounded screening of the h-positivity condition at l(m): every
/// nonzero lambda in P_+ cap Q up to height_bound that is comparable with
/// chi_0 (either direction, within the search bounds) must have h_lambda > 0.
CheckList screen_h_positivity(const RootSystem& rs, int m, long height_bound, int depth,
                                long root_bound);

} // namespace walab
