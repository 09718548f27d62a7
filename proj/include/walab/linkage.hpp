#pragma once

#include "walab/affine.hpp"

#include <optional>
#include <vector>

namespace walab {

/// The shift vector rho - (k+h^vee) rho^vee of the level-k dot action.
Weight dot_shift(const RootSystem& rs, const Rat& k);

/// w o_k lambda = w(lambda + rho - (k+h^vee) rho^vee) - (rho - (k+h^vee) rho^vee).
/// The word lists 1-based simple reflections in composition order
/// (rightmost factor acts first).
Weight shifted_dot(const RootSystem& rs, const Rat& k, const std::vector<int>& word,
                   const Weight& lambda);

/// Delta_lambda = (lambda | lambda + 2 rho) / (2(k+h^vee)).
Rat delta_conf(const RootSystem& rs, const Rat& k, const Weight& lambda);

/// h_lambda = Delta_lambda - (lambda | rho^vee).
Rat h_principal(const RootSystem& rs, const Rat& k, const Weight& lambda);

/// Lowest conformal weight on the minimal-reduction side; both printed forms
/// are evaluated and must agree:
///   (lambda|lambda+2rho)/(2(k+h^vee)) - (lambda|theta)/2
///   = (|lambda|^2 + (lambda | 2rho - (k+h^vee) theta)) / (2(k+h^vee)).
Rat h_minimal(const RootSystem& rs, const Rat& k, const Weight& lambda);

/// Canonical (antidominant-shifted) representative of a W o_k orbit; two
/// central characters are equal iff their reps are equal. h is the conformal
/// weight of the representative itself.
struct CentralCharacter {
  Algebra g;
  Rat k;
  Weight rep;
  Rat h;

  bool operator==(const CentralCharacter& o) const {
    return g == o.g && k == o.k && rep == o.rep;
  }
};

CentralCharacter central_char_rep(const RootSystem& rs, const Rat& k, const Weight& lambda);

/// Full W o_k orbit (sorted). cap as in RootSystem::orbit.
std::vector<Weight> dot_orbit(const RootSystem& rs, const Rat& k, const Weight& lambda,
                              std::size_t cap = 0);

/// q-expansion of the Verma character q^{h_lambda} / prod_j (1-q^j)^{rank}:
/// coeffs[n] multiplies q^{h_lambda + n}.
struct VermaCharacter {
  Rat exponent;
  std::vector<BigInt> coeffs;
};

VermaCharacter verma_character(const RootSystem& rs, const Rat& k, const Weight& lambda, int order);

struct ChainStep {
  AffineRoot beta; // positive real root
  long mult;       // the positive integer n_i of the step
};

/// Exact witness for target <= source in the Kac-Kazhdan order: a sequence of
/// downward steps source -> source - n_1 b_1 -> ... -> target with
/// 2(b_i, prev + rho_hat) = n_i (b_i|b_i) at every step.
struct LinkageChain {
  AffineWeight source;
  AffineWeight target;
  std::vector<ChainStep> steps;
};

/// Independent re-check of every step equation via the invariant form.
bool verify_chain(const RootSystem& rs, const LinkageChain& chain);

/// Bounded search for a descending chain. Only real roots with
/// delta-coefficient in [0, root_bound] are tried (at a non-critical level the
/// imaginary step equation has no solutions). nullopt means "not found within
/// (depth, bound)", never proven incomparability.
std::optional<LinkageChain> kk_descend(const RootSystem& rs, const AffineWeight& source,
                                       const AffineWeight& target, int max_depth,
                                       long root_bound);

/// lambda' - (k+h^vee) rho^vee + k Lambda_0 - Delta_{lambda'-(k+h^vee)rho^vee} delta.
AffineWeight affinize(const RootSystem& rs, const Rat& k, const Weight& lambda);

struct WprecOptions {
  int max_depth = 3;
  long root_bound = 12;
  /// Full orbit enumeration is used when |W| <= full_orbit_limit; beyond that
  /// only dot-orbit elements within word_bound reflections of the canonical
  /// dominant and antidominant representatives are tried.
  unsigned long long full_orbit_limit = 51840;
  int word_bound = 6;
};

/// Bounded decision for chi_lo <=_k chi_hi: searches lambda' over the orbit of
/// hi, takes the canonical antidominant representative of lo, and looks for a
/// Kac-Kazhdan chain between the affinized weights. A chain is a certificate;
/// nullopt is only a bounded-search failure.
std::optional<LinkageChain> wprec(const RootSystem& rs, const Rat& k,
                                  const CentralCharacter& lo, const CentralCharacter& hi,
                                  const WprecOptions& opts = {});

/// h_lambda = Delta_{lambda-(k+h^vee)rho^vee} + (rho|rho^vee) - ((k+h^vee)/2)|rho^vee|^2.
bool conf_dim_identity(const RootSystem& rs, const Rat& k, const Weight& lambda);

} // namespace walab
