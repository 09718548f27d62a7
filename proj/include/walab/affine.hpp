#pragma once

#include "walab/root_system.hpp"

#include <string>
#include <variant>
#include <vector>

namespace walab {

/// Level-graded weight: finite part + level*Lambda_0 + degree*delta.
struct AffineWeight {
  Weight finite;
  Rat level;
  Rat degree;

  bool operator==(const AffineWeight&) const = default;
};

/// alpha + n*delta. Real iff the finite part is nonzero; (0, n) with n != 0 is
/// imaginary; (0, 0) is not a root.
struct AffineRoot {
  RootCoords finite;
  long n = 0;

  bool has_finite_part() const;
  bool is_real() const { return has_finite_part(); }
  AffineRoot negated() const;
  bool operator==(const AffineRoot&) const = default;
};

struct SimpleReflect {
  int i; // 1-based
};
struct RootReflect {
  AffineRoot beta; // must be real
};
struct Translate {
  Weight mu; // coweight-lattice element
};
using WordAtom = std::variant<SimpleReflect, RootReflect, Translate>;

/// Composition of reflections and translations. Atoms are listed left to
/// right as in written products; act() applies them right to left. Words are
/// applied literally, never reduced.
struct WeylWord {
  std::vector<WordAtom> atoms;
};

/// rho + h^vee * Lambda_0.
AffineWeight rho_hat(const RootSystem& rs);

/// <w, beta^vee> for real beta = b + n*delta:
///   <finite(w), b^vee> + n * (2/(b|b)) * level(w).
/// Throws on imaginary beta.
Rat pair_coroot(const RootSystem& rs, const AffineWeight& w, const AffineRoot& beta);

/// <beta, D> = the delta-coefficient.
long degree_pairing(const AffineRoot& beta);

/// A root viewed as a weight: (finite, level 0, degree n).
AffineWeight weight_avatar(const RootSystem& rs, const AffineRoot& r);

AffineWeight act(const RootSystem& rs, const WordAtom& atom, const AffineWeight& x);
AffineWeight act(const RootSystem& rs, const WeylWord& w, const AffineWeight& x);
AffineRoot act(const RootSystem& rs, const WordAtom& atom, const AffineRoot& x);
AffineRoot act(const RootSystem& rs, const WeylWord& w, const AffineRoot& x);

std::string affine_root_str(const RootSystem& rs, const AffineRoot& r);
std::string word_str(const RootSystem& rs, const WeylWord& w);

} // namespace walab
