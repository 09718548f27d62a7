#pragma once

#include "walab/algebra.hpp"
#include "walab/rational.hpp"

#include <vector>

namespace walab {

/// Integer coordinates in the simple-root basis (Bourbaki numbering, 0-based
/// storage for index i-1 of alpha_i). Negative roots are allowed.
using RootCoords = std::vector<long>;

/// Rational coordinates in the fundamental-weight basis: fw[i] = <w, alpha_i^vee>.
struct Weight {
  std::vector<Rat> fw;

  bool operator==(const Weight&) const = default;
  bool operator<(const Weight& o) const { return fw < o.fw; }
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight operator*(const Rat& c, const Weight& a);

enum class ChamberMode { dominant, antidominant };

/// Result of pushing a weight to the (anti)dominant chamber of a shifted
/// action: rep = w(lambda+shift) - shift, where w is the product of the
/// returned simple reflections (word[0] acts last, word.back() acts first).
struct ExtremeResult {
  Weight rep;
  std::vector<int> word; // 1-based simple-root indices
};

/// Exact root-system datum for one series member. The invariant bilinear form
/// is normalized so that (theta|theta) = 2; all arithmetic is over exact
/// rationals. Immutable after construction, safe for concurrent reads.
class RootSystem {
public:
  static RootSystem build(AlgebraId id);
  /// Cached immutable instance.
  static const RootSystem& get(Algebra a);

  AlgebraId id() const { return id_; }
  int rank() const { return rank_; }
  long coxeter() const { return h_; }            // h
  long dual_coxeter() const { return hv_; }      // h^vee
  long dual_dual_coxeter() const { return lhv_; } // h^vee of the Langlands dual type
  long lacing() const { return lacing_; }        // r^vee
  unsigned long long weyl_order() const { return weyl_order_; }

  /// <alpha_j, alpha_i^vee> (rows indexed by the coroot).
  long cartan(int i, int j) const { return cartan_[i][j]; }
  /// d_i = (alpha_i|alpha_i)/2.
  const Rat& symmetrizer(int i) const { return d_[i]; }

  const std::vector<RootCoords>& positive_roots() const { return positive_roots_; }
  const RootCoords& theta() const { return theta_; }
  /// 2*rho = sum of positive roots, in simple-root coordinates.
  const RootCoords& two_rho_roots() const { return two_rho_; }
  const Weight& rho() const { return rho_; }
  const Weight& rho_check() const { return rho_check_; }

  static long height(const RootCoords& r);
  bool is_root(const RootCoords& r) const;
  bool is_positive_root(const RootCoords& r) const;

  Weight zero_weight() const;
  Weight fundamental_weight(int i) const;
  Weight weight_of_root(const RootCoords& r) const;
  /// Exact expansion of a weight in the simple-root basis.
  std::vector<Rat> root_coords(const Weight& w) const;
  Weight from_root_coords(const std::vector<Rat>& rc) const;

  /// The invariant form (a|b), symmetric, Weyl-invariant, (theta|theta) = 2.
  Rat inner(const Weight& a, const Weight& b) const;
  Rat root_norm2(const RootCoords& r) const; // (alpha|alpha)
  /// <w, alpha^vee> = 2(w|alpha)/(alpha|alpha).
  Rat pair_coroot(const Weight& w, const RootCoords& alpha) const;

  /// s_alpha(w) = w - <w, alpha^vee> alpha. Throws if alpha is not a root.
  Weight reflect(const RootCoords& alpha, const Weight& w) const;
  RootCoords reflect_root(const RootCoords& alpha, const RootCoords& x) const;
  Weight simple_reflect(int i, const Weight& w) const; // i is 1-based

  /// Canonical representative of the orbit {w(lambda+shift)-shift}: the unique
  /// element with all simple pairings of rep+shift >= 0 (dominant mode) or
  /// <= 0 (antidominant mode). Zero pairings are left alone, so non-regular
  /// orbits still produce a unique vector.
  ExtremeResult shifted_extreme(const Weight& lambda, const Weight& shift,
                                ChamberMode mode) const;

  /// Full ordinary W-orbit of a weight. cap = 0 means no limit; a nonzero cap
  /// throws if exceeded.
  std::vector<Weight> orbit(const Weight& start, std::size_t cap = 0) const;

  bool is_dominant_integral(const Weight& w) const;
  /// P_+ cap Q with simple-root coordinate sum <= height_bound, sorted by
  /// (height, lex).
  std::vector<Weight> dominant_root_lattice_weights(long height_bound) const;

private:
  RootSystem() = default;
  void enumerate_roots();
  void finalize();

  AlgebraId id_{Algebra::a1};
  int rank_ = 0;
  long h_ = 0, hv_ = 0, lhv_ = 0, lacing_ = 1;
  unsigned long long weyl_order_ = 0;
  std::vector<std::vector<long>> cartan_;
  std::vector<Rat> d_;
  std::vector<std::vector<Rat>> inv_cartan_;
  std::vector<RootCoords> positive_roots_;
  RootCoords theta_;
  RootCoords two_rho_;
  Weight rho_;
  Weight rho_check_;
};

} // namespace walab
