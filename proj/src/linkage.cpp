#include "walab/linkage.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace walab {

namespace {

void require_noncritical(const RootSystem& rs, const Rat& k) {
  if (k + rs.dual_coxeter() == 0) throw std::invalid_argument("critical level");
}

// Invariant form on affine weights, (Lambda_0|Lambda_0) = 0, (Lambda_0|delta) = 1.
Rat affine_inner(const RootSystem& rs, const AffineWeight& a, const AffineWeight& b) {
  return rs.inner(a.finite, b.finite) + a.level * b.degree + b.level * a.degree;
}

AffineWeight subtract_root(const RootSystem& rs, const AffineWeight& w, const AffineRoot& b,
                           long mult) {
  AffineWeight r = w;
  r.finite = w.finite - Rat(mult) * rs.weight_of_root(b.finite);
  r.degree = w.degree - Rat(mult) * b.n;
  return r;
}

} // namespace

Weight dot_shift(const RootSystem& rs, const Rat& k) {
  return rs.rho() - (k + rs.dual_coxeter()) * rs.rho_check();
}

Weight shifted_dot(const RootSystem& rs, const Rat& k, const std::vector<int>& word,
                   const Weight& lambda) {
  Weight shift = dot_shift(rs, k);
  Weight v = lambda + shift;
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = rs.simple_reflect(*it, v);
  return v - shift;
}

Rat delta_conf(const RootSystem& rs, const Rat& k, const Weight& lambda) {
  require_noncritical(rs, k);
  Weight two_rho = Rat(2) * rs.rho();
  return rs.inner(lambda, lambda + two_rho) / (2 * (k + rs.dual_coxeter()));
}

Rat h_principal(const RootSystem& rs, const Rat& k, const Weight& lambda) {
  return delta_conf(rs, k, lambda) - rs.inner(lambda, rs.rho_check());
}

Rat h_minimal(const RootSystem& rs, const Rat& k, const Weight& lambda) {
  require_noncritical(rs, k);
  Rat t = k + rs.dual_coxeter();
  Weight theta_w = rs.weight_of_root(rs.theta());
  Rat first = delta_conf(rs, k, lambda) - rs.inner(lambda, theta_w) / 2;
  Rat second = (rs.inner(lambda, lambda) +
                rs.inner(lambda, Rat(2) * rs.rho() - t * theta_w)) /
               (2 * t);
  if (first != second) throw std::logic_error("h_minimal: displayed forms disagree");
  return first;
}

CentralCharacter central_char_rep(const RootSystem& rs, const Rat& k, const Weight& lambda) {
  Weight shift = dot_shift(rs, k);
  ExtremeResult ex = rs.shifted_extreme(lambda, shift, ChamberMode::antidominant);
  Rat h = h_principal(rs, k, ex.rep);
  return CentralCharacter{rs.id().value, k, std::move(ex.rep), std::move(h)};
}

std::vector<Weight> dot_orbit(const RootSystem& rs, const Rat& k, const Weight& lambda,
                              std::size_t cap) {
  Weight shift = dot_shift(rs, k);
  std::vector<Weight> shifted = rs.orbit(lambda + shift, cap);
  std::vector<Weight> out;
  out.reserve(shifted.size());
  for (auto& w : shifted) out.push_back(w - shift);
  std::sort(out.begin(), out.end());
  return out;
}

VermaCharacter verma_character(const RootSystem& rs, const Rat& k, const Weight& lambda,
                               int order) {
  if (order < 0) throw std::invalid_argument("verma_character: order must be >= 0");
  VermaCharacter vc;
  vc.exponent = h_principal(rs, k, lambda);
  vc.coeffs.assign(order + 1, 0);
  vc.coeffs[0] = 1;
  // prod_{j>=1} (1-q^j)^{-rank}: one geometric factor at a time.
  for (int rep = 0; rep < rs.rank(); ++rep) {
    for (int j = 1; j <= order; ++j) {
      for (int n = j; n <= order; ++n) vc.coeffs[n] += vc.coeffs[n - j];
    }
  }
  return vc;
}

bool verify_chain(const RootSystem& rs, const LinkageChain& chain) {
  AffineWeight cur = chain.source;
  AffineWeight rh = rho_hat(rs);
  for (const ChainStep& st : chain.steps) {
    if (st.mult < 1) return false;
    bool positive = st.beta.n > 0 || (st.beta.n == 0 && rs.is_positive_root(st.beta.finite));
    if (!st.beta.is_real() || !rs.is_root(st.beta.finite) || !positive) return false;
    AffineWeight shifted = cur;
    shifted.finite = cur.finite + rh.finite;
    shifted.level = cur.level + rh.level;
    shifted.degree = cur.degree + rh.degree;
    Rat lhs = 2 * affine_inner(rs, weight_avatar(rs, st.beta), shifted);
    Rat rhs = Rat(st.mult) * rs.root_norm2(st.beta.finite);
    if (lhs != rhs) return false;
    cur = subtract_root(rs, cur, st.beta, st.mult);
  }
  return cur == chain.target;
}

namespace {

struct ChainSearch {
  const RootSystem& rs;
  AffineWeight target;
  int max_depth;
  long root_bound;
  AffineWeight rho_hat_w;
  std::vector<AffineRoot> candidates;
  // Smallest depth at which a node was proven chainless; dead at depth d
  // implies dead at every depth >= d (less remaining budget).
  std::map<std::pair<std::vector<Rat>, Rat>, int> dead_at;

  bool reachable_pruned(const AffineWeight& cur) const {
    // Steps only subtract n*beta with integral root coordinates and
    // delta-coefficient >= 0.
    Rat ddeg = cur.degree - target.degree;
    if (!is_integer(ddeg) || ddeg < 0) return false;
    std::vector<Rat> diff = rs.root_coords(cur.finite - target.finite);
    for (const Rat& c : diff)
      if (!is_integer(c)) return false;
    if (ddeg == 0) {
      // Only finite positive roots remain; need a nonnegative combination.
      for (const Rat& c : diff)
        if (c < 0) return false;
    }
    return true;
  }

  bool dfs(const AffineWeight& cur, int depth, std::vector<ChainStep>& steps) {
    if (cur == target) return true;
    if (depth == max_depth) return false;
    if (!reachable_pruned(cur)) return false;
    auto key = std::make_pair(cur.finite.fw, cur.degree);
    if (auto it = dead_at.find(key); it != dead_at.end() && depth >= it->second) return false;
    AffineWeight shifted{cur.finite + rho_hat_w.finite, cur.level + rho_hat_w.level,
                         cur.degree + rho_hat_w.degree};
    for (const AffineRoot& b : candidates) {
      Rat pairing = pair_coroot(rs, shifted, b);
      if (!is_integer(pairing) || pairing < 1) continue;
      long mult = static_cast<long>(as_integer(pairing));
      AffineWeight child = subtract_root(rs, cur, b, mult);
      steps.push_back(ChainStep{b, mult});
      if (dfs(child, depth + 1, steps)) return true;
      steps.pop_back();
    }
    auto [it, inserted] = dead_at.emplace(key, depth);
    if (!inserted && depth < it->second) it->second = depth;
    return false;
  }
};

} // namespace

std::optional<LinkageChain> kk_descend(const RootSystem& rs, const AffineWeight& source,
                                       const AffineWeight& target, int max_depth,
                                       long root_bound) {
  if (source.level != target.level)
    throw std::invalid_argument("kk_descend: endpoints at different levels");
  if (source.level + rs.dual_coxeter() == 0)
    throw std::invalid_argument("kk_descend: critical level (imaginary steps excluded)");
  ChainSearch search{rs, target, max_depth, root_bound, rho_hat(rs), {}, {}};
  for (long n = 0; n <= root_bound; ++n) {
    for (const RootCoords& r : rs.positive_roots()) {
      search.candidates.push_back(AffineRoot{r, n});
      if (n > 0) {
        RootCoords neg = r;
        for (auto& c : neg) c = -c;
        search.candidates.push_back(AffineRoot{neg, n});
      }
    }
  }
  LinkageChain chain{source, target, {}};
  if (!search.dfs(source, 0, chain.steps)) return std::nullopt;
  if (!verify_chain(rs, chain)) throw std::logic_error("kk_descend produced an invalid chain");
  return chain;
}

AffineWeight affinize(const RootSystem& rs, const Rat& k, const Weight& lambda) {
  require_noncritical(rs, k);
  Weight nu = lambda - (k + rs.dual_coxeter()) * rs.rho_check();
  return AffineWeight{nu, k, -delta_conf(rs, k, nu)};
}

std::optional<LinkageChain> wprec(const RootSystem& rs, const Rat& k,
                                  const CentralCharacter& lo, const CentralCharacter& hi,
                                  const WprecOptions& opts) {
  if (lo.k != hi.k || lo.k != k) throw std::invalid_argument("wprec: mismatched levels");
  Weight shift = dot_shift(rs, k);
  Weight anti = rs.shifted_extreme(lo.rep, shift, ChamberMode::antidominant).rep;
  AffineWeight target = affinize(rs, k, anti);

  std::vector<Weight> candidates;
  if (rs.weyl_order() <= opts.full_orbit_limit) {
    candidates = dot_orbit(rs, k, hi.rep);
  } else {
    // Bounded neighbourhoods of the two canonical representatives.
    std::set<std::vector<Rat>> seen;
    auto expand = [&](const Weight& start) {
      std::vector<Weight> frontier = {start};
      if (seen.insert((start + shift).fw).second) candidates.push_back(start);
      for (int d = 0; d < opts.word_bound; ++d) {
        std::vector<Weight> next;
        for (const Weight& w : frontier) {
          for (int i = 1; i <= rs.rank(); ++i) {
            Weight img = rs.simple_reflect(i, w + shift) - shift;
            if (seen.insert((img + shift).fw).second) {
              candidates.push_back(img);
              next.push_back(std::move(img));
            }
          }
        }
        frontier = std::move(next);
      }
    };
    expand(rs.shifted_extreme(hi.rep, shift, ChamberMode::dominant).rep);
    expand(rs.shifted_extreme(hi.rep, shift, ChamberMode::antidominant).rep);
  }

  for (const Weight& lam : candidates) {
    AffineWeight source = affinize(rs, k, lam);
    if (auto chain = kk_descend(rs, source, target, opts.max_depth, opts.root_bound))
      return chain;
  }
  return std::nullopt;
}

bool conf_dim_identity(const RootSystem& rs, const Rat& k, const Weight& lambda) {
  require_noncritical(rs, k);
  Rat t = k + rs.dual_coxeter();
  Rat lhs = h_principal(rs, k, lambda);
  Weight nu = lambda - t * rs.rho_check();
  Rat rho_pair = rs.inner(rs.rho(), rs.rho_check());
  Rat rv2 = rs.inner(rs.rho_check(), rs.rho_check());
  Rat rhs = delta_conf(rs, k, nu) + rho_pair - t / 2 * rv2;
  return lhs == rhs;
}

} // namespace walab
