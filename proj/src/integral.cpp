#include "walab/integral.hpp"

#include "walab/levels.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace walab {

namespace {

WeylWord make_y(const RootSystem& rs, int p, std::initializer_list<int> simples) {
  WeylWord w;
  RootCoords mtheta = rs.theta();
  for (auto& c : mtheta) c = -c;
  w.atoms.push_back(Translate{-rs.rho_check()});
  w.atoms.push_back(RootReflect{AffineRoot{mtheta, p - 1}});
  for (int i : simples) w.atoms.push_back(SimpleReflect{i});
  return w;
}

std::vector<CertificateCase> build_cases() {
  std::vector<CertificateCase> cases;
  auto add = [&](Algebra g, int m, int p, std::initializer_list<int> simples, int beta_from) {
    const RootSystem& rs = RootSystem::get(g);
    cases.push_back(CertificateCase{g, m, p, make_y(rs, p, simples), beta_from});
  };
  add(Algebra::d4, 0, 5, {2}, 2);
  add(Algebra::e6, 0, 10, {2, 4}, 4);
  add(Algebra::e6, 1, 11, {2}, 2);
  add(Algebra::e7, 0, 15, {1, 3, 4}, 4);
  add(Algebra::e7, 1, 16, {1, 3}, 3);
  add(Algebra::e7, 2, 17, {1}, 1);
  add(Algebra::e8, 0, 25, {8, 7, 6, 5, 4}, 4);
  add(Algebra::e8, 1, 26, {8, 7, 6, 5}, 5);
  add(Algebra::e8, 2, 27, {8, 7, 6}, 6);
  add(Algebra::e8, 3, 28, {8, 7}, 7);
  add(Algebra::e8, 4, 29, {8}, 8);
  return cases;
}

std::string coords_str(const std::vector<Rat>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << rat_str(v[i]);
  os << ")";
  return os.str();
}

// Untwisted affine Cartan matrix, node 0 = delta - theta.
std::vector<std::vector<long>> affine_cartan(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<std::vector<long>> a(n + 1, std::vector<long>(n + 1, 0));
  a[0][0] = 2;
  Weight theta_w = rs.weight_of_root(rs.theta());
  for (int i = 1; i <= n; ++i) {
    RootCoords alpha(n, 0);
    alpha[i - 1] = 1;
    // alpha_0 = delta - theta: both pairings lose the delta part.
    a[0][i] = -static_cast<long>(as_integer(rs.pair_coroot(rs.weight_of_root(alpha), rs.theta())));
    a[i][0] = -static_cast<long>(as_integer(theta_w.fw[i - 1]));
    for (int j = 1; j <= n; ++j) a[i][j] = rs.cartan(i - 1, j - 1);
  }
  return a;
}

// Simultaneous-permutation matrix match by backtracking.
bool cartan_match(const std::vector<std::vector<long>>& m,
                  const std::vector<std::vector<long>>& target) {
  const std::size_t n = m.size();
  if (target.size() != n) return false;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t]) continue;
      bool ok = true;
      for (std::size_t j = 0; j <= i && ok; ++j) {
        if (perm[j] < 0) continue;
        if (m[i][j] != target[t][perm[j]] || m[j][i] != target[perm[j]][t]) ok = false;
      }
      if (m[i][i] != target[t][t]) ok = false;
      if (!ok) continue;
      perm[i] = static_cast<int>(t);
      used[t] = true;
      if (self(self, i + 1)) return true;
      perm[i] = -1;
      used[t] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

// Square rational inverse (Gauss-Jordan); throws on singular input.
std::vector<std::vector<Rat>> invert(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw std::invalid_argument("singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rat lead = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= lead;
      inv[col][j] /= lead;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

} // namespace

const std::vector<CertificateCase>& certificate_cases() {
  static const std::vector<CertificateCase> cases = build_cases();
  return cases;
}

const CertificateCase& certificate_case(Algebra g, int m) {
  for (const CertificateCase& c : certificate_cases())
    if (c.g == g && c.m == m) return c;
  throw std::invalid_argument("no certified case for " + AlgebraId{g}.name() + ", m=" +
                              std::to_string(m));
}

bool CheckList::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void CheckList::add(std::string name, bool ok, std::string lhs, std::string rhs) {
  checks.push_back(Check{std::move(name), ok, std::move(lhs), std::move(rhs)});
}

Rat case_level(const RootSystem& rs, const CertificateCase& c) {
  Rat ell = ff_dual(rs, k_of_m(rs, c.m));
  if (ell + rs.dual_coxeter() != Rat(c.p, c.p - 1))
    throw std::logic_error("case data: l(m)+h^vee != p/(p-1)");
  return ell;
}

AffineWeight lambda_hat(const RootSystem& rs, const CertificateCase& c) {
  Rat ell = case_level(rs, c);
  Rat t = ell + rs.dual_coxeter();
  AffineWeight lam{(-t) * rs.rho_check(), ell, 0};
  AffineWeight rh = rho_hat(rs);
  AffineWeight built{lam.finite + rh.finite, lam.level + rh.level, lam.degree + rh.degree};
  AffineWeight closed{Rat(-1, c.p - 1) * rs.rho(), Rat(c.p, c.p - 1), 0};
  if (!(built == closed))
    throw std::logic_error("lambda_hat: construction and closed form disagree");
  return built;
}

AffineRoot case_beta(const RootSystem& rs, const CertificateCase& c) {
  RootCoords alpha(rs.rank(), 0);
  alpha[c.beta_from - 1] = 1;
  return act(rs, c.y, AffineRoot{alpha, 0});
}

bool is_integral_root(const RootSystem& rs, const AffineWeight& lam_hat, const AffineRoot& beta) {
  if (!beta.is_real()) throw std::invalid_argument("integrality test needs a real root");
  return is_integer(pair_coroot(rs, lam_hat, beta));
}

std::vector<AffineRoot> s_set(const RootSystem& rs, long q) {
  if (q < 1) throw std::invalid_argument("s_set: q must be >= 1");
  std::vector<AffineRoot> out;
  for (int i = 0; i < rs.rank(); ++i) {
    RootCoords alpha(rs.rank(), 0);
    alpha[i] = 1;
    out.push_back(AffineRoot{alpha, 0});
  }
  RootCoords mtheta = rs.theta();
  for (auto& c : mtheta) c = -c;
  out.push_back(AffineRoot{mtheta, q});
  return out;
}

std::vector<AffineRoot> candidate_base(const RootSystem& rs, const CertificateCase& c) {
  std::vector<AffineRoot> base;
  for (const AffineRoot& s : s_set(rs, c.p - 1)) {
    AffineRoot img = act(rs, c.y, s);
    if (!img.is_real() || !rs.is_root(img.finite))
      throw std::logic_error("candidate base image is not a real root");
    base.push_back(std::move(img));
  }
  return base;
}

CheckList verify_base(const RootSystem& rs, const CertificateCase& c, long n_bound) {
  if (n_bound < 2 * c.p) throw std::invalid_argument("verify_base: n_bound must be >= 2p");
  CheckList out;
  AffineWeight lh = lambda_hat(rs, c);
  std::vector<AffineRoot> base = candidate_base(rs, c);
  const int n = rs.rank();

  for (std::size_t i = 0; i < base.size(); ++i) {
    Rat pairing = pair_coroot(rs, lh, base[i]);
    out.add("base_integral[" + affine_root_str(rs, base[i]) + "]", is_integer(pairing),
            rat_str(pairing), "integer");
  }

  std::vector<std::vector<long>> m(base.size(), std::vector<long>(base.size()));
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = 0; j < base.size(); ++j)
      m[i][j] = static_cast<long>(
          as_integer(rs.pair_coroot(rs.weight_of_root(base[j].finite), base[i].finite)));
  bool match = cartan_match(m, affine_cartan(rs));
  out.add("base_cartan_matrix", match, match ? "matches up to permutation" : "no permutation works",
          "untwisted affine type of " + rs.id().name());

  // Decomposition test over the integral positive real roots with bounded
  // delta-coefficient. Base vectors are independent in (root coords, delta).
  std::vector<std::vector<Rat>> bm(n + 1, std::vector<Rat>(base.size()));
  for (std::size_t j = 0; j < base.size(); ++j) {
    for (int i = 0; i < n; ++i) bm[i][j] = base[j].finite[i];
    bm[n][j] = base[j].n;
  }
  std::vector<std::vector<Rat>> bi = invert(std::move(bm));
  long failures = 0, tested = 0;
  std::string witness;
  for (long nn = 0; nn <= n_bound; ++nn) {
    for (const RootCoords& pr : rs.positive_roots()) {
      for (int sign = 0; sign < (nn == 0 ? 1 : 2); ++sign) {
        RootCoords fin = pr;
        if (sign == 1)
          for (auto& x : fin) x = -x;
        AffineRoot r{fin, nn};
        if (!is_integral_root(rs, lh, r)) continue;
        ++tested;
        bool ok = true;
        for (std::size_t i = 0; i < base.size() && ok; ++i) {
          Rat coeff = 0;
          for (int j = 0; j < n; ++j) coeff += bi[i][j] * r.finite[j];
          coeff += bi[i][n] * r.n;
          if (!is_integer(coeff) || coeff < 0) ok = false;
        }
        if (!ok && ++failures == 1) witness = affine_root_str(rs, r);
      }
    }
  }
  out.add("base_positive_decomposition", failures == 0,
          std::to_string(tested - failures) + " of " + std::to_string(tested) + " decompose",
          "all integral positive roots, delta-coefficient <= " + std::to_string(n_bound) +
              (failures ? ", first failure " + witness : ""));
  out.caveats.push_back("positivity of the base checked up to delta-coefficient " +
                        std::to_string(n_bound) + "; the integral root system is infinite");
  return out;
}

CheckList verify_findings(const RootSystem& rs, const CertificateCase& c) {
  CheckList out;
  AffineWeight lh = lambda_hat(rs, c);
  AffineRoot beta = case_beta(rs, c);
  std::vector<AffineRoot> base = candidate_base(rs, c);

  bool beta_in_base = std::find(base.begin(), base.end(), beta) != base.end();
  out.add("beta_in_base", beta_in_base, affine_root_str(rs, beta), "member of y(S)");

  Rat bp = pair_coroot(rs, lh, beta);
  out.add("pairing_beta", bp == -1, rat_str(bp), "-1");
  out.add("degree_beta", degree_pairing(beta) == 0, std::to_string(degree_pairing(beta)), "0");

  for (const AffineRoot& gamma : base) {
    if (gamma == beta) continue;
    Rat gp = pair_coroot(rs, lh, gamma);
    std::string tag = "[" + affine_root_str(rs, gamma) + "]";
    out.add("pairing_rest" + tag, is_integer(gp) && gp >= 1, rat_str(gp), ">= 1");
    out.add("degree_rest" + tag, degree_pairing(gamma) > 0,
            std::to_string(degree_pairing(gamma)), "> 0");
  }
  return out;
}

Check cone_condition(const RootSystem& rs, const Rat& k) {
  Rat t = k + rs.dual_coxeter();
  std::vector<Rat> coords(rs.rank());
  bool ok = true;
  for (int i = 0; i < rs.rank(); ++i) {
    coords[i] = Rat(rs.two_rho_roots()[i]) - t * rs.theta()[i];
    if (coords[i] < 0) ok = false;
  }
  return Check{"cone_coordinates", ok, coords_str(coords), "all >= 0"};
}

CheckList verify_exclusion(const RootSystem& rs, const CertificateCase& c) {
  CheckList out;
  out.caveats.push_back(
      "the orbit test uses the level-l shifted dot action throughout");
  Rat ell = case_level(rs, c);
  Rat t = ell + rs.dual_coxeter();
  AffineRoot beta = case_beta(rs, c);
  Weight x = rs.weight_of_root(beta.finite) + t * rs.rho_check();
  Weight shift = dot_shift(rs, ell);
  Weight y0 = x + shift;

  bool y0_integral = std::all_of(y0.fw.begin(), y0.fw.end(), [](const Rat& r) { return is_integer(r); });
  bool shift_integral =
      std::all_of(shift.fw.begin(), shift.fw.end(), [](const Rat& r) { return is_integer(r); });

  if (y0_integral && !shift_integral) {
    // w(y0) is integral for every w, so w(y0)-shift never is; the orbit misses
    // P_+ entirely.
    out.add("orbit_avoids_dominant", true,
            "orbit of " + coords_str(y0.fw) + " - shift is disjoint from the weight lattice",
            "no dominant integral weight in the shifted orbit");
    return out;
  }

  std::vector<Weight> orb = rs.orbit(y0, rs.weyl_order());
  const Weight* found = nullptr;
  for (const Weight& w : orb) {
    Weight cand = w - shift;
    if (rs.is_dominant_integral(cand)) { found = &w; break; }
  }
  if (found) {
    Weight cand = *found - shift;
    out.add("orbit_avoids_dominant", false, coords_str(cand.fw), "in the orbit of P_+");
  } else {
    out.add("orbit_avoids_dominant", true,
            "orbit of size " + std::to_string(orb.size()) + " enumerated",
            "no dominant integral weight in the shifted orbit");
  }
  return out;
}

CheckList screen_h_positivity(const RootSystem& rs, int m, long height_bound, int depth,
                                long root_bound) {
  Algebra g = rs.id().value;
  if (g != Algebra::a1 && g != Algebra::a2 && g != Algebra::d4)
    throw std::invalid_argument("exhaustive screening is limited to a1, a2, d4");
  CheckList out;
  Rat ell = ff_dual(rs, k_of_m(rs, m));
  CentralCharacter chi0 = central_char_rep(rs, ell, rs.zero_weight());
  out.add("h_zero", h_principal(rs, ell, rs.zero_weight()) == 0,
          rat_str(h_principal(rs, ell, rs.zero_weight())), "0");

  WprecOptions opts;
  opts.max_depth = depth;
  opts.root_bound = root_bound;
  long comparable = 0;
  for (const Weight& lam : rs.dominant_root_lattice_weights(height_bound)) {
    if (lam == rs.zero_weight()) continue;
    CentralCharacter chi = central_char_rep(rs, ell, lam);
    bool related = wprec(rs, ell, chi, chi0, opts).has_value() ||
                   wprec(rs, ell, chi0, chi, opts).has_value();
    if (!related) continue;
    ++comparable;
    Rat h = h_principal(rs, ell, lam);
    out.add("h_positive" + coords_str(lam.fw), h > 0, rat_str(h), "> 0");
  }
  out.add("comparable_count", true, std::to_string(comparable), "screened");
  out.caveats.push_back("comparability searched within depth " + std::to_string(depth) +
                        ", delta-coefficient bound " + std::to_string(root_bound) +
                        "; negatives are bounded-search failures, not proofs");
  return out;
}

} // namespace walab
