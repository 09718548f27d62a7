#include "walab/affine.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace walab {

namespace {

// Coweight-lattice test: (alpha_i | mu) must be integral for every i, so that
// translated roots keep integer delta-coefficients.
void require_coweight(const RootSystem& rs, const Weight& mu) {
  for (int i = 0; i < rs.rank(); ++i) {
    if (!is_integer(rs.symmetrizer(i) * mu.fw[i]))
      throw std::invalid_argument("translation vector is not in the coweight lattice");
  }
}

Rat inner_finite(const RootSystem& rs, const Weight& w, const RootCoords& alpha) {
  Rat s = 0;
  for (int j = 0; j < rs.rank(); ++j)
    if (alpha[j] != 0) s += Rat(alpha[j]) * rs.symmetrizer(j) * w.fw[j];
  return s;
}

} // namespace

bool AffineRoot::has_finite_part() const {
  return std::any_of(finite.begin(), finite.end(), [](long c) { return c != 0; });
}

AffineRoot AffineRoot::negated() const {
  AffineRoot r = *this;
  for (auto& c : r.finite) c = -c;
  r.n = -r.n;
  return r;
}

AffineWeight rho_hat(const RootSystem& rs) {
  return AffineWeight{rs.rho(), Rat(rs.dual_coxeter()), 0};
}

Rat pair_coroot(const RootSystem& rs, const AffineWeight& w, const AffineRoot& beta) {
  if (!beta.is_real()) throw std::invalid_argument("pairing against an imaginary coroot");
  Rat norm = rs.root_norm2(beta.finite);
  return rs.pair_coroot(w.finite, beta.finite) + Rat(beta.n) * 2 / norm * w.level;
}

long degree_pairing(const AffineRoot& beta) { return beta.n; }

AffineWeight weight_avatar(const RootSystem& rs, const AffineRoot& r) {
  return AffineWeight{rs.weight_of_root(r.finite), 0, Rat(r.n)};
}

AffineWeight act(const RootSystem& rs, const WordAtom& atom, const AffineWeight& x) {
  if (const auto* s = std::get_if<SimpleReflect>(&atom)) {
    AffineWeight r = x;
    r.finite = rs.simple_reflect(s->i, x.finite);
    return r;
  }
  if (const auto* s = std::get_if<RootReflect>(&atom)) {
    const AffineRoot& b = s->beta;
    if (!b.is_real()) throw std::invalid_argument("reflection in an imaginary root");
    if (!rs.is_root(b.finite)) throw std::invalid_argument("reflection finite part is not a root");
    Rat c = pair_coroot(rs, x, b);
    AffineWeight r = x;
    r.finite = x.finite - c * rs.weight_of_root(b.finite);
    r.degree = x.degree - c * b.n;
    return r;
  }
  const auto& t = std::get<Translate>(atom);
  require_coweight(rs, t.mu);
  AffineWeight r = x;
  r.finite = x.finite + x.level * t.mu;
  r.degree = x.degree - rs.inner(x.finite, t.mu) - rs.inner(t.mu, t.mu) / 2 * x.level;
  return r;
}

AffineWeight act(const RootSystem& rs, const WeylWord& w, const AffineWeight& x) {
  AffineWeight r = x;
  for (auto it = w.atoms.rbegin(); it != w.atoms.rend(); ++it) r = act(rs, *it, r);
  return r;
}

AffineRoot act(const RootSystem& rs, const WordAtom& atom, const AffineRoot& x) {
  if (const auto* t = std::get_if<Translate>(&atom)) {
    require_coweight(rs, t->mu);
    AffineRoot r = x;
    r.n = x.n - static_cast<long>(as_integer(inner_finite(rs, t->mu, x.finite)));
    return r;
  }
  // Reflections act through the weight avatar; roots stay roots.
  AffineWeight img = act(rs, atom, weight_avatar(rs, x));
  std::vector<Rat> rc = rs.root_coords(img.finite);
  AffineRoot r;
  r.finite.resize(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) r.finite[i] = static_cast<long>(as_integer(rc[i]));
  r.n = static_cast<long>(as_integer(img.degree));
  return r;
}

AffineRoot act(const RootSystem& rs, const WeylWord& w, const AffineRoot& x) {
  AffineRoot r = x;
  for (auto it = w.atoms.rbegin(); it != w.atoms.rend(); ++it) r = act(rs, *it, r);
  return r;
}

std::string affine_root_str(const RootSystem& rs, const AffineRoot& r) {
  std::ostringstream os;
  if (!r.has_finite_part()) {
    if (r.n == 0) return "0";
    if (r.n == 1) return "d";
    if (r.n == -1) return "-d";
    return std::to_string(r.n) + "d";
  }
  // Prefer theta-relative and simple-root spellings; fall back to coordinates.
  const RootCoords& th = rs.theta();
  auto minus_theta = [&] {
    for (int i = 0; i < rs.rank(); ++i)
      if (r.finite[i] != -th[i]) return false;
    return true;
  };
  auto theta_minus_simples = [&]() -> std::string {
    std::string s = "theta";
    for (int i = 0; i < rs.rank(); ++i) {
      long diff = th[i] - r.finite[i];
      if (diff < 0 || diff > 1) return "";
      if (diff == 1) s += "-a" + std::to_string(i + 1);
    }
    return s == "theta" ? s : s;
  };
  int nonzero = 0, idx = -1;
  for (int i = 0; i < rs.rank(); ++i)
    if (r.finite[i] != 0) { ++nonzero; idx = i; }
  if (nonzero == 1 && (r.finite[idx] == 1 || r.finite[idx] == -1)) {
    os << (r.finite[idx] == 1 ? "" : "-") << "a" << (idx + 1);
  } else if (minus_theta()) {
    os << "-theta";
  } else if (std::string s = theta_minus_simples(); !s.empty()) {
    os << s;
  } else {
    os << "[";
    for (int i = 0; i < rs.rank(); ++i) os << (i ? "," : "") << r.finite[i];
    os << "]";
  }
  if (r.n > 0) os << "+" << r.n << "d";
  if (r.n < 0) os << r.n << "d";
  return os.str();
}

std::string word_str(const RootSystem& rs, const WeylWord& w) {
  std::ostringstream os;
  bool first = true;
  for (const auto& atom : w.atoms) {
    if (!first) os << " ";
    first = false;
    if (const auto* s = std::get_if<SimpleReflect>(&atom)) {
      os << "s_" << s->i;
    } else if (const auto* s = std::get_if<RootReflect>(&atom)) {
      os << "s_{" << affine_root_str(rs, s->beta) << "}";
    } else {
      const auto& t = std::get<Translate>(atom);
      if (t.mu == -rs.rho_check()) {
        os << "t_{-rho}";
      } else {
        os << "t_{[";
        for (int i = 0; i < rs.rank(); ++i) os << (i ? "," : "") << rat_str(t.mu.fw[i]);
        os << "]}";
      }
    }
  }
  return os.str();
}

} // namespace walab
