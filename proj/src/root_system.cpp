#include "walab/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace walab {

namespace {

struct CartanData {
  std::vector<std::vector<long>> a; // a[i][j] = <alpha_j, alpha_i^vee>
  std::vector<Rat> d;               // symmetrizers, long roots have d = 1
  unsigned long long weyl_order;
  long dual_dual_coxeter; // h^vee of the Langlands dual type
};

std::vector<std::vector<long>> simply_laced(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (auto [u, v] : edges) {
    a[u - 1][v - 1] = -1;
    a[v - 1][u - 1] = -1;
  }
  return a;
}

CartanData cartan_data(Algebra g) {
  switch (g) {
    case Algebra::a1:
      return {{{2}}, {1}, 2, 2};
    case Algebra::a2:
      return {simply_laced(2, {{1, 2}}), {1, 1}, 6, 3};
    case Algebra::g2:
      // Bourbaki: alpha_1 short, alpha_2 long; <alpha_2, alpha_1^vee> = -3.
      return {{{2, -3}, {-1, 2}}, {Rat(1, 3), 1}, 12, 4};
    case Algebra::d4:
      return {simply_laced(4, {{1, 2}, {2, 3}, {2, 4}}), {1, 1, 1, 1}, 192, 6};
    case Algebra::f4:
      // Bourbaki: alpha_1, alpha_2 long; alpha_3, alpha_4 short; double bond 2=>3.
      return {{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}},
              {1, 1, Rat(1, 2), Rat(1, 2)},
              1152,
              9};
    case Algebra::e6:
      return {simply_laced(6, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}}),
              std::vector<Rat>(6, 1), 51840, 12};
    case Algebra::e7:
      return {simply_laced(7, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}}),
              std::vector<Rat>(7, 1), 2903040, 18};
    case Algebra::e8:
      return {simply_laced(8, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}}),
              std::vector<Rat>(8, 1), 696729600ULL, 30};
  }
  throw std::logic_error("bad algebra enum");
}

std::vector<std::vector<Rat>> invert(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular Cartan matrix");
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

void check_dim(const Weight& a, const Weight& b) {
  if (a.fw.size() != b.fw.size()) throw std::invalid_argument("weight rank mismatch");
}

} // namespace

Weight operator+(const Weight& a, const Weight& b) {
  check_dim(a, b);
  Weight r = a;
  for (std::size_t i = 0; i < r.fw.size(); ++i) r.fw[i] += b.fw[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  check_dim(a, b);
  Weight r = a;
  for (std::size_t i = 0; i < r.fw.size(); ++i) r.fw[i] -= b.fw[i];
  return r;
}

Weight operator-(const Weight& a) {
  Weight r = a;
  for (auto& c : r.fw) c = -c;
  return r;
}

Weight operator*(const Rat& c, const Weight& a) {
  Weight r = a;
  for (auto& x : r.fw) x *= c;
  return r;
}

RootSystem RootSystem::build(AlgebraId id) {
  RootSystem rs;
  rs.id_ = id;
  rs.rank_ = id.rank();
  CartanData cd = cartan_data(id.value);
  rs.cartan_ = std::move(cd.a);
  rs.d_ = std::move(cd.d);
  rs.weyl_order_ = cd.weyl_order;
  rs.lhv_ = cd.dual_dual_coxeter;
  rs.enumerate_roots();
  rs.finalize();
  return rs;
}

const RootSystem& RootSystem::get(Algebra a) {
  static const std::map<Algebra, RootSystem> cache = [] {
    std::map<Algebra, RootSystem> m;
    for (Algebra g : kAlgebras) m.emplace(g, RootSystem::build(AlgebraId{g}));
    return m;
  }();
  return cache.at(a);
}

void RootSystem::enumerate_roots() {
  const int n = rank_;
  std::set<RootCoords> seen;
  std::vector<RootCoords> frontier;
  for (int i = 0; i < n; ++i) {
    RootCoords e(n, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  // Closure by root strings: r + alpha_i is a root iff p - <r, alpha_i^vee> > 0
  // where p is the length of the string below r.
  while (!frontier.empty()) {
    std::vector<RootCoords> next;
    for (const auto& r : frontier) {
      for (int i = 0; i < n; ++i) {
        long pairing = 0;
        for (int j = 0; j < n; ++j) pairing += cartan_[i][j] * r[j];
        long p = 0;
        RootCoords down = r;
        while (true) {
          down[i] -= 1;
          bool neg = std::all_of(down.begin(), down.end(), [](long c) { return c <= 0; });
          RootCoords probe = down;
          if (neg) for (auto& c : probe) c = -c;
          bool zero = std::all_of(down.begin(), down.end(), [](long c) { return c == 0; });
          if (!zero && seen.count(probe)) { ++p; continue; }
          break;
        }
        if (p - pairing > 0) {
          RootCoords up = r;
          up[i] += 1;
          if (seen.insert(up).second) next.push_back(up);
        }
      }
    }
    frontier = std::move(next);
  }
  positive_roots_.assign(seen.begin(), seen.end());
  std::sort(positive_roots_.begin(), positive_roots_.end(),
            [](const RootCoords& a, const RootCoords& b) {
              long ha = height(a), hb = height(b);
              if (ha != hb) return ha < hb;
              return a < b;
            });
}

void RootSystem::finalize() {
  const int n = rank_;
  theta_ = positive_roots_.back();
  h_ = height(theta_) + 1;
  if (static_cast<long>(positive_roots_.size()) * 2 != n * h_)
    throw std::logic_error("positive-root count disagrees with rank*h/2");

  two_rho_.assign(n, 0);
  for (const auto& r : positive_roots_)
    for (int i = 0; i < n; ++i) two_rho_[i] += r[i];

  std::vector<std::vector<Rat>> c(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i][j] = cartan_[i][j];
  inv_cartan_ = invert(std::move(c));

  rho_.fw.assign(n, 1);
  rho_check_.fw.resize(n);
  for (int i = 0; i < n; ++i) rho_check_.fw[i] = 1 / d_[i];

  if (root_norm2(theta_) != 2) throw std::logic_error("normalization (theta|theta) != 2");
  hv_ = static_cast<long>(as_integer(pair_coroot(rho_, theta_))) + 1;

  lacing_ = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) lacing_ = std::max(lacing_, -cartan_[i][j]);
}

long RootSystem::height(const RootCoords& r) {
  long s = 0;
  for (long c : r) s += c;
  return s;
}

bool RootSystem::is_root(const RootCoords& r) const {
  return is_positive_root(r) || [&] {
    RootCoords neg = r;
    for (auto& c : neg) c = -c;
    return is_positive_root(neg);
  }();
}

bool RootSystem::is_positive_root(const RootCoords& r) const {
  return std::binary_search(positive_roots_.begin(), positive_roots_.end(), r,
                            [](const RootCoords& a, const RootCoords& b) {
                              long ha = height(a), hb = height(b);
                              if (ha != hb) return ha < hb;
                              return a < b;
                            });
}

Weight RootSystem::zero_weight() const { return Weight{std::vector<Rat>(rank_, 0)}; }

Weight RootSystem::fundamental_weight(int i) const {
  Weight w = zero_weight();
  w.fw[i - 1] = 1;
  return w;
}

Weight RootSystem::weight_of_root(const RootCoords& r) const {
  Weight w = zero_weight();
  for (int i = 0; i < rank_; ++i) {
    long s = 0;
    for (int j = 0; j < rank_; ++j) s += cartan_[i][j] * r[j];
    w.fw[i] = s;
  }
  return w;
}

std::vector<Rat> RootSystem::root_coords(const Weight& w) const {
  std::vector<Rat> rc(rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) rc[i] += inv_cartan_[i][j] * w.fw[j];
  return rc;
}

Weight RootSystem::from_root_coords(const std::vector<Rat>& rc) const {
  Weight w = zero_weight();
  for (int i = 0; i < rank_; ++i) {
    Rat s = 0;
    for (int j = 0; j < rank_; ++j) s += cartan_[i][j] * rc[j];
    w.fw[i] = s;
  }
  return w;
}

Rat RootSystem::inner(const Weight& a, const Weight& b) const {
  // (a|b) = sum_j rc(b)_j d_j <a, alpha_j^vee>
  std::vector<Rat> rb = root_coords(b);
  Rat s = 0;
  for (int j = 0; j < rank_; ++j) s += rb[j] * d_[j] * a.fw[j];
  return s;
}

Rat RootSystem::root_norm2(const RootCoords& r) const {
  Rat s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (r[i] == 0) continue;
    long pairing = 0;
    for (int j = 0; j < rank_; ++j) pairing += cartan_[i][j] * r[j];
    s += Rat(r[i]) * d_[i] * pairing; // (alpha_i | r) = d_i <r, alpha_i^vee>
  }
  return s;
}

Rat RootSystem::pair_coroot(const Weight& w, const RootCoords& alpha) const {
  Rat ip = 0;
  for (int j = 0; j < rank_; ++j)
    if (alpha[j] != 0) ip += Rat(alpha[j]) * d_[j] * w.fw[j]; // (w|alpha)
  return 2 * ip / root_norm2(alpha);
}

Weight RootSystem::reflect(const RootCoords& alpha, const Weight& w) const {
  if (!is_root(alpha)) throw std::invalid_argument("reflect: not a root");
  return w - pair_coroot(w, alpha) * weight_of_root(alpha);
}

RootCoords RootSystem::reflect_root(const RootCoords& alpha, const RootCoords& x) const {
  if (!is_root(alpha)) throw std::invalid_argument("reflect_root: not a root");
  Rat pairing = pair_coroot(weight_of_root(x), alpha);
  long c = static_cast<long>(as_integer(pairing));
  RootCoords r = x;
  for (int i = 0; i < rank_; ++i) r[i] -= c * alpha[i];
  return r;
}

Weight RootSystem::simple_reflect(int i, const Weight& w) const {
  Rat c = w.fw[i - 1];
  Weight r = w;
  for (int j = 0; j < rank_; ++j) r.fw[j] -= c * cartan_[j][i - 1];
  return r;
}

ExtremeResult RootSystem::shifted_extreme(const Weight& lambda, const Weight& shift,
                                          ChamberMode mode) const {
  Weight v = lambda + shift;
  std::vector<int> applied;
  const bool dom = (mode == ChamberMode::dominant);
  while (true) {
    int found = 0;
    for (int i = 1; i <= rank_; ++i) {
      const Rat& c = v.fw[i - 1];
      if ((dom && c < 0) || (!dom && c > 0)) { found = i; break; }
    }
    if (found == 0) break;
    v = simple_reflect(found, v);
    applied.push_back(found);
  }
  std::reverse(applied.begin(), applied.end()); // composition order, rightmost acts first
  return ExtremeResult{v - shift, std::move(applied)};
}

std::vector<Weight> RootSystem::orbit(const Weight& start, std::size_t cap) const {
  std::set<std::vector<Rat>> seen;
  std::vector<Weight> frontier = {start};
  seen.insert(start.fw);
  std::vector<Weight> all = {start};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& w : frontier) {
      for (int i = 1; i <= rank_; ++i) {
        Weight r = simple_reflect(i, w);
        if (seen.insert(r.fw).second) {
          if (cap != 0 && seen.size() > cap) throw std::runtime_error("orbit cap exceeded");
          next.push_back(r);
          all.push_back(std::move(r));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

bool RootSystem::is_dominant_integral(const Weight& w) const {
  for (const Rat& c : w.fw)
    if (!is_integer(c) || c < 0) return false;
  return true;
}

std::vector<Weight> RootSystem::dominant_root_lattice_weights(long height_bound) const {
  if (height_bound < 0) throw std::invalid_argument("height bound must be >= 0");
  std::vector<Weight> out;
  RootCoords c(rank_, 0);
  // Iterate all nonnegative integer root-coordinate vectors with sum <= bound.
  auto rec = [&](auto&& self, int pos, long remaining) -> void {
    if (pos == rank_) {
      Weight w = zero_weight();
      for (int i = 0; i < rank_; ++i) {
        long s = 0;
        for (int j = 0; j < rank_; ++j) s += cartan_[i][j] * c[j];
        if (s < 0) return;
        w.fw[i] = s;
      }
      out.push_back(std::move(w));
      return;
    }
    for (long v = 0; v <= remaining; ++v) {
      c[pos] = v;
      self(self, pos + 1, remaining - v);
    }
    c[pos] = 0;
  };
  rec(rec, 0, height_bound);
  std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
    std::vector<Rat> ra = root_coords(a), rb = root_coords(b);
    Rat ha = 0, hb = 0;
    for (const auto& x : ra) ha += x;
    for (const auto& x : rb) hb += x;
    if (ha != hb) return ha < hb;
    return ra < rb;
  });
  return out;
}

} // namespace walab
