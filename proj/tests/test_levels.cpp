#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

#include "walab/levels.hpp"

using namespace walab;

TEST_CASE("k(m)") {
  CHECK(k_of_m(RootSystem::get(Algebra::e8), 0) == -5);
  CHECK(k_of_m(RootSystem::get(Algebra::d4), 1) == 0);
  CHECK(k_of_m(RootSystem::get(Algebra::e6), 4) == 2);
  CHECK(k_of_m(RootSystem::get(Algebra::a1), 0) == Rat(-1, 3));
  CHECK(k_of_m(RootSystem::get(Algebra::d4), -1) == -2);
  CHECK_THROWS_AS(k_of_m(RootSystem::get(Algebra::d4), -2), std::invalid_argument);
}

TEST_CASE("dual level") {
  const RootSystem& e6 = RootSystem::get(Algebra::e6);
  CHECK(ff_dual(e6, -2) + 12 == Rat(10, 9));
  const RootSystem& e8 = RootSystem::get(Algebra::e8);
  CHECK(ff_dual(e8, -1) + 30 == Rat(29, 28));
  CHECK_THROWS_AS(ff_dual(e6, -12), std::invalid_argument);
  CHECK_THROWS_AS(ff_dual(e6, -11), std::invalid_argument);

  auto rng = test::make_rng();
  for (Algebra g : kAlgebras) {
    const RootSystem& rs = RootSystem::get(g);
    for (int trial = 0; trial < 100; ++trial) {
      Rat k = test::random_level(rng, rs);
      if (k + rs.dual_coxeter() == 1) continue;
      Rat ell = ff_dual(rs, k);
      CHECK(1 / (k + rs.dual_coxeter()) + 1 / (ell + rs.dual_coxeter()) == 1);
      CHECK(ff_dual(rs, ell) == k);
    }
  }
}

TEST_CASE("principal central charge") {
  const RootSystem& d4 = RootSystem::get(Algebra::d4);
  CHECK(principal_cc(d4, Rat(5, 4) - 6) == Rat(-22, 5));

  const RootSystem& g2 = RootSystem::get(Algebra::g2);
  CHECK(principal_cc(g2, Rat(7, 15) - 4) == Rat(-22, 5));
  CHECK(principal_cc(g2, Rat(5, 7) - 4) == Rat(-22, 5));

  // Zero of the first factor at k+h^vee = h^vee/(h+1).
  for (Algebra g : kAlgebras) {
    const RootSystem& rs = RootSystem::get(g);
    Rat k = Rat(rs.dual_coxeter(), rs.coxeter() + 1) - rs.dual_coxeter();
    CHECK(principal_cc(rs, k) == 0);
  }

  // The formula is invariant under the level involution
  // r^vee (k+h^vee)(k'+h^vee) = 1 (the self-dual types in scope keep their
  // Cartan data). Note this is not the coset duality of ff_dual.
  auto rng = test::make_rng();
  for (Algebra g : kAlgebras) {
    const RootSystem& rs = RootSystem::get(g);
    for (int trial = 0; trial < 100; ++trial) {
      Rat k = test::random_level(rng, rs);
      Rat t = k + rs.dual_coxeter();
      Rat kdual = 1 / (rs.lacing() * t) - rs.dual_coxeter();
      CHECK(principal_cc(rs, k) == principal_cc(rs, kdual));
    }
  }
  // The two g2 levels of the -22/5 family are each other's involution images.
  CHECK(Rat(1) / (3 * Rat(7, 15)) == Rat(5, 7));
  CHECK(Rat(1) / (2 * Rat(13, 20)) == Rat(10, 13));
  CHECK_THROWS_AS(principal_cc(d4, -6), std::invalid_argument);
}

TEST_CASE("virasoro series") {
  CHECK(virasoro_c(2, 5) == Rat(-22, 5));
  CHECK(virasoro_c(3, 5) == Rat(-3, 5));
  CHECK_THROWS_AS(virasoro_c(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(virasoro_c(1, 5), std::invalid_argument);
  auto rng = test::make_rng();
  int done = 0;
  while (done < 20) {
    long p = 2 + static_cast<long>(rng() % 12), q = 2 + static_cast<long>(rng() % 12);
    if (std::gcd(p, q) != 1) continue;
    CHECK(virasoro_c(p, q) == virasoro_c(q, p));
    ++done;
  }
}

TEST_CASE("admissibility screening") {
  const RootSystem& e8 = RootSystem::get(Algebra::e8);
  CHECK_FALSE(is_admissible(e8, Rat(25, 24) - 30)); // 25 < 30
  const RootSystem& a1 = RootSystem::get(Algebra::a1);
  CHECK(is_admissible(a1, Rat(5, 2) - 2));
  const RootSystem& d4 = RootSystem::get(Algebra::d4);
  CHECK_FALSE(is_admissible(d4, -1)); // 5/1, p = 5 < h^vee = 6
  CHECK(is_admissible(d4, 0));        // 6/1
  CHECK_FALSE(is_admissible(d4, -7)); // negative k+h^vee

  // Lacing branch: g2 at 7/15 needs p >= h since 3 | 15.
  const RootSystem& g2 = RootSystem::get(Algebra::g2);
  CHECK(is_admissible(g2, Rat(7, 15) - 4));
  CHECK(is_admissible(g2, Rat(5, 7) - 4));
  const RootSystem& f4 = RootSystem::get(Algebra::f4);
  CHECK(is_admissible(f4, Rat(13, 20) - 9));
  CHECK(is_admissible(f4, Rat(10, 13) - 9));

  // Every dual level of the negative range is non-admissible.
  for (const LevelTableCell& c : level_table())
    CHECK_FALSE(is_admissible(RootSystem::get(c.g), c.ell_plus_hv -
                                                        RootSystem::get(c.g).dual_coxeter()));
}

TEST_CASE("dual-level table") {
  auto cells = level_table();
  REQUIRE(cells.size() == 11);
  auto cell = [&](Algebra g, int m) {
    for (const auto& c : cells)
      if (c.g == g && c.m == m) return c.ell_plus_hv;
    return Rat(0);
  };
  CHECK(cell(Algebra::d4, 0) == Rat(5, 4));
  CHECK(cell(Algebra::e6, 0) == Rat(10, 9));
  CHECK(cell(Algebra::e6, 1) == Rat(11, 10));
  CHECK(cell(Algebra::e7, 0) == Rat(15, 14));
  CHECK(cell(Algebra::e7, 1) == Rat(16, 15));
  CHECK(cell(Algebra::e7, 2) == Rat(17, 16));
  CHECK(cell(Algebra::e8, 0) == Rat(25, 24));
  CHECK(cell(Algebra::e8, 1) == Rat(26, 25));
  CHECK(cell(Algebra::e8, 2) == Rat(27, 26));
  CHECK(cell(Algebra::e8, 3) == Rat(28, 27));
  CHECK(cell(Algebra::e8, 4) == Rat(29, 28));

  // Cells agree with the duality computation, and p/(p-1) shape holds.
  for (const auto& c : cells) {
    const RootSystem& rs = RootSystem::get(c.g);
    CHECK(c.ell_plus_hv == ff_dual(rs, k_of_m(rs, c.m)) + rs.dual_coxeter());
    BigInt p = numerator(c.ell_plus_hv);
    CHECK(c.ell_plus_hv == Rat(p, p - 1));
  }
}

TEST_CASE("k(0) values of the negative range") {
  CHECK(k_of_m(RootSystem::get(Algebra::d4), 0) == -1);
  CHECK(k_of_m(RootSystem::get(Algebra::e6), 0) == -2);
  CHECK(k_of_m(RootSystem::get(Algebra::e7), 0) == -3);
  CHECK(k_of_m(RootSystem::get(Algebra::e8), 0) == -5);
}
