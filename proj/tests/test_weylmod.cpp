#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylchain/weylmod.hpp"

using namespace weylchain;

TEST_CASE("lattice generation hits the binomial dimension") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= n; ++k) {
      IntLattice L = generate_lattice(Family::B, n, k);
      CHECK(L.rank() == dim_weyl(n, k));
      CHECK(L.ambient_dim() == binom(2 * n + 1, k));
    }
}

TEST_CASE("weyl module mod 2: kernel and grassmann dimensions") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= n; ++k) {
      WeylModule wm = weyl_module(Family::B, n, k, 2);
      CHECK(wm.dim() == dim_weyl(n, k));
      CHECK(wm.kernel.dim() == dim_kernel(n, k));
      GeneratedModule g = grassmann_module(Family::B, n, k, 2);
      CHECK(g.dim() == dim_weyl(n, k) - dim_kernel(n, k));
    }
  // odd characteristic: no kernel, phi is injective
  GeneratedModule g3 = grassmann_module(Family::B, 3, 3, 3);
  CHECK(g3.dim() == dim_weyl(3, 3));
}

TEST_CASE("highest weight vector and its weight") {
  WeylModule wm = weyl_module(Family::B, 2, 2, 2);
  CHECK(is_highest_weight(wm.action, wm.hw));
  // Y[u2] moves it; X[u1-u2] kills it
  CHECK(wm.act("X[u1-u2]", wm.hw) == std::vector<long>(wm.dim(), 0));
  CHECK(wm.act("Y[u2]", wm.hw) != std::vector<long>(wm.dim(), 0));
}

TEST_CASE("nucleus: spun vs geometric oracle") {
  WeylModule wm = weyl_module(Family::B, 2, 2, 2);
  NucleusResult nr = nucleus(wm, /*with_oracle=*/true);
  CHECK(nr.report.all_pass());
  CHECK(nr.spun.dim() == dim_nucleus(2, 2));
  REQUIRE(nr.oracle.has_value());
  CHECK(nr.image == *nr.oracle);
  CHECK(nr.image.dim() == dim_nucleus(2, 2) - dim_kernel(2, 2));
}

TEST_CASE("chain report at (3, 2) and (3, 3)") {
  for (int k = 2; k <= 3; ++k) {
    WeylModule wm = weyl_module(Family::B, 3, k, 2);
    ChainResult cr = chain(wm);
    CHECK(cr.report.all_pass());
    REQUIRE(cr.modules.size() == std::size_t(k) + 1);
    for (int i = 0; i <= k; ++i) CHECK(cr.modules[std::size_t(i)].dim() == binom(7, i));
  }
}

TEST_CASE("parallel spin certifies equivariant isomorphisms") {
  // a module is trivially isomorphic to itself via aligned identity labels
  WeylModule wm = weyl_module(Family::B, 2, 2, 2);
  GraphResult g = parallel_spin(wm.action, wm.hw, wm.action, wm.hw);
  CHECK(g.is_iso);
  CHECK(g.dim_graph == wm.dim());
  FpSubspace k2 = transport(g, wm.kernel);
  CHECK(k2 == wm.kernel);
}

TEST_CASE("verification suites pass at small rank") {
  CHECK(verify_theorem2(2, 2).all_pass());
  CHECK(verify_theorem2(3, 2).all_pass());
  CHECK(verify_theorem4(3, 2).all_pass());
  CHECK(verify_theorem4(3, 3).all_pass());
  CHECK(verify_chain(3, 3).all_pass());
  CHECK(verify_perfect(3, 3).all_pass());
  CHECK(kernel_as_module(3, 2).all_pass());
  CHECK(kernel_as_module(3, 3).all_pass());
  CHECK(lemma_suite(3, 3).all_pass());
  CHECK(sigma_suite(3, 3).all_pass());
  CHECK(splitting_decomposition(3, 3).all_pass());
  CHECK(verify_dims(3).all_pass());
}

TEST_CASE("scale guard rejects oversized requests") {
  ScaleGuard tiny;
  tiny.max_n = 3;
  CHECK_THROWS_AS(weyl_module(Family::B, 4, 2, 2, tiny), ScaleError);
  ScaleGuard small;
  small.max_wedge_dim = 10;
  CHECK_THROWS_AS(generate_lattice(Family::B, 3, 3, small), ScaleError);
}

TEST_CASE("lattice cache round-trip") {
  const std::string dir = "./cache-test";
  IntLattice a = generate_lattice(Family::B, 2, 2, {}, dir);
  IntLattice b = generate_lattice(Family::B, 2, 2, {}, dir);  // from cache
  CHECK(a == b);
}
