#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylchain/sublattice.hpp"

using namespace weylchain;

TEST_CASE("primitive space contains the highest weight line and the kernel") {
  for (int n = 2; n <= 3; ++n) {
    WeylModule wm = weyl_module(Family::B, n, 2, 2);
    FpSubspace prim = primitive_space(wm.action);
    CHECK(prim.contains_vector(wm.hw));
    CHECK(prim.contains(wm.kernel));  // the kernel carries the trivial action
    CHECK(prim.dim() >= 2);
  }
}

TEST_CASE("socle via primitive space matches brute force on small modules") {
  // natural module (dim 5 and 7) and the degree-2 symplectic Grassmann
  // modules (dim 9 and 14)
  WeylModule v1 = weyl_module(Family::B, 2, 1, 2);
  CHECK(socle_oracle_check(v1.action, "VB2k1").all_pass());
  WeylModule v13 = weyl_module(Family::B, 3, 1, 2);
  CHECK(socle_oracle_check(v13.action, "VB3k1").all_pass());
  GeneratedModule w2 = grassmann_module(Family::C, 2, 2, 2);
  CHECK(socle_oracle_check(w2.action, "WC2k2").all_pass());
  GeneratedModule w3 = grassmann_module(Family::C, 3, 2, 2);
  CHECK(socle_oracle_check(w3.action, "WC3k2").all_pass());
}

TEST_CASE("degree-2 symplectic socle dichotomy") {
  GeneratedModule even = grassmann_module(Family::C, 2, 2, 2);
  auto me = minimal_submodules(even.action);
  REQUIRE(me.size() == 1);
  CHECK(me[0].dim() == 1);  // n even: radical line
  GeneratedModule odd = grassmann_module(Family::C, 3, 2, 2);
  auto mo = minimal_submodules(odd.action);
  REQUIRE(mo.size() == 1);
  CHECK(mo[0].dim() == odd.dim());  // n odd: irreducible
}

TEST_CASE("full lattice of V(lambda_2) for n = 3 is a chain") {
  WeylModule wm = weyl_module(Family::B, 3, 2, 2);
  SubmoduleLattice lat = full_lattice(wm.action);
  CHECK(lat.dims == std::vector<std::size_t>{0, 1, 7, 21});
  // covering edges form the path 0 -> 1 -> 7 -> 21
  REQUIRE(lat.edges.size() == 3);
  for (const auto& [a, b] : lat.edges) CHECK(b == a + 1);
  // nodes are closed under sum and intersection by construction
  for (const auto& x : lat.nodes)
    for (const auto& y : lat.nodes) {
      bool found_sum = false, found_int = false;
      for (const auto& z : lat.nodes) {
        found_sum = found_sum || z == x.sum(y);
        found_int = found_int || z == x.intersection(y);
      }
      CHECK(found_sum);
      CHECK(found_int);
    }
}

TEST_CASE("dot output shape") {
  WeylModule wm = weyl_module(Family::B, 2, 1, 2);
  std::string dot = to_dot(full_lattice(wm.action));
  CHECK(dot.find("digraph submodules") != std::string::npos);
  CHECK(dot.find("dim 5") != std::string::npos);
}

TEST_CASE("uniqueness suite") {
  CHECK(verify_uniqueness(2, 2).all_pass());
  CHECK(verify_uniqueness(3, 2).all_pass());
  CHECK(verify_uniqueness(3, 3).all_pass());
}

TEST_CASE("node cap raises ScaleError") {
  WeylModule wm = weyl_module(Family::B, 3, 2, 2);
  ScaleGuard tiny;
  tiny.max_nodes = 2;
  CHECK_THROWS_AS(full_lattice(wm.action, tiny), ScaleError);
}
