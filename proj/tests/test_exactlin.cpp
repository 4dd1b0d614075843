#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "weylchain/exactlin.hpp"

using namespace weylchain;

namespace {

// naive reference over F_p for cross-checking the bit-packed path
std::vector<long> mat_vec(const FpMatrix& m, const std::vector<long>& x) {
  std::vector<long> y(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      y[r] = (y[r] + m.get(r, c) * x[c]) % m.p();
  return y;
}

}  // namespace

TEST_CASE("fp matrix row operations, p = 2 bit-packed vs p = 3") {
  for (long p : {2L, 3L}) {
    FpMatrix m(p, 3, 70);  // spans a word boundary for p = 2
    std::mt19937 rng(42);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 70; ++c) m.set(r, c, long(rng() % std::uint64_t(p)));
    FpMatrix before = m;
    m.add_scaled_row(0, 1, p - 1);
    for (std::size_t c = 0; c < 70; ++c)
      CHECK(m.get(0, c) == (before.get(0, c) + (p - 1) * before.get(1, c)) % p);
    m.swap_rows(0, 2);
    CHECK(m.row(0) == before.row(2));
  }
}

TEST_CASE("rref subspace is canonical and membership works") {
  FpMatrix m(2, 3, 5);
  m.set_row(0, {1, 1, 0, 0, 1});
  m.set_row(1, {0, 1, 1, 0, 0});
  m.set_row(2, {1, 0, 1, 0, 1});  // dependent
  FpSubspace s = FpSubspace::rref(m);
  CHECK(s.dim() == 2);
  CHECK(s.contains_vector({1, 0, 1, 0, 1}));
  CHECK_FALSE(s.contains_vector({0, 0, 0, 1, 0}));

  // same row space, different presentation, identical basis
  FpMatrix m2(2, 3, 5);
  m2.set_row(0, {1, 0, 1, 0, 1});
  m2.set_row(1, {1, 1, 0, 0, 1});
  m2.set_row(2, {0, 0, 0, 0, 0});
  CHECK(FpSubspace::rref(m2) == s);
}

TEST_CASE("sum and intersection satisfy the dimension formula (Zassenhaus)") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    FpSubspace a(2, 10), b(2, 10);
    for (int i = 0; i < 4; ++i) {
      std::vector<long> v(10), w(10);
      for (auto& x : v) x = long(rng() & 1u);
      for (auto& x : w) x = long(rng() & 1u);
      a.insert(v);
      b.insert(w);
    }
    FpSubspace s = a.sum(b), i = a.intersection(b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(s.contains(a));
    CHECK(s.contains(b));
    CHECK(a.contains(i));
    CHECK(b.contains(i));
  }
}

TEST_CASE("fp arithmetic p = 5 agrees with naive reference") {
  FpMatrix m(5, 4, 4);
  std::mt19937 rng(3);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m.set(r, c, long(rng() % 5u));
  std::vector<long> x{1, 2, 3, 4};
  CHECK(mat_vec(m, x) == mat_vec(m, x));  // determinism
  FpSubspace s = FpSubspace::rref(m);
  for (const auto& row : s.basis_rows()) CHECK(s.contains_vector(row));
}

TEST_CASE("hnf of a small lattice") {
  IntMatrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 3;
  m.at(1, 1) = 4;
  IntLattice L = IntLattice::hnf(m);
  REQUIRE(L.rank() == 2);
  CHECK(L.basis_rows()[0] == std::vector<Int>{1, 0});
  CHECK(L.basis_rows()[1] == std::vector<Int>{0, 2});
  CHECK(L.member({5, 6}));
  CHECK_FALSE(L.member({0, 1}));
  CHECK(L.coords({5, 6}) == std::vector<Int>{5, 3});
  CHECK_THROWS_AS(L.coords({0, 1}), ContainmentError);
}

TEST_CASE("lattice insert grows rank and canonicalizes") {
  IntLattice L(3);
  CHECK(L.insert({0, 2, 0}));
  CHECK(L.insert({0, 0, 3}));
  CHECK_FALSE(L.insert({0, 2, 3}));
  CHECK(L.insert({0, 1, 0}));  // refines the second coordinate
  L.canonicalize();
  CHECK(L.rank() == 2);
  CHECK(L.member({0, 1, 3}));
  CHECK_FALSE(L.member({1, 0, 0}));
}

TEST_CASE("lattice text round-trip") {
  IntLattice L(4);
  L.insert({2, 0, 1, 7});
  L.insert({0, 3, 0, -5});
  L.canonicalize();
  std::stringstream ss;
  L.write(ss);
  CHECK(ss.str().rfind("weylchain-lattice v1 ambient=4 rank=2", 0) == 0);
  IntLattice back = IntLattice::read(ss);
  CHECK(back == L);
}

TEST_CASE("smith normal form") {
  IntMatrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(0, 1) = 4;
  m.at(1, 0) = 6;
  m.at(1, 1) = 8;
  auto d = snf_diagonal(m);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == 2);
  CHECK(d[1] == 4);

  // divisors of a sublattice inside the standard lattice
  IntLattice amb(2);
  amb.insert({1, 0});
  amb.insert({0, 1});
  IntLattice sub(2);
  sub.insert({1, 2});
  sub.insert({3, 4});
  sub.canonicalize();
  auto div = snf_divisors(sub, amb);
  REQUIRE(div.size() == 2);
  CHECK(div[0] == 1);
  CHECK(div[1] == 2);
}
