#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylchain/chevalley.hpp"

using namespace weylchain;

namespace {

std::vector<long long> unit(std::size_t d, std::size_t i) {
  std::vector<long long> e(d, 0);
  e[i] = 1;
  return e;
}

}  // namespace

TEST_CASE("sparse matrix algebra") {
  SparseIntMat a(3, 3), b(3, 3);
  a.add(0, 1, 2);
  a.add(2, 0, 1);
  b.add(1, 2, 3);
  SparseIntMat ab = compose(a, b);  // a*b: e2 -> 3 e1 -> 6 e0
  CHECK(ab.apply(unit(3, 2)) == std::vector<long long>{6, 0, 0});
  SparseIntMat c = bracket(a, b);
  SparseIntMat ba = compose(b, a);
  CHECK(c == add(ab, ba, -1));
  CHECK(divide_exact(add(a, a), 2) == a);
  CHECK_THROWS(divide_exact(a, 3));
  CHECK(congruent_mod(a, add(a, add(a, a)), 2));
}

TEST_CASE("orthogonal generator tables, n = 2") {
  const int n = 2;  // V = Z^5, basis e1 e2 f1 f2 e5
  Operator x12 = ortho_X(n, {Family::B, n, Root::Kind::Diff, 1, 2});
  CHECK(x12.matrix.apply(unit(5, 1)) == std::vector<long long>{1, 0, 0, 0, 0});
  CHECK(x12.matrix.apply(unit(5, 2)) == std::vector<long long>{0, 0, 0, -1, 0});

  Operator x1 = ortho_X(n, {Family::B, n, Root::Kind::Short, 1, 0});
  CHECK(x1.matrix.apply(unit(5, 2)) == std::vector<long long>{0, 0, 0, 0, 1});
  CHECK(x1.matrix.apply(unit(5, 4)) == std::vector<long long>{-2, 0, 0, 0, 0});

  // the divided square doubles back to X^2
  Operator d = ortho_divided_square_X(n, 1);
  CHECK(add(d.matrix, d.matrix) == compose(x1.matrix, x1.matrix));
  CHECK(d.divided_exponent == 2);

  // [X_a, Y_a] acts on the highest vector e1 by <u1, a^vee>
  Operator y12 = ortho_Y(n, {Family::B, n, Root::Kind::Diff, 1, 2});
  CHECK(bracket(x12.matrix, y12.matrix).apply(unit(5, 0)) ==
        std::vector<long long>{1, 0, 0, 0, 0});
}

TEST_CASE("symplectic generator tables, n = 2") {
  const int n = 2;  // Vbar = Z^4
  Operator u2 = symp_U(n, {Family::C, n, Root::Kind::Long2, 1, 0});
  CHECK(u2.matrix.apply(unit(4, 2)) == std::vector<long long>{1, 0, 0, 0});
  Operator us = symp_U(n, {Family::C, n, Root::Kind::Sum, 1, 2});
  // e_{n+j} -> +e_i (no sign, unlike the orthogonal table)
  CHECK(us.matrix.apply(unit(4, 3)) == std::vector<long long>{1, 0, 0, 0});
  Operator c2 = symp_C(n, 2);
  CHECK(c2.matrix.apply(unit(4, 1)) == std::vector<long long>{0, 1, 0, 0});
  CHECK(c2.matrix.apply(unit(4, 3)) == std::vector<long long>{0, 0, 0, -1});
}

TEST_CASE("label parser round-trips") {
  for (const auto& r : positive_roots(Family::B, 3)) {
    Operator op = ortho_X(3, r);
    Operator back = ortho_generator(3, op.label);
    CHECK(back.matrix == op.matrix);
    Operator yop = ortho_Y(3, r);
    CHECK(ortho_generator(3, yop.label).matrix == yop.matrix);
  }
  for (const auto& r : positive_roots(Family::C, 3)) {
    Operator op = symp_U(3, r);
    CHECK(symp_generator(3, op.label).matrix == op.matrix);
  }
  Operator d = ortho_divided_square_X(3, 2);
  CHECK(ortho_generator(3, d.label).matrix == d.matrix);
  CHECK_THROWS(ortho_generator(3, "X[w1]"));
  CHECK_THROWS(symp_generator(3, "U[u2]"));  // short roots are not C_n roots
}

TEST_CASE("full relation suite passes for n up to 6") {
  for (int n = 2; n <= 6; ++n) {
    Report r = relation_check(n);
    INFO("n = ", n);
    CHECK(r.all_pass());
    CHECK(r.checks.size() > 0);
  }
}
