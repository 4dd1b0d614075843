#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylchain/rootdata.hpp"

using namespace weylchain;

TEST_CASE("positive root counts and labels") {
  for (int n = 2; n <= 5; ++n) {
    auto rb = positive_roots(Family::B, n);
    auto rc = positive_roots(Family::C, n);
    CHECK(rb.size() == std::size_t(n) * std::size_t(n));
    CHECK(rc.size() == std::size_t(n) * std::size_t(n));
  }
  auto r = positive_roots(Family::B, 3);
  CHECK(root_label(r[0]) == "u1-u2");
  CHECK(root_label(r.back()) == "u2+u3");
  auto rc = positive_roots(Family::C, 2);
  bool has_long = false;
  for (const auto& x : rc) has_long = has_long || root_label(x) == "2u1";
  CHECK(has_long);
}

TEST_CASE("simple-root expansions") {
  // u1 - u3 = a1 + a2 in B_3
  Root r{Family::B, 3, Root::Kind::Diff, 1, 3};
  CHECK(alpha_coords(r) == std::vector<int>{1, 1, 0});
  // u1 + u2 = a1 + 2 a2 + 2 a3 in B_3
  Root s{Family::B, 3, Root::Kind::Sum, 1, 2};
  CHECK(alpha_coords(s) == std::vector<int>{1, 2, 2});
  // 2 u1 = 2 a1 + 2 a2 + a3 in C_3
  Root t{Family::C, 3, Root::Kind::Long2, 1, 0};
  CHECK(alpha_coords(t) == std::vector<int>{2, 2, 1});
  // negated roots flip sign
  CHECK(alpha_coords(t.negated()) == std::vector<int>{-2, -2, -1});
}

TEST_CASE("lambda_circ in u-coordinates") {
  CHECK(lambda_circ(3, 2).u == std::vector<int>{1, 1, 0});
  CHECK(lambda_circ(3, 3).u == std::vector<int>{1, 1, 1});  // 2*lambda_3
  CHECK(lambda_circ(4, 0).u == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("fundamental pairings") {
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k <= n; ++k) {
      Weight w = lambda_sp(n, k);
      for (int i = 1; i <= n; ++i) CHECK(pairing(w, i) == (i == k ? 1 : 0));
    }
  // lambda_circ(n, k) pairs like lambda_k for k < n and 2*lambda_n at k = n
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k <= n; ++k) {
      Weight w = lambda_circ(n, k);
      for (int i = 1; i <= n; ++i)
        CHECK(pairing(w, i) == ((i == k) ? (k == n ? 2 : 1) : 0));
    }
}

TEST_CASE("alpha coordinates of weights") {
  Weight w = lambda_circ(3, 2);
  auto tw = twice_alpha_coords(w);
  for (int v : tw) CHECK(v % 2 == 0);
  auto a = alpha_coords(w);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(2 * a[i] == tw[i]);

  // C_3, k = 3 is half-integral: doubled coords are odd somewhere
  Weight hs = lambda_sp(3, 3);
  bool odd = false;
  for (int v : twice_alpha_coords(hs)) odd = odd || (v % 2 != 0);
  CHECK(odd);
  CHECK_THROWS(alpha_coords(hs));
}

TEST_CASE("monomial degrees and root subtraction") {
  Root r{Family::B, 3, Root::Kind::Sum, 1, 2};   // a1 + 2a2 + 2a3
  Root s{Family::B, 3, Root::Kind::Short, 1, 0}; // a1 + a2 + a3
  auto deg = monomial_degree({{r, 2}, {s, 1}});
  CHECK(deg == std::vector<int>{3, 5, 5});

  Weight w = lambda_circ(3, 2);
  Weight w2 = subtract_roots(w, {2, 3});
  CHECK(w2.u == std::vector<int>{1, 0, 0});  // a2 = u2-u3, a3 = u3
}
