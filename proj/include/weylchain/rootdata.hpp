#pragma once

// Root systems of types B_n and C_n: positive roots, simple-root
// expansions, fundamental-type weights and pairings.

#include <string>
#include <utility>
#include <vector>

namespace weylchain {

enum class Family { B, C };

inline const char* family_name(Family f) { return f == Family::B ? "B" : "C"; }

// A root is stored structurally.  Indices are 1-based as in the tables:
//   Diff  : u_i - u_j          (1 <= i < j <= n, both families)
//   Short : u_i                (B only)
//   Sum   : u_i + u_j          (1 <= i < j <= n, both families)
//   Long2 : 2 u_i              (C only)
struct Root {
  enum class Kind { Diff, Short, Sum, Long2 };
  Family family;
  int n;
  Kind kind;
  int i = 0, j = 0;
  bool negative = false;

  Root negated() const {
    Root r = *this;
    r.negative = !r.negative;
    return r;
  }
  bool operator==(const Root&) const = default;
};

// True when the root is long within its own family.
bool is_long(const Root& r);

std::string root_label(const Root& r);

// The fixed ordering: diffs by (i,j) lex, then shorts/longs by i, then
// sums by (i,j) lex.  Exactly n^2 roots for both families.
std::vector<Root> positive_roots(Family family, int n);

// Coefficients k_{alpha,i} of the simple-root expansion; entries are
// nonnegative for positive roots and negated for negative roots.
std::vector<int> alpha_coords(const Root& r);

// Weights are stored in u-coordinates (integral for every weight we use).
struct Weight {
  Family family;
  int n;
  std::vector<int> u;

  bool operator==(const Weight&) const = default;
};

// lambda_circ(n, k): lambda_k for k < n, 2*lambda_n for k = n, zero for
// k = 0 (type B).
Weight lambda_circ(int n, int k);

// k-th fundamental dominant weight of C_n (zero for k = 0), derived by
// solving the pairing conditions against the C_n Cartan matrix.
Weight lambda_sp(int n, int k);

// <w, alpha_i^vee> for the i-th simple root (1-based).
int pairing(const Weight& w, int i);

// Coefficients m_i with w = sum m_i alpha_i, doubled so the C_n
// half-integral case stays exact.  For B these are always even.
std::vector<int> twice_alpha_coords(const Weight& w);

// Integral simple-root coordinates; throws if half-integral (C_n, odd k).
std::vector<int> alpha_coords(const Weight& w);

// i-degrees (d_1,...,d_n) of a monomial given as (root, exponent) factors.
std::vector<int> monomial_degree(const std::vector<std::pair<Root, int>>& factors);

// w - sum of alpha_i over the given simple-root indices, etc.
Weight subtract_roots(const Weight& w, const std::vector<int>& simple_indices);

}  // namespace weylchain
