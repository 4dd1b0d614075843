#pragma once

// Integer operator tables for the Chevalley bases of o(2n+1) acting on
// V = Z^{2n+1} and sp(2n) acting on Vbar = Z^{2n}, transcribed from the
// delta-formula tables, plus the divided squares and relation checks.

#include <cstdint>
#include <string>
#include <vector>

#include "weylchain/report.hpp"
#include "weylchain/rootdata.hpp"

namespace weylchain {

// Column-adjacency sparse integer matrix: col[l] lists (row, coeff).
struct SparseIntMat {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, long long>>> col;

  SparseIntMat() = default;
  SparseIntMat(std::size_t r, std::size_t c) : rows(r), cols(c), col(c) {}

  void add(std::size_t r, std::size_t c, long long v);
  void normalize();  // merge duplicates, drop zeros, sort by row
  bool is_zero() const;
  std::size_t nnz() const;

  // y += factor * (this * x), dense int64 vectors
  void apply_acc(const std::vector<long long>& x, std::vector<long long>& y,
                 long long factor = 1) const;
  std::vector<long long> apply(const std::vector<long long>& x) const;

  bool operator==(const SparseIntMat& o) const;
};

SparseIntMat compose(const SparseIntMat& a, const SparseIntMat& b);  // a*b
SparseIntMat add(const SparseIntMat& a, const SparseIntMat& b, long long fb = 1);
SparseIntMat bracket(const SparseIntMat& a, const SparseIntMat& b);  // ab - ba
// Divides every entry by d; throws std::logic_error on a remainder.
SparseIntMat divide_exact(const SparseIntMat& a, long long d);
bool congruent_mod(const SparseIntMat& a, const SparseIntMat& b, long long m);

struct Operator {
  std::string space;   // e.g. "V_B(3)"
  std::string label;   // e.g. "X[u1-u2]", "H2", "X^2[u1]/2"
  int divided_exponent = 1;
  SparseIntMat matrix;
};

// --- type B generators on V = Z^{2n+1} ------------------------------------
Operator ortho_X(int n, const Root& r);       // positive r
Operator ortho_Y(int n, const Root& r);
Operator ortho_H(int n, int i);               // simple, 1-based
Operator ortho_H_root(int n, const Root& r);  // printed integral expansion
Operator ortho_divided_square_X(int n, int i);  // X^2_{u_i}/2
Operator ortho_divided_square_Y(int n, int i);

// --- type C generators on Vbar = Z^{2n} ------------------------------------
Operator symp_U(int n, const Root& r);
Operator symp_V(int n, const Root& r);
Operator symp_C(int n, int i);

// Label-based access (the spec surface).  Labels as produced above.
Operator ortho_generator(int n, const std::string& label);
Operator symp_generator(int n, const std::string& label);

// Exact integer identity checks: [X_a, Y_a] = H_a for all positive roots,
// nilpotency exponents on V (2 long / 3 short), and the symplectic bracket
// identities including the commutator form of U_{u_i+u_j}.
Report relation_check(int n);

}  // namespace weylchain
