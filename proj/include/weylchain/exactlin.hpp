#pragma once

// Exact linear algebra over Z and over prime fields F_p.
//
// FpMatrix/FpSubspace hold dense residue matrices (bit-packed words when
// p = 2).  IntMatrix/IntLattice hold arbitrary-precision integer matrices
// and Hermite-normal-form row bases.  Everything is deterministic: pivot
// selection is smallest column, first row.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace weylchain {

using Int = boost::multiprecision::cpp_int;

bool is_prime(long p);

// Dense matrix over F_p.  Rows are bit-packed uint64 words when p == 2,
// otherwise int64 residues in [0, p).
class FpMatrix {
 public:
  FpMatrix() : p_(2), rows_(0), cols_(0), words_(0) {}
  FpMatrix(long p, std::size_t rows, std::size_t cols);

  long p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  long get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, long v);

  // row[dst] += factor * row[src]
  void add_scaled_row(std::size_t dst, std::size_t src, long factor);
  void scale_row(std::size_t r, long factor);
  void swap_rows(std::size_t a, std::size_t b);
  bool row_is_zero(std::size_t r) const;

  std::vector<long> row(std::size_t r) const;
  void set_row(std::size_t r, const std::vector<long>& v);
  void append_row(const std::vector<long>& v);

  bool operator==(const FpMatrix& o) const;

 private:
  long p_;
  std::size_t rows_, cols_, words_;
  std::vector<std::uint64_t> bits_;  // p == 2
  std::vector<std::int64_t> vals_;   // p != 2
};

// Row space in reduced row-echelon form.  Canonical: two row-equivalent
// matrices yield identical bases, so subspace equality is basis equality.
class FpSubspace {
 public:
  FpSubspace() : p_(2), ambient_(0) {}
  FpSubspace(long p, std::size_t ambient_dim);

  static FpSubspace rref(const FpMatrix& m);

  long p() const { return p_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<std::vector<long>>& basis_rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  FpMatrix basis() const;

  // Eliminates v against the basis; returns the residual.
  std::vector<long> reduce(std::vector<long> v) const;
  bool contains_vector(const std::vector<long>& v) const;
  bool contains(const FpSubspace& other) const;

  // Inserts v if independent; keeps RREF.  Returns true if dim grew.
  bool insert(std::vector<long> v);

  FpSubspace sum(const FpSubspace& o) const;
  FpSubspace intersection(const FpSubspace& o) const;

  bool operator==(const FpSubspace& o) const;
  bool operator!=(const FpSubspace& o) const { return !(*this == o); }
  bool operator<(const FpSubspace& o) const;  // for ordered node sets

 private:
  void check_compatible(const FpSubspace& o) const;
  long p_;
  std::size_t ambient_;
  std::vector<std::vector<long>> rows_;  // RREF rows
  std::vector<std::size_t> pivots_;      // strictly increasing
};

struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  Int& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

// Sublattice of Z^N held as a triangular row basis with distinct leading
// columns; canonicalize() brings it to full row Hermite normal form
// (positive pivots, entries above pivots reduced into [0, pivot)).
class IntLattice {
 public:
  IntLattice() : ambient_(0) {}
  explicit IntLattice(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static IntLattice hnf(const IntMatrix& m);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<Int>>& basis_rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  IntMatrix basis() const;

  // Adds v to the lattice.  Returns true if the lattice grew.
  bool insert(std::vector<Int> v);
  void canonicalize();

  bool member(const std::vector<Int>& v) const;
  // Integral coordinates of v in the basis rows; throws if not a member.
  std::vector<Int> coords(const std::vector<Int>& v) const;

  // Line-oriented text format:
  //   weylchain-lattice v1 ambient=<N> rank=<r>
  // followed by r rows of N space-separated integers.
  void write(std::ostream& os) const;
  static IntLattice read(std::istream& is);

  bool operator==(const IntLattice& o) const;

 private:
  int pivot_row_for(std::size_t col) const;
  std::size_t ambient_;
  std::vector<std::vector<Int>> rows_;   // sorted by leading column
  std::vector<std::size_t> pivots_;      // leading column per row
};

// Smith normal form diagonal of m (nonzero entries, d1 | d2 | ...).
std::vector<Int> snf_diagonal(IntMatrix m);

// Elementary divisors of the inclusion sub <= ambient.  Requires every
// row of sub to be integrally expressible in ambient's basis.
std::vector<Int> snf_divisors(const IntLattice& sub, const IntLattice& ambient);

class ContainmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ScaleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace weylchain
