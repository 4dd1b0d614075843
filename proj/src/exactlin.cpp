#include "weylchain/exactlin.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace weylchain {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {
long norm_mod(long v, long p) {
  long r = v % p;
  return r < 0 ? r + p : r;
}

// a*x = 1 mod p
long inv_mod(long a, long p) {
  long t = 0, newt = 1, r = p, newr = norm_mod(a, p);
  while (newr != 0) {
    long q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  return norm_mod(t, p);
}
}  // namespace

FpMatrix::FpMatrix(long p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), words_((cols + 63) / 64) {
  if (!is_prime(p)) throw std::invalid_argument("FpMatrix: modulus must be prime");
  if (p_ == 2)
    bits_.assign(rows_ * words_, 0);
  else
    vals_.assign(rows_ * cols_, 0);
}

long FpMatrix::get(std::size_t r, std::size_t c) const {
  if (p_ == 2) return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
  return vals_[r * cols_ + c];
}

void FpMatrix::set(std::size_t r, std::size_t c, long v) {
  v = norm_mod(v, p_);
  if (p_ == 2) {
    std::uint64_t& w = bits_[r * words_ + c / 64];
    std::uint64_t mask = std::uint64_t(1) << (c % 64);
    w = v ? (w | mask) : (w & ~mask);
  } else {
    vals_[r * cols_ + c] = v;
  }
}

void FpMatrix::add_scaled_row(std::size_t dst, std::size_t src, long factor) {
  factor = norm_mod(factor, p_);
  if (factor == 0) return;
  if (p_ == 2) {
    std::uint64_t* d = &bits_[dst * words_];
    const std::uint64_t* s = &bits_[src * words_];
    for (std::size_t w = 0; w < words_; ++w) d[w] ^= s[w];
  } else {
    std::int64_t* d = &vals_[dst * cols_];
    const std::int64_t* s = &vals_[src * cols_];
    for (std::size_t c = 0; c < cols_; ++c) d[c] = (d[c] + factor * s[c]) % p_;
  }
}

void FpMatrix::scale_row(std::size_t r, long factor) {
  factor = norm_mod(factor, p_);
  if (p_ == 2) {
    if (factor == 0)
      std::fill_n(&bits_[r * words_], words_, 0);
    return;
  }
  for (std::size_t c = 0; c < cols_; ++c)
    vals_[r * cols_ + c] = (vals_[r * cols_ + c] * factor) % p_;
}

void FpMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  if (p_ == 2)
    std::swap_ranges(&bits_[a * words_], &bits_[a * words_] + words_, &bits_[b * words_]);
  else
    std::swap_ranges(&vals_[a * cols_], &vals_[a * cols_] + cols_, &vals_[b * cols_]);
}

bool FpMatrix::row_is_zero(std::size_t r) const {
  if (p_ == 2) {
    for (std::size_t w = 0; w < words_; ++w)
      if (bits_[r * words_ + w]) return false;
    return true;
  }
  for (std::size_t c = 0; c < cols_; ++c)
    if (vals_[r * cols_ + c]) return false;
  return true;
}

std::vector<long> FpMatrix::row(std::size_t r) const {
  std::vector<long> v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = get(r, c);
  return v;
}

void FpMatrix::set_row(std::size_t r, const std::vector<long>& v) {
  for (std::size_t c = 0; c < cols_; ++c) set(r, c, v[c]);
}

void FpMatrix::append_row(const std::vector<long>& v) {
  if (v.size() != cols_ && rows_ != 0)
    throw std::invalid_argument("FpMatrix::append_row: size mismatch");
  if (rows_ == 0 && cols_ == 0) {
    cols_ = v.size();
    words_ = (cols_ + 63) / 64;
  }
  ++rows_;
  if (p_ == 2)
    bits_.resize(rows_ * words_, 0);
  else
    vals_.resize(rows_ * cols_, 0);
  set_row(rows_ - 1, v);
}

bool FpMatrix::operator==(const FpMatrix& o) const {
  return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && bits_ == o.bits_ &&
         vals_ == o.vals_;
}

FpSubspace::FpSubspace(long p, std::size_t ambient_dim) : p_(p), ambient_(ambient_dim) {
  if (!is_prime(p)) throw std::invalid_argument("FpSubspace: modulus must be prime");
}

FpSubspace FpSubspace::rref(const FpMatrix& m) {
  FpSubspace s(m.p(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) s.insert(m.row(r));
  return s;
}

FpMatrix FpSubspace::basis() const {
  FpMatrix m(p_, rows_.size(), ambient_);
  for (std::size_t r = 0; r < rows_.size(); ++r) m.set_row(r, rows_[r]);
  return m;
}

std::vector<long> FpSubspace::reduce(std::vector<long> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("FpSubspace::reduce: dim mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    long c = norm_mod(v[pivots_[i]], p_);
    if (c == 0) continue;
    const std::vector<long>& row = rows_[i];
    long f = p_ - c;
    for (std::size_t j = pivots_[i]; j < ambient_; ++j)
      v[j] = norm_mod(v[j] + f * row[j], p_);
  }
  for (auto& x : v) x = norm_mod(x, p_);
  return v;
}

bool FpSubspace::contains_vector(const std::vector<long>& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](long x) { return x == 0; });
}

bool FpSubspace::contains(const FpSubspace& other) const {
  check_compatible(other);
  for (const auto& row : other.rows_)
    if (!contains_vector(row)) return false;
  return true;
}

bool FpSubspace::insert(std::vector<long> v) {
  v = reduce(std::move(v));
  std::size_t lead = ambient_;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (v[j] != 0) {
      lead = j;
      break;
    }
  if (lead == ambient_) return false;
  // normalize pivot to 1
  if (v[lead] != 1) {
    long f = inv_mod(v[lead], p_);
    for (auto& x : v) x = norm_mod(x * f, p_);
  }
  // back-eliminate above
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    long c = rows_[i][lead];
    if (c == 0) continue;
    long f = p_ - c;
    for (std::size_t j = lead; j < ambient_; ++j)
      rows_[i][j] = norm_mod(rows_[i][j] + f * v[j], p_);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

FpSubspace FpSubspace::sum(const FpSubspace& o) const {
  check_compatible(o);
  FpSubspace s = *this;
  for (const auto& row : o.rows_) s.insert(row);
  return s;
}

// Zassenhaus: rref of [A|A; B|0]; rows with zero left half carry the
// intersection in the right half.
FpSubspace FpSubspace::intersection(const FpSubspace& o) const {
  check_compatible(o);
  FpSubspace aug(p_, 2 * ambient_);
  for (const auto& row : rows_) {
    std::vector<long> v(2 * ambient_);
    std::copy(row.begin(), row.end(), v.begin());
    std::copy(row.begin(), row.end(), v.begin() + ambient_);
    aug.insert(std::move(v));
  }
  for (const auto& row : o.rows_) {
    std::vector<long> v(2 * ambient_, 0);
    std::copy(row.begin(), row.end(), v.begin());
    aug.insert(std::move(v));
  }
  FpSubspace out(p_, ambient_);
  for (std::size_t i = 0; i < aug.rows_.size(); ++i) {
    if (aug.pivots_[i] < ambient_) continue;
    std::vector<long> v(aug.rows_[i].begin() + ambient_, aug.rows_[i].end());
    out.insert(std::move(v));
  }
  return out;
}

bool FpSubspace::operator==(const FpSubspace& o) const {
  return p_ == o.p_ && ambient_ == o.ambient_ && pivots_ == o.pivots_ && rows_ == o.rows_;
}

bool FpSubspace::operator<(const FpSubspace& o) const {
  if (dim() != o.dim()) return dim() < o.dim();
  if (pivots_ != o.pivots_) return pivots_ < o.pivots_;
  return rows_ < o.rows_;
}

void FpSubspace::check_compatible(const FpSubspace& o) const {
  if (p_ != o.p_ || ambient_ != o.ambient_)
    throw std::invalid_argument("FpSubspace: ambient/modulus mismatch");
}

// ---------------------------------------------------------------------------
// IntLattice

IntLattice IntLattice::hnf(const IntMatrix& m) {
  IntLattice l(m.cols);
  for (std::size_t r = 0; r < m.rows; ++r) {
    std::vector<Int> v(m.cols);
    for (std::size_t c = 0; c < m.cols; ++c) v[c] = m.at(r, c);
    l.insert(std::move(v));
  }
  l.canonicalize();
  return l;
}

IntMatrix IntLattice::basis() const {
  IntMatrix m(rows_.size(), ambient_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < ambient_; ++c) m.at(r, c) = rows_[r][c];
  return m;
}

int IntLattice::pivot_row_for(std::size_t col) const {
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), col);
  if (it != pivots_.end() && *it == col) return int(it - pivots_.begin());
  return -1;
}

bool IntLattice::insert(std::vector<Int> v) {
  if (v.size() != ambient_) throw std::invalid_argument("IntLattice::insert: dim mismatch");
  bool changed = false;
  std::size_t lead = 0;
  while (true) {
    while (lead < ambient_ && v[lead] == 0) ++lead;
    if (lead == ambient_) return changed;
    int r = pivot_row_for(lead);
    if (r < 0) break;
    Int& pv = rows_[std::size_t(r)][lead];
    if (v[lead] % pv == 0) {
      Int q = v[lead] / pv;
      const auto& row = rows_[std::size_t(r)];
      for (std::size_t j = lead; j < ambient_; ++j) v[j] -= q * row[j];
    } else {
      // gcd-combine: replace the pivot row with the gcd row, keep the
      // complementary combination as the residual to reduce further.
      Int a = pv, b = v[lead], g, x, y;
      // extended gcd
      Int old_r = a, rr = b, old_s = 1, s = 0, old_t = 0, t = 1;
      while (rr != 0) {
        Int q = old_r / rr;
        Int tmp = old_r - q * rr; old_r = rr; rr = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
      }
      g = old_r; x = old_s; y = old_t;  // x*a + y*b = g
      auto& row = rows_[std::size_t(r)];
      std::vector<Int> newrow(ambient_), newres(ambient_);
      Int ca = a / g, cb = b / g;
      for (std::size_t j = lead; j < ambient_; ++j) {
        newrow[j] = x * row[j] + y * v[j];
        newres[j] = ca * v[j] - cb * row[j];
      }
      row = std::move(newrow);
      v = std::move(newres);
      changed = true;
    }
  }
  // new pivot row at column `lead`
  if (v[lead] < 0)
    for (auto& x : v) x = -x;
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

void IntLattice::canonicalize() {
  // pivots positive, entries above pivots reduced into [0, pivot)
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i][pivots_[i]] < 0)
      for (auto& x : rows_[i]) x = -x;
  for (std::size_t i = rows_.size(); i-- > 0;) {
    for (std::size_t j = i + 1; j < rows_.size(); ++j) {
      std::size_t c = pivots_[j];
      const Int& pv = rows_[j][c];
      Int e = rows_[i][c];
      // floor division
      Int q = e / pv;
      if (q * pv > e) q -= 1;
      if (q == 0) continue;
      for (std::size_t col = c; col < ambient_; ++col) rows_[i][col] -= q * rows_[j][col];
    }
  }
}

bool IntLattice::member(const std::vector<Int>& v) const {
  std::vector<Int> w = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::size_t c = pivots_[i];
    if (w[c] == 0) continue;
    if (w[c] % rows_[i][c] != 0) return false;
    Int q = w[c] / rows_[i][c];
    for (std::size_t j = c; j < ambient_; ++j) w[j] -= q * rows_[i][j];
  }
  return std::all_of(w.begin(), w.end(), [](const Int& x) { return x == 0; });
}

std::vector<Int> IntLattice::coords(const std::vector<Int>& v) const {
  std::vector<Int> w = v, out(rows_.size(), 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::size_t c = pivots_[i];
    if (w[c] == 0) continue;
    if (w[c] % rows_[i][c] != 0)
      throw ContainmentError("IntLattice::coords: vector not in lattice");
    Int q = w[c] / rows_[i][c];
    out[i] = q;
    for (std::size_t j = c; j < ambient_; ++j) w[j] -= q * rows_[i][j];
  }
  if (!std::all_of(w.begin(), w.end(), [](const Int& x) { return x == 0; }))
    throw ContainmentError("IntLattice::coords: vector not in lattice");
  return out;
}

void IntLattice::write(std::ostream& os) const {
  os << "weylchain-lattice v1 ambient=" << ambient_ << " rank=" << rows_.size() << "\n";
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (c) os << ' ';
      os << row[c];
    }
    os << "\n";
  }
}

IntLattice IntLattice::read(std::istream& is) {
  std::string magic, ver, amb, rk;
  is >> magic >> ver >> amb >> rk;
  if (magic != "weylchain-lattice" || ver != "v1" || amb.rfind("ambient=", 0) != 0 ||
      rk.rfind("rank=", 0) != 0)
    throw std::runtime_error("IntLattice::read: bad header");
  std::size_t n = std::stoul(amb.substr(8));
  std::size_t r = std::stoul(rk.substr(5));
  IntLattice l(n);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Int> row(n);
    for (std::size_t c = 0; c < n; ++c) {
      std::string tok;
      if (!(is >> tok)) throw std::runtime_error("IntLattice::read: truncated");
      row[c] = Int(tok);
    }
    l.insert(std::move(row));
  }
  if (l.rank() != r) throw std::runtime_error("IntLattice::read: rows not independent");
  l.canonicalize();
  return l;
}

bool IntLattice::operator==(const IntLattice& o) const {
  return ambient_ == o.ambient_ && pivots_ == o.pivots_ && rows_ == o.rows_;
}

// ---------------------------------------------------------------------------
// Smith normal form

std::vector<Int> snf_diagonal(IntMatrix m) {
  std::size_t R = m.rows, C = m.cols;
  std::vector<Int> out;
  std::size_t t = 0;
  auto abs_ = [](const Int& x) { return x < 0 ? Int(-x) : x; };
  while (t < R && t < C) {
    // find smallest nonzero entry in the trailing block
    std::size_t br = t, bc = t;
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j) {
        const Int& e = m.at(i, j);
        if (e == 0) continue;
        if (!found || abs_(e) < best) {
          best = abs_(e);
          br = i;
          bc = j;
          found = true;
        }
      }
    if (!found) break;
    // move to (t, t)
    if (br != t)
      for (std::size_t j = 0; j < C; ++j) std::swap(m.at(br, j), m.at(t, j));
    if (bc != t)
      for (std::size_t i = 0; i < R; ++i) std::swap(m.at(i, bc), m.at(i, t));
    if (m.at(t, t) < 0)
      for (std::size_t j = 0; j < C; ++j) m.at(t, j) = -m.at(t, j);
    // eliminate column and row
    bool clean = true;
    for (std::size_t i = t + 1; i < R; ++i) {
      if (m.at(i, t) == 0) continue;
      Int q = m.at(i, t) / m.at(t, t);
      for (std::size_t j = t; j < C; ++j) m.at(i, j) -= q * m.at(t, j);
      if (m.at(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < C; ++j) {
      if (m.at(t, j) == 0) continue;
      Int q = m.at(t, j) / m.at(t, t);
      for (std::size_t i = t; i < R; ++i) m.at(i, j) -= q * m.at(i, t);
      if (m.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // remainders left, redo with a smaller pivot
    // divisibility: pivot must divide the trailing block
    bool divides = true;
    for (std::size_t i = t + 1; i < R && divides; ++i)
      for (std::size_t j = t + 1; j < C; ++j)
        if (m.at(i, j) % m.at(t, t) != 0) {
          // fold the offending row into row t and redo
          for (std::size_t c = t; c < C; ++c) m.at(t, c) += m.at(i, c);
          divides = false;
          break;
        }
    if (!divides) continue;
    out.push_back(m.at(t, t));
    ++t;
  }
  return out;
}

std::vector<Int> snf_divisors(const IntLattice& sub, const IntLattice& ambient) {
  if (sub.ambient_dim() != ambient.ambient_dim())
    throw std::invalid_argument("snf_divisors: ambient mismatch");
  IntMatrix coeff(sub.rank(), ambient.rank());
  for (std::size_t r = 0; r < sub.rank(); ++r) {
    std::vector<Int> x;
    try {
      x = ambient.coords(sub.basis_rows()[r]);
    } catch (const ContainmentError&) {
      throw ContainmentError("snf_divisors: sub not contained in ambient");
    }
    for (std::size_t c = 0; c < ambient.rank(); ++c) coeff.at(r, c) = x[c];
  }
  return snf_diagonal(std::move(coeff));
}

}  // namespace weylchain
