#include "weylchain/chevalley.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace weylchain {

void SparseIntMat::add(std::size_t r, std::size_t c, long long v) {
  if (r >= rows || c >= cols) throw std::out_of_range("SparseIntMat::add");
  if (v != 0) col[c].push_back({std::uint32_t(r), v});
}

void SparseIntMat::normalize() {
  for (auto& entries : col) {
    std::sort(entries.begin(), entries.end());
    std::vector<std::pair<std::uint32_t, long long>> out;
    for (const auto& [r, v] : entries) {
      if (!out.empty() && out.back().first == r)
        out.back().second += v;
      else
        out.push_back({r, v});
    }
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    entries = std::move(out);
  }
}

bool SparseIntMat::is_zero() const {
  for (const auto& entries : col)
    if (!entries.empty()) return false;
  return true;
}

std::size_t SparseIntMat::nnz() const {
  std::size_t total = 0;
  for (const auto& entries : col) total += entries.size();
  return total;
}

void SparseIntMat::apply_acc(const std::vector<long long>& x, std::vector<long long>& y,
                             long long factor) const {
  if (x.size() != cols || y.size() != rows) throw std::invalid_argument("apply_acc: size");
  for (std::size_t c = 0; c < cols; ++c) {
    if (x[c] == 0) continue;
    const long long xc = factor * x[c];
    for (const auto& [r, v] : col[c]) y[r] += v * xc;
  }
}

std::vector<long long> SparseIntMat::apply(const std::vector<long long>& x) const {
  std::vector<long long> y(rows, 0);
  apply_acc(x, y);
  return y;
}

bool SparseIntMat::operator==(const SparseIntMat& o) const {
  if (rows != o.rows || cols != o.cols) return false;
  SparseIntMat a = *this, b = o;
  a.normalize();
  b.normalize();
  return a.col == b.col;
}

SparseIntMat compose(const SparseIntMat& a, const SparseIntMat& b) {
  if (a.cols != b.rows) throw std::invalid_argument("compose: shape mismatch");
  SparseIntMat out(a.rows, b.cols);
  for (std::size_t c = 0; c < b.cols; ++c)
    for (const auto& [mid, vb] : b.col[c])
      for (const auto& [r, va] : a.col[mid]) out.add(r, c, va * vb);
  out.normalize();
  return out;
}

SparseIntMat add(const SparseIntMat& a, const SparseIntMat& b, long long fb) {
  if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("add: shape mismatch");
  SparseIntMat out = a;
  for (std::size_t c = 0; c < b.cols; ++c)
    for (const auto& [r, v] : b.col[c]) out.add(r, c, fb * v);
  out.normalize();
  return out;
}

SparseIntMat bracket(const SparseIntMat& a, const SparseIntMat& b) {
  return add(compose(a, b), compose(b, a), -1);
}

SparseIntMat divide_exact(const SparseIntMat& a, long long d) {
  if (d == 0) throw std::logic_error("divide_exact: zero divisor");
  SparseIntMat out = a;
  for (auto& entries : out.col)
    for (auto& [r, v] : entries) {
      if (v % d != 0) throw std::logic_error("divide_exact: entry not divisible");
      v /= d;
    }
  return out;
}

bool congruent_mod(const SparseIntMat& a, const SparseIntMat& b, long long m) {
  SparseIntMat d = add(a, b, -1);
  for (const auto& entries : d.col)
    for (const auto& [r, v] : entries)
      if (v % m != 0) return false;
  return true;
}

namespace {

// 0-based index of e_l (l is the table's 1-based label)
inline std::size_t ix(int l) { return std::size_t(l - 1); }

Operator make_op(Family f, int n, std::size_t dim, const std::string& label) {
  Operator op;
  op.space = std::string("V_") + family_name(f) + "(" + std::to_string(n) + ")";
  op.label = label;
  op.matrix = SparseIntMat(dim, dim);
  return op;
}

void require_positive(const Root& r) {
  if (r.negative) throw std::invalid_argument("generator tables take positive roots");
}

}  // namespace

Operator ortho_X(int n, const Root& r) {
  require_positive(r);
  const std::size_t d = std::size_t(2 * n + 1);
  Operator op = make_op(Family::B, n, d, "X[" + root_label(r) + "]");
  auto& m = op.matrix;
  const int i = r.i, j = r.j;
  switch (r.kind) {
    case Root::Kind::Diff:  // e_j -> e_i, e_{n+i} -> -e_{n+j}
      m.add(ix(i), ix(j), 1);
      m.add(ix(n + j), ix(n + i), -1);
      break;
    case Root::Kind::Sum:  // e_{n+i} -> e_j, e_{n+j} -> -e_i
      m.add(ix(j), ix(n + i), 1);
      m.add(ix(i), ix(n + j), -1);
      break;
    case Root::Kind::Short:  // e_{n+i} -> e_{2n+1}, e_{2n+1} -> -2 e_i
      m.add(ix(2 * n + 1), ix(n + i), 1);
      m.add(ix(i), ix(2 * n + 1), -2);
      break;
    case Root::Kind::Long2:
      throw std::invalid_argument("ortho_X: 2u_i is not a B_n root");
  }
  return op;
}

Operator ortho_Y(int n, const Root& r) {
  require_positive(r);
  const std::size_t d = std::size_t(2 * n + 1);
  Operator op = make_op(Family::B, n, d, "Y[" + root_label(r) + "]");
  auto& m = op.matrix;
  const int i = r.i, j = r.j;
  switch (r.kind) {
    case Root::Kind::Diff:  // e_i -> e_j, e_{n+j} -> -e_{n+i}
      m.add(ix(j), ix(i), 1);
      m.add(ix(n + i), ix(n + j), -1);
      break;
    case Root::Kind::Sum:  // e_i -> -e_{n+j}, e_j -> e_{n+i}
      m.add(ix(n + j), ix(i), -1);
      m.add(ix(n + i), ix(j), 1);
      break;
    case Root::Kind::Short:  // e_i -> -e_{2n+1}, e_{2n+1} -> 2 e_{n+i}
      m.add(ix(2 * n + 1), ix(i), -1);
      m.add(ix(n + i), ix(2 * n + 1), 2);
      break;
    case Root::Kind::Long2:
      throw std::invalid_argument("ortho_Y: 2u_i is not a B_n root");
  }
  return op;
}

Operator ortho_H(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("ortho_H: index");
  const std::size_t d = std::size_t(2 * n + 1);
  Operator op = make_op(Family::B, n, d, "H" + std::to_string(i));
  auto& m = op.matrix;
  if (i < n) {
    m.add(ix(i), ix(i), 1);
    m.add(ix(i + 1), ix(i + 1), -1);
    m.add(ix(n + i), ix(n + i), -1);
    m.add(ix(n + i + 1), ix(n + i + 1), 1);
  } else {
    m.add(ix(n), ix(n), 2);
    m.add(ix(2 * n), ix(2 * n), -2);
  }
  return op;
}

Operator ortho_H_root(int n, const Root& r) {
  require_positive(r);
  // integral expansions in the simple coroots; the mixed-sum case starts
  // its first summation at r = i (additivity H_{u_i+u_j} = H_{u_i-u_j} + H_{u_j})
  std::vector<int> coeff(std::size_t(n), 0);
  const int i = r.i, j = r.j;
  switch (r.kind) {
    case Root::Kind::Diff:
      for (int t = i; t <= j - 1; ++t) coeff[ix(t)] = 1;
      break;
    case Root::Kind::Short:
      for (int t = i; t <= n - 1; ++t) coeff[ix(t)] = 2;
      coeff[ix(n)] = 1;
      break;
    case Root::Kind::Sum:
      for (int t = i; t <= j - 1; ++t) coeff[ix(t)] = 1;
      for (int t = j; t <= n - 1; ++t) coeff[ix(t)] = 2;
      coeff[ix(n)] = 1;
      break;
    case Root::Kind::Long2:
      throw std::invalid_argument("ortho_H_root: 2u_i is not a B_n root");
  }
  const std::size_t d = std::size_t(2 * n + 1);
  Operator op = make_op(Family::B, n, d, "H[" + root_label(r) + "]");
  for (int t = 1; t <= n; ++t) {
    if (coeff[ix(t)] == 0) continue;
    op.matrix = ::weylchain::add(op.matrix, ortho_H(n, t).matrix, coeff[ix(t)]);
  }
  return op;
}

Operator ortho_divided_square_X(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("ortho_divided_square_X: index");
  const std::size_t d = std::size_t(2 * n + 1);
  Operator op = make_op(Family::B, n, d, "X^2[u" + std::to_string(i) + "]/2");
  op.divided_exponent = 2;
  op.matrix.add(ix(i), ix(n + i), -1);  // e_{n+i} -> -e_i
  return op;
}

Operator ortho_divided_square_Y(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("ortho_divided_square_Y: index");
  const std::size_t d = std::size_t(2 * n + 1);
  Operator op = make_op(Family::B, n, d, "Y^2[u" + std::to_string(i) + "]/2");
  op.divided_exponent = 2;
  op.matrix.add(ix(n + i), ix(i), -1);  // e_i -> -e_{n+i}
  return op;
}

Operator symp_U(int n, const Root& r) {
  require_positive(r);
  const std::size_t d = std::size_t(2 * n);
  Operator op = make_op(Family::C, n, d, "U[" + root_label(r) + "]");
  auto& m = op.matrix;
  const int i = r.i, j = r.j;
  switch (r.kind) {
    case Root::Kind::Diff:  // e_j -> e_i, e_{n+i} -> -e_{n+j}
      m.add(ix(i), ix(j), 1);
      m.add(ix(n + j), ix(n + i), -1);
      break;
    case Root::Kind::Sum:  // e_{n+i} -> e_j, e_{n+j} -> e_i
      m.add(ix(j), ix(n + i), 1);
      m.add(ix(i), ix(n + j), 1);
      break;
    case Root::Kind::Long2:  // e_{n+i} -> e_i
      m.add(ix(i), ix(n + i), 1);
      break;
    case Root::Kind::Short:
      throw std::invalid_argument("symp_U: u_i is not a C_n root");
  }
  return op;
}

Operator symp_V(int n, const Root& r) {
  require_positive(r);
  const std::size_t d = std::size_t(2 * n);
  Operator op = make_op(Family::C, n, d, "V[" + root_label(r) + "]");
  auto& m = op.matrix;
  const int i = r.i, j = r.j;
  switch (r.kind) {
    case Root::Kind::Diff:  // e_i -> e_j, e_{n+j} -> -e_{n+i}
      m.add(ix(j), ix(i), 1);
      m.add(ix(n + i), ix(n + j), -1);
      break;
    case Root::Kind::Sum:  // e_i -> e_{n+j}, e_j -> e_{n+i}
      m.add(ix(n + j), ix(i), 1);
      m.add(ix(n + i), ix(j), 1);
      break;
    case Root::Kind::Long2:  // e_i -> e_{n+i}
      m.add(ix(n + i), ix(i), 1);
      break;
    case Root::Kind::Short:
      throw std::invalid_argument("symp_V: u_i is not a C_n root");
  }
  return op;
}

Operator symp_C(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("symp_C: index");
  const std::size_t d = std::size_t(2 * n);
  Operator op = make_op(Family::C, n, d, "C" + std::to_string(i));
  auto& m = op.matrix;
  if (i < n) {
    m.add(ix(i), ix(i), 1);
    m.add(ix(i + 1), ix(i + 1), -1);
    m.add(ix(n + i), ix(n + i), -1);
    m.add(ix(n + i + 1), ix(n + i + 1), 1);
  } else {
    m.add(ix(n), ix(n), 1);
    m.add(ix(2 * n), ix(2 * n), -1);
  }
  return op;
}

namespace {

// Parses "u3", "u1-u2", "u1+u2", "2u3" into a positive root of the family.
Root parse_root_label(Family f, int n, const std::string& s) {
  Root r{f, n, Root::Kind::Short, 0, 0, false};
  auto read_int = [&](std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) throw std::invalid_argument("bad root label: " + s);
    return std::stoi(s.substr(start, pos - start));
  };
  std::size_t pos = 0;
  if (s.rfind("2u", 0) == 0) {
    pos = 2;
    r.kind = Root::Kind::Long2;
    r.i = read_int(pos);
  } else if (s.rfind("u", 0) == 0) {
    pos = 1;
    r.i = read_int(pos);
    if (pos == s.size()) {
      r.kind = Root::Kind::Short;
    } else {
      char op = s[pos++];
      if (pos >= s.size() || s[pos] != 'u') throw std::invalid_argument("bad root label: " + s);
      ++pos;
      r.j = read_int(pos);
      r.kind = (op == '-') ? Root::Kind::Diff : Root::Kind::Sum;
      if (op != '-' && op != '+') throw std::invalid_argument("bad root label: " + s);
    }
  } else {
    throw std::invalid_argument("bad root label: " + s);
  }
  if (pos != s.size()) throw std::invalid_argument("bad root label: " + s);
  return r;
}

std::string bracketed(const std::string& label, std::size_t open) {
  std::size_t close = label.rfind(']');
  if (close == std::string::npos || close <= open)
    throw std::invalid_argument("bad operator label: " + label);
  return label.substr(open + 1, close - open - 1);
}

}  // namespace

Operator ortho_generator(int n, const std::string& label) {
  if (label.rfind("H", 0) == 0 && label.find('[') == std::string::npos)
    return ortho_H(n, std::stoi(label.substr(1)));
  if (label.rfind("H[", 0) == 0)
    return ortho_H_root(n, parse_root_label(Family::B, n, bracketed(label, 1)));
  if (label.rfind("X^2[", 0) == 0) {
    Root r = parse_root_label(Family::B, n, bracketed(label, 3));
    if (r.kind != Root::Kind::Short) throw std::invalid_argument("divided square needs short root");
    return ortho_divided_square_X(n, r.i);
  }
  if (label.rfind("Y^2[", 0) == 0) {
    Root r = parse_root_label(Family::B, n, bracketed(label, 3));
    if (r.kind != Root::Kind::Short) throw std::invalid_argument("divided square needs short root");
    return ortho_divided_square_Y(n, r.i);
  }
  if (label.rfind("X[", 0) == 0)
    return ortho_X(n, parse_root_label(Family::B, n, bracketed(label, 1)));
  if (label.rfind("Y[", 0) == 0)
    return ortho_Y(n, parse_root_label(Family::B, n, bracketed(label, 1)));
  throw std::invalid_argument("ortho_generator: unknown label " + label);
}

Operator symp_generator(int n, const std::string& label) {
  if (label.rfind("C", 0) == 0) return symp_C(n, std::stoi(label.substr(1)));
  if (label.rfind("U[", 0) == 0)
    return symp_U(n, parse_root_label(Family::C, n, bracketed(label, 1)));
  if (label.rfind("V[", 0) == 0)
    return symp_V(n, parse_root_label(Family::C, n, bracketed(label, 1)));
  throw std::invalid_argument("symp_generator: unknown label " + label);
}

namespace {

// Coroot of a positive root in u-coordinates.
std::vector<int> coroot_u(const Root& r) {
  std::vector<int> c(std::size_t(r.n), 0);
  switch (r.kind) {
    case Root::Kind::Diff:
      c[ix(r.i)] = 1;
      c[ix(r.j)] = -1;
      break;
    case Root::Kind::Short:  // B short: alpha^vee = 2 alpha
      c[ix(r.i)] = 2;
      break;
    case Root::Kind::Sum:
      c[ix(r.i)] = 1;
      c[ix(r.j)] = 1;
      break;
    case Root::Kind::Long2:  // C long: alpha^vee = alpha/2 doubled back = u_i
      c[ix(r.i)] = 1;
      break;
  }
  return c;
}

// Diagonal operator with entry <weight of e_l, alpha^vee> at e_l; the
// weight of e_l is u_l for l <= n, -u_{l-n} for n < l <= 2n, zero else.
SparseIntMat coroot_diagonal(Family f, int n, const Root& r) {
  const std::size_t dim = std::size_t(f == Family::B ? 2 * n + 1 : 2 * n);
  auto cr = coroot_u(r);
  SparseIntMat m(dim, dim);
  for (int l = 1; l <= n; ++l) {
    m.add(ix(l), ix(l), cr[ix(l)]);
    m.add(ix(n + l), ix(n + l), -cr[ix(l)]);
  }
  m.normalize();
  return m;
}

int nilpotency_exponent(const SparseIntMat& m, int cap) {
  SparseIntMat p = m;
  for (int e = 1; e <= cap; ++e) {
    if (p.is_zero()) return e;
    p = compose(p, m);
  }
  return cap + 1;  // exceeds cap
}

}  // namespace

Report relation_check(int n) {
  Report rep;
  rep.suite = "relations";
  rep.params = {Family::B, n, 0, 0};

  // type B on V = Z^{2n+1}
  for (const Root& a : positive_roots(Family::B, n)) {
    const std::string lab = root_label(a);
    Operator X = ortho_X(n, a), Y = ortho_Y(n, a);
    SparseIntMat br = bracket(X.matrix, Y.matrix);
    rep.add_flag("B.cartan." + lab, "[X,Y] equals coroot diagonal for " + lab,
                 br == coroot_diagonal(Family::B, n, a));
    rep.add_flag("B.cartan-expansion." + lab,
                 "[X,Y] equals the simple-H expansion for " + lab,
                 br == ortho_H_root(n, a).matrix);
    const int want = is_long(a) ? 2 : 3;
    rep.add("B.nilX." + lab, "nilpotency exponent of X_" + lab + " on V",
            std::to_string(want), std::to_string(nilpotency_exponent(X.matrix, 4)));
    rep.add("B.nilY." + lab, "nilpotency exponent of Y_" + lab + " on V",
            std::to_string(want), std::to_string(nilpotency_exponent(Y.matrix, 4)));
  }
  for (int i = 1; i <= n; ++i) {
    Root u{Family::B, n, Root::Kind::Short, i, 0};
    SparseIntMat X = ortho_X(n, u).matrix, Y = ortho_Y(n, u).matrix;
    rep.add_flag("B.divsqX.u" + std::to_string(i),
                 "X^2/2 table entry doubles to X^2 for u" + std::to_string(i),
                 divide_exact(compose(X, X), 2) == ortho_divided_square_X(n, i).matrix);
    rep.add_flag("B.divsqY.u" + std::to_string(i),
                 "Y^2/2 table entry doubles to Y^2 for u" + std::to_string(i),
                 divide_exact(compose(Y, Y), 2) == ortho_divided_square_Y(n, i).matrix);
  }

  // type C on Vbar = Z^{2n}
  for (const Root& b : positive_roots(Family::C, n)) {
    const std::string lab = root_label(b);
    Operator U = symp_U(n, b), Vv = symp_V(n, b);
    rep.add_flag("C.cartan." + lab, "[U,V] equals coroot diagonal for " + lab,
                 bracket(U.matrix, Vv.matrix) == coroot_diagonal(Family::C, n, b));
    rep.add("C.nilU." + lab, "nilpotency exponent of U_" + lab + " on Vbar", "2",
            std::to_string(nilpotency_exponent(U.matrix, 3)));
    rep.add("C.nilV." + lab, "nilpotency exponent of V_" + lab + " on Vbar", "2",
            std::to_string(nilpotency_exponent(Vv.matrix, 3)));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Root sum{Family::C, n, Root::Kind::Sum, i, j};
      Root diff{Family::C, n, Root::Kind::Diff, i, j};
      Root lj{Family::C, n, Root::Kind::Long2, j, 0};
      const std::string ij = std::to_string(i) + std::to_string(j);
      rep.add_flag("C.sum-bracket.U." + ij,
                   "U[u" + std::to_string(i) + "+u" + std::to_string(j) + "] = [U_diff, U_2uj]",
                   symp_U(n, sum).matrix ==
                       bracket(symp_U(n, diff).matrix, symp_U(n, lj).matrix));
      rep.add_flag("C.sum-bracket.V." + ij,
                   "V[u" + std::to_string(i) + "+u" + std::to_string(j) + "] = [V_2uj, V_diff]",
                   symp_V(n, sum).matrix ==
                       bracket(symp_V(n, lj).matrix, symp_V(n, diff).matrix));
    }

  // sigma-correspondence on Vbar, the hyperplane <e_1..e_2n> of V: the B
  // operators below stabilize it, so compare their top-left 2n x 2n blocks.
  auto restrict_bar = [&](const SparseIntMat& m) {
    SparseIntMat out(std::size_t(2 * n), std::size_t(2 * n));
    bool stable = true;
    for (std::size_t c = 0; c < std::size_t(2 * n); ++c)
      for (const auto& [r, v] : m.col[c]) {
        if (r >= std::size_t(2 * n))
          stable = false;
        else
          out.add(r, c, v);
      }
    if (!stable) throw std::logic_error("operator does not stabilize Vbar");
    out.normalize();
    return out;
  };
  for (int i = 1; i <= n; ++i) {
    Root l2{Family::C, n, Root::Kind::Long2, i, 0};
    const std::string si = std::to_string(i);
    rep.add_flag("sigma.long.U.u" + si, "U[2u" + si + "] = -X^2[u" + si + "]/2 on Vbar",
                 symp_U(n, l2).matrix ==
                     add(SparseIntMat(std::size_t(2 * n), std::size_t(2 * n)),
                         restrict_bar(ortho_divided_square_X(n, i).matrix), -1));
    rep.add_flag("sigma.long.V.u" + si, "V[2u" + si + "] = -Y^2[u" + si + "]/2 on Vbar",
                 symp_V(n, l2).matrix ==
                     add(SparseIntMat(std::size_t(2 * n), std::size_t(2 * n)),
                         restrict_bar(ortho_divided_square_Y(n, i).matrix), -1));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Root diff{Family::B, n, Root::Kind::Diff, i, j};
      Root sumB{Family::B, n, Root::Kind::Sum, i, j};
      Root diffC{Family::C, n, Root::Kind::Diff, i, j};
      Root sumC{Family::C, n, Root::Kind::Sum, i, j};
      Root ljC{Family::C, n, Root::Kind::Long2, j, 0};
      const std::string ij = std::to_string(i) + std::to_string(j);
      rep.add_flag("sigma.diff.U." + ij, "U and X agree on Vbar for u_i-u_j (" + ij + ")",
                   symp_U(n, diffC).matrix == restrict_bar(ortho_X(n, diff).matrix));
      rep.add_flag("sigma.diff.V." + ij, "V and Y agree on Vbar for u_i-u_j (" + ij + ")",
                   symp_V(n, diffC).matrix == restrict_bar(ortho_Y(n, diff).matrix));
      // exact correction term: U_{ui+uj} = X_{ui+uj} + 2 U_{ui-uj} U_{2uj}
      rep.add_flag("sigma.sum.U." + ij,
                   "U[u_i+u_j] = X[u_i+u_j] + 2 U_diff U_2uj on Vbar (" + ij + ")",
                   symp_U(n, sumC).matrix ==
                       add(restrict_bar(ortho_X(n, sumB).matrix),
                           compose(symp_U(n, diffC).matrix, symp_U(n, ljC).matrix), 2));
      rep.add_flag("sigma.sum.V." + ij,
                   "V[u_i+u_j] = Y[u_i+u_j] + 2 V_2uj V_diff on Vbar (" + ij + ")",
                   symp_V(n, sumC).matrix ==
                       add(restrict_bar(ortho_Y(n, sumB).matrix),
                           compose(symp_V(n, ljC).matrix, symp_V(n, diffC).matrix), 2));
      rep.add_flag("sigma.sum.mod2." + ij,
                   "U,V congruent to X,Y mod 2 on Vbar for u_i+u_j (" + ij + ")",
                   congruent_mod(symp_U(n, sumC).matrix,
                                 restrict_bar(ortho_X(n, sumB).matrix), 2) &&
                       congruent_mod(symp_V(n, sumC).matrix,
                                     restrict_bar(ortho_Y(n, sumB).matrix), 2));
    }

  return rep;
}

}  // namespace weylchain
