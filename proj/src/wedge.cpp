#include "weylchain/wedge.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylchain {

std::uint64_t binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * std::uint64_t(n - k + i) / std::uint64_t(i);
  }
  return r;
}

std::size_t colex_rank(const std::vector<int>& subset) {
  std::size_t r = 0;
  for (std::size_t m = 0; m < subset.size(); ++m) {
    if (m > 0 && subset[m] <= subset[m - 1])
      throw std::invalid_argument("colex_rank: subset must be strictly increasing");
    r += std::size_t(binom(subset[m], int(m) + 1));
  }
  return r;
}

std::vector<int> colex_unrank(std::size_t rank, int k) {
  std::vector<int> out(static_cast<std::size_t>(k), 0);
  for (int m = k; m >= 1; --m) {
    // largest c with C(c, m) <= rank
    int c = m - 1;
    while (binom(c + 1, m) <= rank) ++c;
    out[std::size_t(m - 1)] = c;
    rank -= std::size_t(binom(c, m));
  }
  return out;
}

SparseIntMat wedge_lift(const SparseIntMat& g, int k) {
  if (g.rows != g.cols) throw std::invalid_argument("wedge_lift: square matrix required");
  const int N = int(g.rows);
  const std::size_t dim = std::size_t(binom(N, k));
  SparseIntMat out(dim, dim);
  std::vector<int> J(static_cast<std::size_t>(k), 0);
  for (std::size_t col = 0; col < dim; ++col) {
    J = colex_unrank(col, k);
    for (int t = 0; t < k; ++t) {
      for (const auto& [r, v] : g.col[std::size_t(J[std::size_t(t)])]) {
        const int img = int(r);
        // replace J[t] by img, skip if it collides with another element
        bool collides = false;
        for (int s = 0; s < k; ++s)
          if (s != t && J[std::size_t(s)] == img) {
            collides = true;
            break;
          }
        if (collides) continue;
        std::vector<int> K = J;
        K[std::size_t(t)] = img;
        // sort by moving position t into place; each swap flips the sign
        int sign = 1, pos = t;
        while (pos > 0 && K[std::size_t(pos)] < K[std::size_t(pos - 1)]) {
          std::swap(K[std::size_t(pos)], K[std::size_t(pos - 1)]);
          --pos;
          sign = -sign;
        }
        while (pos + 1 < k && K[std::size_t(pos)] > K[std::size_t(pos + 1)]) {
          std::swap(K[std::size_t(pos)], K[std::size_t(pos + 1)]);
          ++pos;
          sign = -sign;
        }
        out.add(colex_rank(K), col, sign * v);
      }
    }
  }
  out.normalize();
  return out;
}

int nilpotency_index(const SparseIntMat& m, int cap) {
  SparseIntMat p = m;
  for (int e = 1; e <= cap; ++e) {
    if (p.is_zero()) return e;
    p = compose(p, m);
  }
  return cap + 1;
}

namespace {

// Emits lab, lab^2/2!, ... while the divided power stays nonzero.
void push_divided_powers(std::vector<Operator>& out, const std::string& space,
                         const std::string& letter, const std::string& rootlab,
                         const SparseIntMat& lifted) {
  SparseIntMat d = lifted;
  for (int t = 1; !d.is_zero(); ++t) {
    Operator op;
    op.space = space;
    op.label = t == 1 ? letter + "[" + rootlab + "]"
                      : letter + "^" + std::to_string(t) + "[" + rootlab + "]/" +
                            std::to_string(t) + "!";
    op.divided_exponent = t;
    op.matrix = d;
    out.push_back(std::move(op));
    d = divide_exact(compose(d, lifted), t + 1);
  }
}

}  // namespace

std::vector<Operator> wedge_generators(Family f, int n, int k, GenSet which) {
  std::vector<Operator> out;
  const std::string space = std::string("wedge^") + std::to_string(k) + "(V_" +
                            family_name(f) + "(" + std::to_string(n) + "))";
  for (const Root& a : positive_roots(f, n)) {
    const std::string lab = root_label(a);
    if (f == Family::B) {
      if (which != GenSet::Lowering)
        push_divided_powers(out, space, "X", lab, wedge_lift(ortho_X(n, a).matrix, k));
      if (which != GenSet::Raising)
        push_divided_powers(out, space, "Y", lab, wedge_lift(ortho_Y(n, a).matrix, k));
    } else {
      if (which != GenSet::Lowering)
        push_divided_powers(out, space, "U", lab, wedge_lift(symp_U(n, a).matrix, k));
      if (which != GenSet::Raising)
        push_divided_powers(out, space, "V", lab, wedge_lift(symp_V(n, a).matrix, k));
    }
  }
  return out;
}

std::vector<Operator> wedge_cartan(Family f, int n, int k) {
  std::vector<Operator> out;
  const std::string space = std::string("wedge^") + std::to_string(k) + "(V_" +
                            family_name(f) + "(" + std::to_string(n) + "))";
  for (int i = 1; i <= n; ++i) {
    Operator op;
    op.space = space;
    op.label = (f == Family::B ? "H" : "C") + std::to_string(i);
    op.matrix = wedge_lift(
        f == Family::B ? ortho_H(n, i).matrix : symp_C(n, i).matrix, k);
    out.push_back(std::move(op));
  }
  return out;
}

}  // namespace weylchain
