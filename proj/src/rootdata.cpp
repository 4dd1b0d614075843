#include "weylchain/rootdata.hpp"

#include <numeric>
#include <stdexcept>

namespace weylchain {

bool is_long(const Root& r) {
  switch (r.kind) {
    case Root::Kind::Diff:
    case Root::Kind::Sum:
      return r.family == Family::B;  // short in C_n
    case Root::Kind::Short:
      return false;
    case Root::Kind::Long2:
      return true;
  }
  return false;
}

std::string root_label(const Root& r) {
  std::string s = r.negative ? "-" : "";
  switch (r.kind) {
    case Root::Kind::Diff:
      return s + "u" + std::to_string(r.i) + "-u" + std::to_string(r.j);
    case Root::Kind::Short:
      return s + "u" + std::to_string(r.i);
    case Root::Kind::Sum:
      return s + "u" + std::to_string(r.i) + "+u" + std::to_string(r.j);
    case Root::Kind::Long2:
      return s + "2u" + std::to_string(r.i);
  }
  return s;
}

std::vector<Root> positive_roots(Family family, int n) {
  if (n < 2) throw std::invalid_argument("positive_roots: rank must be >= 2");
  std::vector<Root> out;
  out.reserve(std::size_t(n) * std::size_t(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      out.push_back({family, n, Root::Kind::Diff, i, j});
  for (int i = 1; i <= n; ++i) {
    if (family == Family::B)
      out.push_back({family, n, Root::Kind::Short, i, 0});
    else
      out.push_back({family, n, Root::Kind::Long2, i, 0});
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      out.push_back({family, n, Root::Kind::Sum, i, j});
  return out;
}

std::vector<int> alpha_coords(const Root& r) {
  const int n = r.n;
  std::vector<int> c(std::size_t(n), 0);
  switch (r.kind) {
    case Root::Kind::Diff:  // u_i - u_j = sum_{r=i}^{j-1} alpha_r
      for (int t = r.i; t <= r.j - 1; ++t) c[std::size_t(t - 1)] = 1;
      break;
    case Root::Kind::Short:  // u_i = sum_{r=i}^{n} alpha_r
      if (r.family != Family::B) throw std::invalid_argument("short root outside B");
      for (int t = r.i; t <= n; ++t) c[std::size_t(t - 1)] = 1;
      break;
    case Root::Kind::Sum:
      if (r.family == Family::B) {
        // ones on [i, j-1], twos on [j, n]
        for (int t = r.i; t <= r.j - 1; ++t) c[std::size_t(t - 1)] = 1;
        for (int t = r.j; t <= n; ++t) c[std::size_t(t - 1)] = 2;
      } else {
        // ones on [i, j-1], twos on [j, n-1], one at n
        for (int t = r.i; t <= r.j - 1; ++t) c[std::size_t(t - 1)] = 1;
        for (int t = r.j; t <= n - 1; ++t) c[std::size_t(t - 1)] = 2;
        c[std::size_t(n - 1)] = 1;
      }
      break;
    case Root::Kind::Long2:  // 2u_i = 2 sum_{r=i}^{n-1} beta_r + beta_n
      if (r.family != Family::C) throw std::invalid_argument("long2 root outside C");
      for (int t = r.i; t <= n - 1; ++t) c[std::size_t(t - 1)] = 2;
      c[std::size_t(n - 1)] = 1;
      break;
  }
  if (r.negative)
    for (auto& x : c) x = -x;
  return c;
}

namespace {
std::vector<int> root_u(const Root& r) {
  std::vector<int> u(std::size_t(r.n), 0);
  switch (r.kind) {
    case Root::Kind::Diff:
      u[std::size_t(r.i - 1)] = 1;
      u[std::size_t(r.j - 1)] = -1;
      break;
    case Root::Kind::Short:
      u[std::size_t(r.i - 1)] = 1;
      break;
    case Root::Kind::Sum:
      u[std::size_t(r.i - 1)] = 1;
      u[std::size_t(r.j - 1)] = 1;
      break;
    case Root::Kind::Long2:
      u[std::size_t(r.i - 1)] = 2;
      break;
  }
  if (r.negative)
    for (auto& x : u) x = -x;
  return u;
}
}  // namespace

Weight lambda_circ(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("lambda_circ: k out of range");
  Weight w{Family::B, n, std::vector<int>(std::size_t(n), 0)};
  for (int i = 1; i <= k; ++i) w.u[std::size_t(i - 1)] = 1;
  return w;  // lambda_k = u_1+...+u_k; for k = n this is 2*lambda_n
}

Weight lambda_sp(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("lambda_sp: k out of range");
  Weight w{Family::C, n, std::vector<int>(std::size_t(n), 0)};
  if (k == 0) return w;
  // Solve <w, beta_i^vee> = delta_{ik} for the u-coordinates:
  //   beta_i = u_i - u_{i+1} (i < n):  w_i - w_{i+1} = delta_{ik}
  //   beta_n = 2 u_n:                  w_n = delta_{nk}
  // Back-substitution from the last coordinate.
  w.u[std::size_t(n - 1)] = (k == n) ? 1 : 0;
  for (int i = n - 1; i >= 1; --i)
    w.u[std::size_t(i - 1)] = w.u[std::size_t(i)] + (i == k ? 1 : 0);
  return w;
}

int pairing(const Weight& w, int i) {
  const int n = w.n;
  if (i < 1 || i > n) throw std::invalid_argument("pairing: index out of range");
  if (i < n) return w.u[std::size_t(i - 1)] - w.u[std::size_t(i)];
  if (w.family == Family::B) return 2 * w.u[std::size_t(n - 1)];  // alpha_n = u_n, short
  return w.u[std::size_t(n - 1)];                                 // beta_n = 2u_n, long
}

std::vector<int> twice_alpha_coords(const Weight& w) {
  const int n = w.n;
  std::vector<int> m(std::size_t(n), 0);
  // prefix sums give m_j for j < n in both families
  int acc = 0;
  for (int j = 1; j <= n - 1; ++j) {
    acc += w.u[std::size_t(j - 1)];
    m[std::size_t(j - 1)] = 2 * acc;
  }
  if (w.family == Family::B) {
    m[std::size_t(n - 1)] = 2 * (acc + w.u[std::size_t(n - 1)]);
  } else {
    // u_n coefficient: 2 m_n - m_{n-1} = w_n, so 2 m_n = w_n + m_{n-1}
    int prev2 = (n >= 2) ? m[std::size_t(n - 2)] : 0;  // 2 m_{n-1}, always even here
    m[std::size_t(n - 1)] = w.u[std::size_t(n - 1)] + prev2 / 2;
  }
  return m;
}

std::vector<int> alpha_coords(const Weight& w) {
  auto m2 = twice_alpha_coords(w);
  std::vector<int> m(m2.size());
  for (std::size_t i = 0; i < m2.size(); ++i) {
    if (m2[i] % 2 != 0)
      throw std::domain_error("alpha_coords: weight has half-integral coordinates");
    m[i] = m2[i] / 2;
  }
  return m;
}

std::vector<int> monomial_degree(const std::vector<std::pair<Root, int>>& factors) {
  if (factors.empty()) return {};
  std::vector<int> d(std::size_t(factors.front().first.n), 0);
  for (const auto& [root, exp] : factors) {
    auto c = alpha_coords(root);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] += exp * c[i];
  }
  return d;
}

Weight subtract_roots(const Weight& w, const std::vector<int>& simple_indices) {
  Weight out = w;
  for (int i : simple_indices) {
    if (i < 1 || i > w.n) throw std::invalid_argument("subtract_roots: bad index");
    if (i < w.n) {
      out.u[std::size_t(i - 1)] -= 1;
      out.u[std::size_t(i)] += 1;
    } else if (w.family == Family::B) {
      out.u[std::size_t(i - 1)] -= 1;
    } else {
      out.u[std::size_t(i - 1)] -= 2;
    }
  }
  return out;
}

}  // namespace weylchain
