#include "weylchain/sublattice.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace weylchain {

namespace {

// right null space {x : m x = 0}
FpSubspace matrix_nullspace(const FpMatrix& m) {
  const long p = m.p();
  const std::size_t d = m.cols();
  // left null space of the matrix whose j-th row is the j-th column of m
  FpMatrix aug(p, d, m.rows() + d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t r = 0; r < m.rows(); ++r) aug.set(j, r, m.get(r, j));
    aug.set(j, m.rows() + j, 1);
  }
  std::size_t pivot = 0;
  for (std::size_t c = 0; c < m.rows() && pivot < d; ++c) {
    std::size_t r = pivot;
    while (r < d && aug.get(r, c) == 0) ++r;
    if (r == d) continue;
    aug.swap_rows(pivot, r);
    long v = aug.get(pivot, c);
    for (long t = 1; t < p; ++t)
      if ((t * v) % p == 1) { aug.scale_row(pivot, t); break; }
    for (std::size_t r2 = pivot + 1; r2 < d; ++r2) {
      long w = aug.get(r2, c);
      if (w != 0) aug.add_scaled_row(r2, pivot, p - w);
    }
    ++pivot;
  }
  FpSubspace out(p, d);
  for (std::size_t r = pivot; r < d; ++r) {
    std::vector<long> full = aug.row(r);
    out.insert(std::vector<long>(full.begin() + long(m.rows()), full.end()));
  }
  return out;
}

FpSubspace whole_space(long p, std::size_t d) {
  FpSubspace s(p, d);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<long> e(d, 0);
    e[i] = 1;
    s.insert(e);
  }
  return s;
}

std::vector<FpSubspace> keep_minimal(std::vector<FpSubspace> cands) {
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  std::vector<FpSubspace> out;
  for (const auto& c : cands) {
    bool minimal = true;
    for (const auto& o : cands)
      if (!(o == c) && c.contains(o)) { minimal = false; break; }
    if (minimal) out.push_back(c);
  }
  return out;
}

}  // namespace

FpSubspace primitive_space(const FpAction& act) {
  FpSubspace s = whole_space(act.p, act.dim);
  for (std::size_t i = 0; i < act.gens.size(); ++i) {
    const char c = act.labels[i].empty() ? '?' : act.labels[i][0];
    if (c != 'X' && c != 'U') continue;
    s = s.intersection(matrix_nullspace(act.gens[i]));
  }
  return s;
}

std::vector<FpSubspace> minimal_submodules(const FpAction& act, const ScaleGuard& guard) {
  if (act.p != 2) throw std::invalid_argument("minimal_submodules: characteristic 2 only");
  if (act.dim == 0) return {};
  FpSubspace prim = primitive_space(act);
  if (prim.dim() > guard.max_primitive_dim)
    throw ScaleError("primitive space dimension " + std::to_string(prim.dim()) +
                     " exceeds enumeration cap " + std::to_string(guard.max_primitive_dim));
  std::vector<FpSubspace> cands;
  const std::size_t d = prim.dim();
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << d); ++mask) {
    std::vector<long> v(act.dim, 0);
    for (std::size_t i = 0; i < d; ++i)
      if ((mask >> i) & 1u)
        for (std::size_t c = 0; c < act.dim; ++c)
          v[c] ^= prim.basis_rows()[i][c];
    cands.push_back(spin({v}, act));
  }
  return keep_minimal(std::move(cands));
}

std::vector<FpSubspace> minimal_submodules_bruteforce(const FpAction& act) {
  if (act.p != 2) throw std::invalid_argument("brute force socle: characteristic 2 only");
  if (act.dim > 20) throw ScaleError("brute force socle limited to dimension 20");
  std::vector<FpSubspace> cands;
  for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << act.dim); ++mask) {
    std::vector<long> v(act.dim, 0);
    for (std::size_t i = 0; i < act.dim; ++i) v[i] = long((mask >> i) & 1u);
    cands.push_back(spin({v}, act));
  }
  return keep_minimal(std::move(cands));
}

SubmoduleLattice full_lattice(const FpAction& act, const ScaleGuard& guard) {
  std::set<FpSubspace> nodes;
  nodes.insert(FpSubspace(act.p, act.dim));
  nodes.insert(whole_space(act.p, act.dim));

  auto guard_size = [&] {
    if (nodes.size() > guard.max_nodes)
      throw ScaleError("submodule lattice exceeds node cap " +
                       std::to_string(guard.max_nodes));
  };

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<FpSubspace> snapshot(nodes.begin(), nodes.end());
    for (const auto& node : snapshot) {
      if (node.dim() == act.dim) continue;
      QuotientAction q = quotient_action(act, node);
      for (const auto& m : minimal_submodules(q.action, guard)) {
        FpSubspace lifted = node;
        for (const auto& row : m.basis_rows()) lifted.insert(quotient_lift(q, row));
        if (nodes.insert(lifted).second) changed = true;
        guard_size();
      }
    }
    // close under sums and intersections
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<FpSubspace> snap(nodes.begin(), nodes.end());
      for (std::size_t i = 0; i < snap.size(); ++i)
        for (std::size_t j = i + 1; j < snap.size(); ++j) {
          if (nodes.insert(snap[i].sum(snap[j])).second) grew = changed = true;
          if (nodes.insert(snap[i].intersection(snap[j])).second) grew = changed = true;
          guard_size();
        }
    }
  }

  SubmoduleLattice lat;
  lat.nodes.assign(nodes.begin(), nodes.end());
  std::stable_sort(lat.nodes.begin(), lat.nodes.end(),
                   [](const FpSubspace& a, const FpSubspace& b) { return a.dim() < b.dim(); });
  for (const auto& nd : lat.nodes) lat.dims.push_back(nd.dim());
  for (int i = 0; i < int(lat.nodes.size()); ++i)
    for (int j = 0; j < int(lat.nodes.size()); ++j) {
      if (i == j || lat.nodes[std::size_t(j)].dim() <= lat.nodes[std::size_t(i)].dim() ||
          !lat.nodes[std::size_t(j)].contains(lat.nodes[std::size_t(i)]))
        continue;
      bool covering = true;
      for (int m = 0; m < int(lat.nodes.size()) && covering; ++m) {
        if (m == i || m == j) continue;
        const auto& mid = lat.nodes[std::size_t(m)];
        if (mid.dim() > lat.nodes[std::size_t(i)].dim() &&
            mid.dim() < lat.nodes[std::size_t(j)].dim() &&
            mid.contains(lat.nodes[std::size_t(i)]) && lat.nodes[std::size_t(j)].contains(mid))
          covering = false;
      }
      if (covering) lat.edges.push_back({i, j});
    }
  return lat;
}

std::string to_dot(const SubmoduleLattice& lat) {
  std::ostringstream os;
  os << "digraph submodules {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < lat.nodes.size(); ++i)
    os << "  n" << i << " [label=\"dim " << lat.dims[i] << "\"];\n";
  for (const auto& [a, b] : lat.edges) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

Report verify_uniqueness(int n, int k, const ScaleGuard& guard) {
  Report rep;
  rep.suite = "uniqueness";
  rep.params = {Family::B, n, k, 2};
  if (k > 4) throw std::invalid_argument("uniqueness analysis covers k <= 4 only");

  WeylModule wm = weyl_module(Family::B, n, k, 2, guard);
  SubmoduleLattice lat = full_lattice(wm.action, guard);
  {
    std::ostringstream os;
    for (std::size_t i = 0; i < lat.dims.size(); ++i) os << (i ? "," : "") << lat.dims[i];
    rep.add("lattice-dims", "dimensions of all submodules (informational)", os.str(), os.str());
  }

  // chains 0 < N_1 < ... < N_k = V with dim N_i = C(2n+1, i-1)
  std::vector<std::uint64_t> want;
  for (int i = 0; i < k; ++i) want.push_back(binom(2 * n + 1, i));
  std::function<std::size_t(const FpSubspace&, std::size_t)> count =
      [&](const FpSubspace& below, std::size_t level) -> std::size_t {
    if (level == want.size()) return 1;  // the chain always tops out at the full module
    std::size_t total = 0;
    for (const auto& node : lat.nodes)
      if (node.dim() == want[level] && node.contains(below)) total += count(node, level + 1);
    return total;
  };
  std::size_t chains = count(FpSubspace(2, wm.dim()), 0);
  rep.add("unique-chain", "number of submodule chains realizing the paper's dimension series",
          "1", std::to_string(chains));

  {  // degree-2 symplectic Grassmann socle dichotomy
    GeneratedModule wsp = grassmann_module(Family::C, n, 2, 2, guard);
    auto mins = minimal_submodules(wsp.action, guard);
    if (n % 2 == 0) {
      bool ok = mins.size() == 1 && mins[0].dim() == 1;
      rep.add_flag("wsp2-socle", "n even: unique minimal submodule of dimension 1", ok);
    } else {
      bool ok = mins.size() == 1 && mins[0].dim() == wsp.dim();
      rep.add_flag("wsp2-socle", "n odd: the degree-2 symplectic Grassmann module is irreducible",
                   ok);
    }
  }

  if (n == 3 && k == 3) {
    // the degree-3 Grassmann module (dim 28) does not split into two
    // 14-dimensional submodules: its lattice has only one 14-dim node
    GeneratedModule g = grassmann_module(Family::B, 3, 3, 2, guard);
    SubmoduleLattice glat = full_lattice(g.action, guard);
    std::size_t count14 = 0;
    for (auto d : glat.dims)
      if (d == 14) ++count14;
    rep.add("no-splitting", "14-dimensional submodules of the degree-3 Grassmann module", "1",
            std::to_string(count14));
  }
  return rep;
}

Report socle_oracle_check(const FpAction& act, const std::string& tag) {
  Report rep;
  rep.suite = "socle-oracle";
  if (act.dim > 14) {
    rep.add_skipped("socle-" + tag, "brute force socle oracle", "dimension exceeds 14");
    return rep;
  }
  auto fast = minimal_submodules(act);
  auto brute = minimal_submodules_bruteforce(act);
  std::sort(fast.begin(), fast.end());
  std::sort(brute.begin(), brute.end());
  rep.add_flag("socle-" + tag,
               "primitive-space socle equals brute-force socle (" + tag + ")", fast == brute);
  return rep;
}

}  // namespace weylchain
