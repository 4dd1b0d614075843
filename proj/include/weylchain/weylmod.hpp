#pragma once

// The paper's modules, realized computationally: the integral form
// A_Z(vbar+) inside wedge^k Z^N, its reduction V_{F_p}(lambda), the spun
// Grassmann module W_k, the nucleus, the chain M_0 < ... < M_k, and the
// verification suites built on them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weylchain/chevalley.hpp"
#include "weylchain/exactlin.hpp"
#include "weylchain/report.hpp"
#include "weylchain/rootdata.hpp"
#include "weylchain/wedge.hpp"

namespace weylchain {

std::vector<long> fp_apply(const FpMatrix& m, const std::vector<long>& x);
std::vector<long> fp_apply(const SparseIntMat& m, const std::vector<long>& x, long p);
std::vector<Int> int_apply(const SparseIntMat& m, const std::vector<Int>& x);

// A space of known dimension with the generator action in its own
// coordinates.  Matrices act on column vectors.
struct FpAction {
  long p = 2;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<FpMatrix> gens;

  const FpMatrix* find(const std::string& label) const;
};

// Worklist spinning: smallest generator-stable subspace containing seeds.
FpSubspace spin(const std::vector<std::vector<long>>& seeds, const FpAction& act);
FpSubspace spin_ambient(const std::vector<std::vector<long>>& seeds,
                        const std::vector<Operator>& gens, long p, std::size_t ambient);

// Restriction of ambient generators to a generator-stable subspace,
// expressed in the subspace's RREF-basis coordinates.  Throws
// ContainmentError if some generator leaves the subspace.
FpAction restrict_action(const std::vector<Operator>& gens, const FpSubspace& sub, long p);
FpAction restrict_action(const FpAction& act, const FpSubspace& sub);

// Coordinates of v in the RREF basis of sub; throws if not a member.
std::vector<long> sub_coords(const FpSubspace& sub, const std::vector<long>& v);

// Quotient of an action by a generator-stable subspace; coordinates are
// the non-pivot positions of sub.  project maps vectors, lift sections.
struct QuotientAction {
  FpAction action;
  std::vector<std::size_t> coord_positions;  // ambient positions kept
  FpSubspace sub;                            // what was quotiented out
};
QuotientAction quotient_action(const FpAction& act, const FpSubspace& sub);
std::vector<long> quotient_project(const QuotientAction& q, const std::vector<long>& v);
std::vector<long> quotient_lift(const QuotientAction& q, const std::vector<long>& v);

struct GeneratedModule {
  Family family = Family::B;
  int n = 0, k = 0;
  long p = 2;  // 0 means the rational module, held as a lattice
  std::size_t ambient_dim = 0;
  FpSubspace basis;        // p != 0
  IntLattice zbasis;       // p == 0
  FpAction action;         // restricted action in basis coordinates (p != 0)
  std::vector<long> cyclic_gen;

  std::size_t dim() const { return p == 0 ? zbasis.rank() : basis.dim(); }
};

struct WeylModule {
  Family family = Family::B;
  int n = 0, k = 0;
  long p = 2;
  std::size_t ambient_dim = 0;
  IntLattice lattice;   // A_Z(vbar+) in HNF
  FpAction action;      // divided-power generators in lattice coordinates mod p
  std::vector<long> hw;          // coordinates of vbar+
  FpSubspace kernel;             // K_k = ker(phi_k)

  std::size_t dim() const { return lattice.rank(); }
  // phi_k: lattice coordinates -> ambient wedge coordinates mod p
  std::vector<long> phi(const std::vector<long>& coords) const;
  FpSubspace phi_image(const FpSubspace& sub) const;
  // applies the generator with the given label (throws if absent)
  std::vector<long> act(const std::string& label, const std::vector<long>& v) const;
};

// Closure of {vbar+} under the lowering divided powers, as an HNF lattice;
// stability under the raising side is verified afterwards (it is the
// defining invariant, not an input).  cache_dir, when nonempty, holds
// weylchain-lattice v1 files revalidated by the closure check on read.
IntLattice generate_lattice(Family f, int n, int k, const ScaleGuard& guard = {},
                            const std::string& cache_dir = {});

WeylModule weyl_module(Family f, int n, int k, long p, const ScaleGuard& guard = {},
                       const std::string& cache_dir = {});

// Spin of vbar+ in wedge^k F_p^N (p prime), or the lattice itself (p = 0).
GeneratedModule grassmann_module(Family f, int n, int k, long p,
                                 const ScaleGuard& guard = {},
                                 const std::string& cache_dir = {});

// Expected dimensions from the paper's formulas.
std::uint64_t dim_weyl(int n, int k);               // C(2n+1, k)
std::uint64_t dim_grassmann(Family f, int n, int k, long p);
std::uint64_t dim_kernel(int n, int k);             // C(2n+1, k-2), p = 2
std::uint64_t dim_nucleus(int n, int k);            // C(2n+1, k-1)

struct NucleusResult {
  FpSubspace spun;    // in Weyl-module coordinates
  FpSubspace image;   // phi of spun, in ambient wedge coordinates
  std::optional<FpSubspace> oracle;  // geometric construction (n <= 3)
  Report report;
};
// p = 2 only.  with_oracle enumerates all totally singular (k-1)-subspaces
// of the quadric and spans their nucleus-extended Grassmann images.
NucleusResult nucleus(const WeylModule& wm, bool with_oracle);

struct ChainResult {
  std::vector<FpSubspace> modules;  // M_0, ..., M_k in Weyl coordinates
  Report report;
};
ChainResult chain(const WeylModule& wm);

// Two actions made label-parallel: union of labels, zero where absent.
std::pair<FpAction, FpAction> align_actions(const FpAction& a, const FpAction& b);

struct GraphResult {
  bool is_iso = false;
  std::size_t dim_u = 0, dim_w = 0, dim_graph = 0;
  std::size_t dim_a = 0, dim_b = 0;  // ambient dims of the two sides
  FpSubspace graph;                  // subspace of F_p^{dim_a + dim_b}
};
// Spins (u + w) in the direct sum of the aligned actions; the result is
// the graph of the unique equivariant map when the dimensions certify it.
GraphResult parallel_spin(const FpAction& a, const std::vector<long>& u,
                          const FpAction& b, const std::vector<long>& w);
// Image of S (in a-coordinates) under the graph map.
FpSubspace transport(const GraphResult& g, const FpSubspace& s);

// Highest-weight precondition: every raising generator kills v, and the
// integer Cartan eigenvalues match the given weight.
bool is_highest_weight(const FpAction& act, const std::vector<long>& v);

// --- verification suites ---------------------------------------------------
Report verify_theorem2(int n, int k, const ScaleGuard& guard = {});   // nucleus dims + oracle
Report verify_theorem4(int n, int k, const ScaleGuard& guard = {});   // N_k iso V(lambda_{k-1}), K_k transport
Report verify_chain(int n, int k, const ScaleGuard& guard = {});      // Corollary 5 dims/quotients
Report verify_perfect(int n, int k, const ScaleGuard& guard = {});    // M_i/M_{i-1} iso Wsp_i (sigma-paired)
Report kernel_as_module(int n, int k, const ScaleGuard& guard = {});  // Proposition 24
Report lemma_suite(int n, int k, const ScaleGuard& guard = {});
Report sigma_suite(int n, int k, const ScaleGuard& guard = {});
Report splitting_decomposition(int n, int k, const ScaleGuard& guard = {});
Report verify_dims(int n, const ScaleGuard& guard = {},
                   const std::string& cache_dir = {});  // Eq. 2/3 + kernel/SNF cross-check

}  // namespace weylchain
