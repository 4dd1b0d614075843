#pragma once

// Exterior powers of the natural modules, with subset bases in
// colexicographic order, the derivation action, and exact divided powers.

#include <cstdint>
#include <string>
#include <vector>

#include "weylchain/chevalley.hpp"
#include "weylchain/rootdata.hpp"

namespace weylchain {

std::uint64_t binom(int n, int k);

// Colex rank of a strictly increasing 0-based k-subset of {0..N-1}:
// rank(J) = sum_m C(j_m, m) for m = 1..k.  Ranks run over [0, C(N,k)).
std::size_t colex_rank(const std::vector<int>& subset);
std::vector<int> colex_unrank(std::size_t rank, int k);

// Derivation lift of g in End(Z^N) to End(wedge^k Z^N):
// g(v1^...^vk) = sum_t v1^...^g(vt)^...^vk.
SparseIntMat wedge_lift(const SparseIntMat& g, int k);

// Smallest t >= 1 with m^t = 0, or cap+1 when none up to the cap.
int nilpotency_index(const SparseIntMat& m, int cap);

enum class GenSet { All, Lowering, Raising };

// All nonzero divided powers X^t/t!, Y^t/t! of the Chevalley generators,
// lifted to wedge^k of the natural module (dimension 2n+1 for B, 2n for C),
// in a fixed deterministic order.  Each divided power is produced by
// the exact recursion D_t = (D_{t-1} X) / t, which must divide evenly.
std::vector<Operator> wedge_generators(Family f, int n, int k, GenSet which = GenSet::All);

// Cartan generators H_i (resp. C_i) lifted to wedge^k.
std::vector<Operator> wedge_cartan(Family f, int n, int k);

}  // namespace weylchain
