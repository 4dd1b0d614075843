#pragma once

// Submodule analysis: socle via primitive vectors, the full submodule
// lattice at desk scale, and the uniqueness-of-chain verification.

#include <string>
#include <vector>

#include "weylchain/exactlin.hpp"
#include "weylchain/report.hpp"
#include "weylchain/weylmod.hpp"

namespace weylchain {

// Common kernel of every raising divided power (labels X*/U*) of the action.
// Every nonzero submodule meets it, since the raising part acts nilpotently.
FpSubspace primitive_space(const FpAction& act);

// All minimal nonzero submodules, found by spinning every nonzero vector
// of the primitive space.  Complete; throws ScaleError past the cap.
std::vector<FpSubspace> minimal_submodules(const FpAction& act, const ScaleGuard& guard = {});

// Oracle for small modules: spin every nonzero vector of the whole space.
std::vector<FpSubspace> minimal_submodules_bruteforce(const FpAction& act);

struct SubmoduleLattice {
  std::vector<FpSubspace> nodes;               // sorted, deduplicated; 0 and full included
  std::vector<std::pair<int, int>> edges;      // covering pairs (lower, upper) by index
  std::vector<std::size_t> dims;
};

// All submodules, grown by lifting minimal submodules of successive
// quotients and closing under sums and intersections.
SubmoduleLattice full_lattice(const FpAction& act, const ScaleGuard& guard = {});

std::string to_dot(const SubmoduleLattice& lat);

// Exactly one maximal chain of submodules of V_{F_2}(lambda_k) realizes the
// dimensions 1, 2n+1, C(2n+1,2), ..., C(2n+1,k); includes the degree-2
// socle dichotomy (n even: one 1-dim minimal; n odd: irreducible) and, at
// (n,k) = (3,3), the non-splitting of the Grassmann module.
Report verify_uniqueness(int n, int k, const ScaleGuard& guard = {});

// Property check: primitive-space socle equals the brute-force socle.
Report socle_oracle_check(const FpAction& act, const std::string& tag);

}  // namespace weylchain
