#pragma once

#include "group.hpp"

namespace crb {

// Lattice of H-invariant subspaces of the natural module F_q^n, found by
// exhaustive scan. Kept deliberately brute force: it is the ground truth the
// building-side decisions are checked against.
struct SubmoduleLattice {
  std::vector<Subspace> members;           // sorted; always holds 0 and F_q^n
  std::vector<std::pair<int, int>> hasse;  // covering pairs (lower, upper) as indices
};

SubmoduleLattice invariant_subspaces(const Field& F, const MatGroup& h, long long cap_subspaces);

// The natural module is semisimple iff every invariant subspace has an
// invariant complement.
bool is_semisimple_module(const Field& F, const MatGroup& h, long long cap_subspaces);

}  // namespace crb
