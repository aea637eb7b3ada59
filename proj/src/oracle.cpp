#include "oracle.hpp"

#include <algorithm>

namespace crb {

SubmoduleLattice invariant_subspaces(const Field& F, const MatGroup& h, long long cap_subspaces) {
  int n = h.n;
  long long total = 0;
  for (int d = 0; d <= n; ++d) total += gaussian_binomial(n, d, F.q(), cap_subspaces);
  if (total > cap_subspaces)
    throw Error(Errc::cap_exceeded, "subspace count exceeds cap " + std::to_string(cap_subspaces));

  const auto& gens = h.generators.empty() ? h.elements : h.generators;
  SubmoduleLattice lat;
  for (int d = 0; d <= n; ++d) {
    for (auto& u : subspaces_of_dim(F, n, d)) {
      bool inv = true;
      for (const auto& g : gens)
        if (!(apply_matrix(F, g, u) == u)) {
          inv = false;
          break;
        }
      if (inv) lat.members.push_back(std::move(u));
    }
  }
  std::sort(lat.members.begin(), lat.members.end());

  // the invariant subspaces must be closed under sum and intersection
  for (size_t i = 0; i < lat.members.size(); ++i)
    for (size_t j = i + 1; j < lat.members.size(); ++j) {
      Subspace s = sum(F, lat.members[i], lat.members[j]);
      Subspace m = intersect(F, lat.members[i], lat.members[j]);
      if (!std::binary_search(lat.members.begin(), lat.members.end(), s) ||
          !std::binary_search(lat.members.begin(), lat.members.end(), m))
        throw Error(Errc::invariant, "invariant subspaces are not closed under sum/intersection");
    }

  for (size_t i = 0; i < lat.members.size(); ++i)
    for (size_t j = 0; j < lat.members.size(); ++j) {
      if (i == j) continue;
      if (lat.members[i].dim() >= lat.members[j].dim()) continue;
      if (!contains(F, lat.members[j], lat.members[i])) continue;
      bool covering = true;
      for (size_t k = 0; k < lat.members.size() && covering; ++k) {
        if (k == i || k == j) continue;
        if (lat.members[k].dim() <= lat.members[i].dim() || lat.members[k].dim() >= lat.members[j].dim()) continue;
        if (contains(F, lat.members[k], lat.members[i]) && contains(F, lat.members[j], lat.members[k]))
          covering = false;
      }
      if (covering) lat.hasse.emplace_back((int)i, (int)j);
    }
  return lat;
}

bool is_semisimple_module(const Field& F, const MatGroup& h, long long cap_subspaces) {
  SubmoduleLattice lat = invariant_subspaces(F, h, cap_subspaces);
  int n = h.n;
  for (const auto& w : lat.members) {
    bool complemented = false;
    for (const auto& c : lat.members) {
      if (w.dim() + c.dim() != n) continue;
      if (intersect(F, w, c).dim() == 0) {
        complemented = true;
        break;
      }
    }
    if (!complemented) return false;
  }
  return true;
}

}  // namespace crb
