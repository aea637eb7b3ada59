#pragma once

#include "building.hpp"

namespace crb {

// Gamma-stable simplices of a building. For type-preserving Gamma this is a
// subcomplex; with duality present it is only a poset of stable simplices
// (the vertex set of the corresponding subcomplex of the barycentric
// subdivision).
struct FixedComplex {
  const Building* building = nullptr;
  AutoSet autos;
  std::vector<int> stable;  // flag ids, ascending
  bool type_preserving = true;

  bool is_stable(int flag_id) const;
  int poset_dim() const;  // longest chain of stable flags minus one; -1 when empty
};

FixedComplex fixed_complex(const Building& b, const AutoSet& autos);

struct CrVerdict {
  bool cr = true;
  // stable flag id -> least stable opposite, filled when cr
  std::vector<std::pair<int, int>> witness;
  std::optional<int> counterexample;  // first stable flag with no stable opposite
};

CrVerdict is_cr(const FixedComplex& fc);

// sigma-variant decision: the fixed complex of <H, sigma> decides, and the
// literal definition (every sigma-stable parabolic flag containing H has a
// sigma-stable opposite whose stabilizer contains H) is recomputed without
// the fixed-complex machinery as a cross-check.
struct SigmaCrResult {
  FixedComplex fc;
  CrVerdict building;
  bool definitional = true;
  bool agree = true;
  bool sigma_stable_subgroup = true;

  bool cr() const { return building.cr; }
};

SigmaCrResult sigma_cr(const Building& b, const MatGroup& h, const BuildingAuto& sigma);

// Decision for subgroups of the finite group GL_n(F_q) inside the rational
// building over F_q, optionally cross-checked in the extension building over
// F_{q^r} with the q-power Frobenius adjoined.
struct GsigmaCrResult {
  CrVerdict base;
  bool has_extension = false;
  bool extension_cr = false;
  bool extension_definitional = false;
  bool agree = true;

  bool cr() const { return base.cr; }
};

GsigmaCrResult gsigma_cr(const MatGroup& h, int r, long long cap_order, long long cap_simplices);

struct CliffordResult {
  CrVerdict h_verdict;
  CrVerdict n_verdict;
  bool consistent = true;  // cr(H) implies cr(N)
};

CliffordResult clifford_check(const Building& b, const MatGroup& h, const MatGroup& n);

// Reductive subgroup K given as block general linear groups, optionally
// conjugated. The k-building X(K) is the join of the block buildings.
struct LeviBlockGroup {
  std::vector<int> sizes;
  std::optional<Mat> conj;
};

struct RelativeCrResult {
  bool direct = true;        // cocharacters of K, rational range
  bool via_building = true;  // H acting on the join building X(K)
  bool agree = true;
  long long k_simplices = 0;
  long long k_stable = 0;
  std::optional<std::vector<long long>> direct_counterexample_weights;
};

RelativeCrResult relative_cr(const Field& F, int n, const MatGroup& h, const LeviBlockGroup& k,
                             long long cap_order);

// Sigma-cr for an arbitrary automorphism set: fixed complex of
// <Sigma, H> plus the literal stable-parabolic check.
struct AutoCrResult {
  FixedComplex fc;
  CrVerdict building;
  bool definitional = true;
  bool agree = true;

  bool cr() const { return building.cr; }
};

AutoCrResult sigma_variant_cr(const Building& b, const MatGroup& h, const AutoSet& sigma);

struct TauAttempt {
  int r = 0;
  bool h_cr = false;
  bool normalizer_cr = false;
  long long normalizer_order = 0;
};

struct TauSearchResult {
  std::optional<int> found;
  std::vector<TauAttempt> attempts;
};

// Smallest r <= r_max with cr(H over F_{q^r}) == cr(N_{GL_n(F_{q^r})}(H)).
TauSearchResult tau_search(const MatGroup& h, int r_max, long long cap_order, long long cap_simplices);

struct QuotientTransferResult {
  CrVerdict h_verdict;
  CrVerdict saturated_verdict;
  bool consistent = true;
  long long saturated_order = 0;
};

// Scalar saturation Z.H never changes the verdict: scalars stabilize every
// flag, so the two fixed complexes coincide. Both sides are still computed.
QuotientTransferResult quotient_transfer_check(const Building& b, const MatGroup& h, long long cap_order);

}  // namespace crb
