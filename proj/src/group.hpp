#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "subspace.hpp"

namespace crb {

// Finite matrix subgroup of GL_n(F_q), closed element set plus the
// generators it was built from. Immutable after construction.
struct MatGroup {
  int n = 0;
  const Field* field = nullptr;
  std::vector<Mat> generators;
  std::vector<Mat> elements;  // sorted by packed code
  std::unordered_set<std::uint64_t> codes;

  long long order() const { return (long long)elements.size(); }
  bool contains(const Mat& g) const { return codes.count(encode_mat(*field, g)) != 0; }
};

MatGroup closure(const Field& F, int n, std::vector<Mat> generators, long long cap);
MatGroup group_from_elements(const Field& F, int n, std::vector<Mat> elements, std::vector<Mat> generators);
MatGroup trivial_group(const Field& F, int n);

long long gl_order(const Field& F, int n, long long cap);
std::vector<Mat> gl_elements(const Field& F, int n, long long cap);

// Greedy small generating set for a closed element list.
std::vector<Mat> small_generating_set(const Field& F, int n, const std::vector<Mat>& elements);

MatGroup normalizer(const Field& F, const std::vector<Mat>& ambient, const MatGroup& h);
MatGroup centralizer(const Field& F, const std::vector<Mat>& ambient, const MatGroup& h);
bool is_normal_in(const Field& F, const MatGroup& n, const MatGroup& h);

// Building automorphism in the normal form  x -> g . frob^r(dual^e(x)) . g^-1.
// Plain inner, Frobenius and duality (inverse-transpose) automorphisms are
// the cases where the other two parts are trivial; composites cover twisted
// endomorphisms such as Frobenius followed by duality.
struct BuildingAuto {
  Mat inner;  // rows == 0 means identity
  int frob = 0;
  bool dual = false;

  static BuildingAuto inner_auto(Mat g) {
    BuildingAuto a;
    a.inner = std::move(g);
    return a;
  }
  static BuildingAuto frobenius(int r) {
    BuildingAuto a;
    a.frob = r;
    return a;
  }
  static BuildingAuto duality() {
    BuildingAuto a;
    a.dual = true;
    return a;
  }

  bool has_inner() const { return inner.rows > 0; }
  bool type_preserving() const { return !dual; }
  bool is_identity_kind() const { return !has_inner() && frob == 0 && !dual; }
};

Mat apply_auto(const Field& F, const BuildingAuto& a, const Mat& g);
Subspace apply_auto(const Field& F, const BuildingAuto& a, const Subspace& u);
BuildingAuto compose(const Field& F, const BuildingAuto& a, const BuildingAuto& b);  // a after b

// The acting set Gamma, given by generators. Flag stability is tested
// generator by generator; stabilizers are subgroups, so this equals
// stability under the whole generated group.
struct AutoSet {
  std::vector<BuildingAuto> autos;
  std::string description;

  bool type_preserving() const {
    for (const auto& a : autos)
      if (!a.type_preserving()) return false;
    return true;
  }
};

AutoSet inner_autos(const MatGroup& h, const std::string& description = "");

// sigma(H) == H as a set.
bool is_auto_stable_group(const Field& F, const MatGroup& h, const BuildingAuto& a);

// Subgroup corpus: all cyclic and 2-generated subgroups of the supplied
// ambient group, deduplicated by element set and canonically ordered.
struct SubgroupRecord {
  std::vector<Mat> generators;  // first generating set found in scan order
  MatGroup group;
};

std::vector<SubgroupRecord> enumerate_subgroups(const Field& F, int n, const std::vector<Mat>& ambient,
                                                long long group_cap);

}  // namespace crb
