#pragma once

#include <map>
#include <optional>

#include "group.hpp"

namespace crb {

// A simplex of the building: a strictly increasing chain of proper nonzero
// subspaces, stored as vertex ids into the owning Building, ascending by
// dimension. Never empty.
struct Flag {
  std::vector<int> verts;

  int size() const { return (int)verts.size(); }
  bool operator==(const Flag& o) const { return verts == o.verts; }
  bool operator<(const Flag& o) const {
    if (verts.size() != o.verts.size()) return verts.size() < o.verts.size();
    return verts < o.verts;
  }
};

// The flag complex of F_q^n: vertices are the proper nonzero subspaces,
// simplices the chains among them. Fully materialized, immutable.
class Building {
 public:
  Building(const Field& F, int n, long long cap_simplices);

  const Field& field() const { return *field_; }
  int n() const { return n_; }
  int dim() const { return n_ - 2; }

  const std::vector<Subspace>& vertices() const { return vertices_; }
  const Subspace& vertex(int id) const { return vertices_[id]; }
  int vertex_id(const Subspace& s) const;  // -1 when absent

  const std::vector<Flag>& flags() const { return flags_; }
  int flag_id(const Flag& f) const;  // -1 when absent
  long long chamber_count() const { return chamber_count_; }

  std::vector<int> flag_type(const Flag& f) const;  // member dimensions, ascending
  bool flag_subset(const Flag& a, const Flag& b) const;

  // dim(V_i cap V_j), memoized.
  int dim_intersect(int va, int vb) const;

  bool opposite(const Flag& a, const Flag& b) const;

  // Vertex image table of a building automorphism; duality makes it
  // dimension-complementing, inner and Frobenius keep types.
  std::vector<int> vertex_map(const BuildingAuto& a) const;
  Flag apply_map(const std::vector<int>& vmap, const Flag& f) const;

  // Setwise stabilizer test: g V_i = V_i for every member.
  bool stabilizes(const Mat& g, const Flag& f) const;
  bool group_stabilizes(const MatGroup& h, const Flag& f) const;

 private:
  const Field* field_;
  int n_;
  std::vector<Subspace> vertices_;
  std::map<Subspace, int> vertex_index_;
  std::vector<Flag> flags_;
  std::map<std::vector<int>, int> flag_index_;
  std::vector<std::vector<int>> above_;  // vertex id -> strictly larger comparable vertex ids
  long long chamber_count_ = 0;
  mutable std::vector<signed char> meet_dim_;  // lazily filled pair table
};

// Opposition via the common-Levi definition, decided inside a finite ambient
// group given by its element list: Stab(f) cap Stab(g) must equal the
// simultaneous stabilizer of the transversal graded pieces. Independent of
// Building::opposite and used to validate it.
bool common_levi_oracle(const Building& b, const Flag& f, const Flag& g, const std::vector<Mat>& ambient);

// R-parabolic data read off a diagonal cocharacter: the flag of weight-level
// sums (largest weight first) and the coordinate blocks of the Levi.
struct CocharParabolic {
  std::vector<Subspace> chain;                 // ascending, empty for a central cocharacter
  std::vector<std::vector<int>> levi_blocks;   // coordinate classes by descending weight
};

CocharParabolic cocharacter_parabolic(const Field& F, int n, const std::vector<long long>& weights);
bool limit_exists(const Field& F, const std::vector<long long>& weights, const Mat& g);      // g in P_lambda
bool centralizes_cochar(const Field& F, const std::vector<long long>& weights, const Mat& g);  // g in L_lambda
bool limit_is_identity(const Field& F, const std::vector<long long>& weights, const Mat& g);  // g in R_u(P_lambda)

// Levi sphere s(L) of the decomposition F_q^n = D_1 + ... + D_s: all flags
// whose members are partial sums of the pieces. Pieces must be independent
// and spanning.
std::vector<int> levi_sphere_flags(const Building& b, const std::vector<Subspace>& pieces);
std::vector<Subspace> standard_blocks(const Field& F, int n, const std::vector<int>& sizes);
std::vector<int> apartment_flags(const Building& b);

}  // namespace crb
