#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "crengine.hpp"

namespace crb {

using Bigint = boost::multiprecision::cpp_int;
using IntMat = std::vector<std::vector<Bigint>>;

// Abstract simplicial complex over indexed vertices, face-closed by
// construction, simplices sorted within each dimension.
struct SimplicialComplex {
  int num_vertices = 0;
  std::vector<std::vector<std::vector<int>>> simplices;  // [dim][i] = ascending vertex tuple

  int dim() const { return (int)simplices.size() - 1; }
  bool empty() const { return num_vertices == 0; }
  std::vector<long long> face_counts() const;
  long long euler_reduced_from_faces() const;  // sum (-1)^i f_i  -  1
};

// Order complex of the stable poset: vertices are the stable flags, faces
// the chains under subflag inclusion. For a type-preserving action this is
// the barycentric subdivision of the stable subcomplex.
SimplicialComplex order_complex(const FixedComplex& fc);
SimplicialComplex order_complex_of_flags(const Building& b, const std::vector<int>& flag_ids);

// The building itself as a complex (vertices = building vertices, simplices
// = flags), without subdivision.
SimplicialComplex flag_complex(const Building& b);

struct SnfResult {
  std::vector<Bigint> diagonal;  // nonzero invariant factors, divisibility chain
  long long rank = 0;
};

// Exact integer Smith normal form. When u and v are supplied they receive
// unimodular transforms with u * a * v = smith(a).
SnfResult smith_normal_form(IntMat a);
SnfResult smith_normal_form_with_transforms(IntMat a, IntMat& u, IntMat& v);

struct HomologyProfile {
  bool empty_complex = true;
  std::vector<long long> reduced_betti;       // degrees 0..dim
  std::vector<std::vector<Bigint>> torsion;   // nontrivial invariant factors per degree
  long long euler_reduced = 0;

  bool torsion_free() const {
    for (const auto& t : torsion)
      if (!t.empty()) return false;
    return true;
  }
  bool all_zero() const {
    for (long long b : reduced_betti)
      if (b != 0) return false;
    return torsion_free();
  }
};

HomologyProfile reduced_homology(const SimplicialComplex& sc);

enum class TopoTag { PointLike, SphereBouquetLike, Other };

struct TopoClass {
  TopoTag tag = TopoTag::Other;
  int degree = -1;       // sphere dimension when SphereBouquetLike
  long long count = 0;   // number of spheres in the bouquet

  bool operator==(const TopoClass& o) const { return tag == o.tag && degree == o.degree && count == o.count; }
};

// Homology-level classification: trivial reduced homology is point-like;
// torsion-free homology concentrated in the poset dimension looks like a
// bouquet of spheres of that dimension. Necessary conditions only.
TopoClass classify(const HomologyProfile& hp, int dim_fixed);

const char* topo_tag_name(TopoTag t);

struct LeviSphereSearch {
  enum class Status { Found, NotFound, Inconclusive };
  Status status = Status::NotFound;
  std::vector<Subspace> decomposition;  // filled when found
  long long candidates_tried = 0;
};

// Search for a Levi sphere inside the stable set with the same dimension as
// the stable poset: decompositions of F_q^n into poset_dim + 2 pieces whose
// partial-sum flags are all stable. Cap overruns report inconclusive, never
// absence.
LeviSphereSearch levi_sphere_containment(const FixedComplex& fc, long long cap_candidates);

}  // namespace crb
