#pragma once

#include <vector>

#include "matrix.hpp"

namespace crb {

// Subspace of F_q^n held as its RREF basis with no zero rows. RREF is a
// canonical form, so equality of subspaces is plain structural equality and
// subspaces can be ordered and hashed.
struct Subspace {
  int ambient = 0;
  Mat basis;  // dim x ambient, RREF, full rank

  int dim() const { return basis.rows; }

  bool operator==(const Subspace& o) const { return ambient == o.ambient && basis == o.basis; }
  bool operator<(const Subspace& o) const {
    if (ambient != o.ambient) return ambient < o.ambient;
    if (dim() != o.dim()) return dim() < o.dim();
    return basis.a < o.basis.a;
  }
};

Subspace subspace_from_rows(const Field& F, int ambient, const Mat& rows);
Subspace zero_subspace(int ambient);
Subspace full_space(int ambient);
Subspace span_of_coords(int ambient, const std::vector<int>& coords);

Subspace sum(const Field& F, const Subspace& a, const Subspace& b);
Subspace intersect(const Field& F, const Subspace& a, const Subspace& b);
bool contains(const Field& F, const Subspace& a, const Subspace& b);  // a >= b

// Orthogonal complement with respect to the standard dot form.
Subspace annihilator(const Field& F, const Subspace& a);

// Image g . U for column vectors, i.e. row space of basis * g^T.
Subspace apply_matrix(const Field& F, const Mat& g, const Subspace& u);
Subspace apply_frobenius(const Field& F, const Subspace& u, int r);
Subspace map_subspace(const Embedding& e, const Subspace& u);

// All subspaces of the given dimension, canonically ordered.
std::vector<Subspace> subspaces_of_dim(const Field& F, int ambient, int d);

// Gaussian binomial [n choose d]_q; throws cap_exceeded above the cap.
long long gaussian_binomial(long long n, long long d, long long q, long long cap);

}  // namespace crb
