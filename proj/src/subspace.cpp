#include "subspace.hpp"

#include <algorithm>

namespace crb {

Subspace subspace_from_rows(const Field& F, int ambient, const Mat& rows) {
  if (rows.cols != ambient) throw Error(Errc::invalid_argument, "basis width does not match ambient dimension");
  auto [red, rk] = rref(F, rows);
  Subspace s;
  s.ambient = ambient;
  s.basis = Mat(rk, ambient);
  for (int i = 0; i < rk; ++i)
    for (int j = 0; j < ambient; ++j) s.basis.at(i, j) = red.at(i, j);
  return s;
}

Subspace zero_subspace(int ambient) {
  Subspace s;
  s.ambient = ambient;
  s.basis = Mat(0, ambient);
  return s;
}

Subspace full_space(int ambient) {
  Subspace s;
  s.ambient = ambient;
  s.basis = Mat::identity(ambient);
  return s;
}

Subspace span_of_coords(int ambient, const std::vector<int>& coords) {
  Subspace s;
  s.ambient = ambient;
  // sorted coordinate rows are already RREF
  std::vector<int> sorted = coords;
  std::sort(sorted.begin(), sorted.end());
  Mat canon((int)sorted.size(), ambient);
  for (size_t i = 0; i < sorted.size(); ++i) canon.at((int)i, sorted[i]) = 1;
  s.basis = canon;
  return s;
}

static void check_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) throw Error(Errc::invalid_argument, "subspaces live in different ambient spaces");
}

Subspace sum(const Field& F, const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  Mat stacked(a.dim() + b.dim(), a.ambient);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.ambient; ++j) stacked.at(i, j) = a.basis.at(i, j);
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < a.ambient; ++j) stacked.at(a.dim() + i, j) = b.basis.at(i, j);
  return subspace_from_rows(F, a.ambient, stacked);
}

Subspace annihilator(const Field& F, const Subspace& a) {
  Subspace s;
  s.ambient = a.ambient;
  s.basis = kernel_basis(F, a.basis);
  return s;
}

Subspace intersect(const Field& F, const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  // (A + B)^perp = A^perp cap B^perp, and the dot form is non-degenerate
  return annihilator(F, sum(F, annihilator(F, a), annihilator(F, b)));
}

bool contains(const Field& F, const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  if (b.dim() > a.dim()) return false;
  return sum(F, a, b).dim() == a.dim();
}

Subspace apply_matrix(const Field& F, const Mat& g, const Subspace& u) {
  if (g.cols != u.ambient) throw Error(Errc::invalid_argument, "matrix does not act on this ambient space");
  return subspace_from_rows(F, g.rows, mul(F, u.basis, transpose(g)));
}

Subspace apply_frobenius(const Field& F, const Subspace& u, int r) {
  return subspace_from_rows(F, u.ambient, frobenius_map(F, u.basis, r));
}

Subspace map_subspace(const Embedding& e, const Subspace& u) {
  Subspace s;
  s.ambient = u.ambient;
  s.basis = map_entries(e, u.basis);  // RREF is preserved by field embeddings
  return s;
}

std::vector<Subspace> subspaces_of_dim(const Field& F, int ambient, int d) {
  std::vector<Subspace> out;
  if (d < 0 || d > ambient) return out;
  if (d == 0) {
    out.push_back(zero_subspace(ambient));
    return out;
  }
  // enumerate RREF shapes: pivot column subsets, then all fillings of the
  // free cells (right of the pivot, not in a pivot column)
  std::vector<int> pivots(d);
  for (int i = 0; i < d; ++i) pivots[i] = i;
  while (true) {
    std::vector<bool> is_pivot(ambient, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::pair<int, int>> free_cells;
    for (int r = 0; r < d; ++r)
      for (int c = pivots[r] + 1; c < ambient; ++c)
        if (!is_pivot[c]) free_cells.emplace_back(r, c);

    std::vector<Fel> fill(free_cells.size(), 0);
    while (true) {
      Subspace s;
      s.ambient = ambient;
      s.basis = Mat(d, ambient);
      for (int r = 0; r < d; ++r) s.basis.at(r, pivots[r]) = 1;
      for (size_t k = 0; k < free_cells.size(); ++k) s.basis.at(free_cells[k].first, free_cells[k].second) = fill[k];
      out.push_back(std::move(s));
      // odometer
      size_t k = 0;
      while (k < fill.size() && fill[k] + 1 == F.q()) fill[k++] = 0;
      if (k == fill.size()) break;
      ++fill[k];
    }

    // next pivot subset in lex order
    int i = d - 1;
    while (i >= 0 && pivots[i] == ambient - d + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long gaussian_binomial(long long n, long long d, long long q, long long cap) {
  if (d < 0 || d > n) return 0;
  if (d > n - d) d = n - d;  // symmetry keeps every q-Pascal cell below the result
  if (d == 0) return 1;
  const __int128 limit = (__int128)cap + 1;
  std::vector<__int128> row(d + 1, 0);
  row[0] = 1;
  for (long long k = 1; k <= n; ++k) {
    for (long long j = std::min(k, d); j >= 1; --j) {
      // [k, j] = [k-1, j-1] + q^j [k-1, j]; every cell is <= the result here
      __int128 qpow = 1;
      for (long long t = 0; t < j && qpow < limit; ++t) qpow *= q;
      __int128 term = row[j] == 0 ? 0 : (qpow >= limit ? limit : qpow * row[j]);
      row[j] = row[j - 1] + term;
      if (row[j] > cap) throw Error(Errc::cap_exceeded, "gaussian binomial exceeds cap");
    }
  }
  return (long long)row[d];
}

}  // namespace crb
