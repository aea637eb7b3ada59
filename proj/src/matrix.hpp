#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "field.hpp"

namespace crb {

// Dense row-major matrix of field element codes. Carries no field pointer;
// operations take the field explicitly.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<Fel> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}

  Fel& at(int r, int c) { return a[(size_t)r * cols + c]; }
  Fel at(int r, int c) const { return a[(size_t)r * cols + c]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool operator<(const Mat& o) const {
    if (rows != o.rows) return rows < o.rows;
    if (cols != o.cols) return cols < o.cols;
    return a < o.a;
  }
};

Mat mul(const Field& F, const Mat& x, const Mat& y);
Mat transpose(const Mat& x);
Mat frobenius_map(const Field& F, const Mat& x, int r);
Mat map_entries(const Embedding& e, const Mat& x);

// Reduced row echelon form (in place convention: returns a fresh matrix with
// zero rows pushed to the bottom) and the rank.
std::pair<Mat, int> rref(const Field& F, const Mat& x);
int rank(const Field& F, const Mat& x);
std::optional<Mat> inverse(const Field& F, const Mat& x);
Mat inverse_or_throw(const Field& F, const Mat& x);

// Basis of the right null space {v : x v = 0}, one solution per row, in RREF.
Mat kernel_basis(const Field& F, const Mat& x);

// Packs the entries into one machine word for hashing and ordering.
// Requires rows*cols*F.bits() <= 64.
std::uint64_t encode_mat(const Field& F, const Mat& x);
bool mat_encodable(const Field& F, int rows, int cols);

}  // namespace crb
