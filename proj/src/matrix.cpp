#include "matrix.hpp"

namespace crb {

Mat mul(const Field& F, const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw Error(Errc::invalid_argument, "matrix dimension mismatch in multiply");
  Mat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      Fel v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) {
        Fel w = y.at(k, j);
        if (w == 0) continue;
        z.at(i, j) = F.add(z.at(i, j), F.mul(v, w));
      }
    }
  return z;
}

Mat transpose(const Mat& x) {
  Mat z(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) z.at(j, i) = x.at(i, j);
  return z;
}

Mat frobenius_map(const Field& F, const Mat& x, int r) {
  Mat z = x;
  for (auto& v : z.a) v = F.frobenius(v, r);
  return z;
}

Mat map_entries(const Embedding& e, const Mat& x) {
  Mat z = x;
  for (auto& v : z.a) v = e(v);
  return z;
}

std::pair<Mat, int> rref(const Field& F, const Mat& x) {
  Mat m = x;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    Fel inv = F.inv(m.at(r, c));
    for (int j = c; j < m.cols; ++j) m.at(r, j) = F.mul(m.at(r, j), inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      Fel f = m.at(i, c);
      if (f == 0) continue;
      for (int j = c; j < m.cols; ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
    }
    ++r;
  }
  return {m, r};
}

int rank(const Field& F, const Mat& x) { return rref(F, x).second; }

std::optional<Mat> inverse(const Field& F, const Mat& x) {
  if (x.rows != x.cols) return std::nullopt;
  int n = x.rows;
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = x.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto [red, rk] = rref(F, aug);
  (void)rk;  // always n: the right block alone has full rank
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (red.at(i, j) != (i == j ? 1u : 0u)) return std::nullopt;
  Mat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = red.at(i, n + j);
  return out;
}

Mat inverse_or_throw(const Field& F, const Mat& x) {
  auto inv = inverse(F, x);
  if (!inv) throw Error(Errc::singular, "matrix is not invertible");
  return *inv;
}

Mat kernel_basis(const Field& F, const Mat& x) {
  auto [red, rk] = rref(F, x);
  int n = x.cols;
  std::vector<int> pivot_col(rk);
  std::vector<bool> is_pivot(n, false);
  for (int i = 0; i < rk; ++i) {
    int c = 0;
    while (red.at(i, c) == 0) ++c;
    pivot_col[i] = c;
    is_pivot[c] = true;
  }
  Mat out(n - rk, n);
  int row = 0;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    out.at(row, c) = 1;
    for (int i = 0; i < rk; ++i) out.at(row, pivot_col[i]) = F.neg(red.at(i, c));
    ++row;
  }
  return rref(F, out).first;  // canonical basis
}

bool mat_encodable(const Field& F, int rows, int cols) {
  return (long long)rows * cols * F.bits() <= 64;
}

std::uint64_t encode_mat(const Field& F, const Mat& x) {
  if (!mat_encodable(F, x.rows, x.cols))
    throw Error(Errc::cap_exceeded, "matrix too wide to pack into a 64-bit code");
  std::uint64_t v = 0;
  for (Fel e : x.a) v = (v << F.bits()) | e;
  return v;
}

}  // namespace crb
