#include "building.hpp"

#include <algorithm>
#include <functional>

namespace crb {

Building::Building(const Field& F, int n, long long cap_simplices) : field_(&F), n_(n) {
  if (n < 2) throw Error(Errc::invalid_argument, "building needs n >= 2");
  long long vertex_count = 0;
  for (int d = 1; d < n; ++d) vertex_count += gaussian_binomial(n, d, F.q(), cap_simplices);
  if (vertex_count > cap_simplices)
    throw Error(Errc::cap_exceeded, "building vertex count exceeds cap " + std::to_string(cap_simplices));

  for (int d = 1; d < n; ++d) {
    auto subs = subspaces_of_dim(F, n, d);
    vertices_.insert(vertices_.end(), subs.begin(), subs.end());
  }
  std::sort(vertices_.begin(), vertices_.end());
  for (size_t i = 0; i < vertices_.size(); ++i) vertex_index_[vertices_[i]] = (int)i;

  above_.assign(vertices_.size(), {});
  for (size_t i = 0; i < vertices_.size(); ++i)
    for (size_t j = i + 1; j < vertices_.size(); ++j) {
      if (vertices_[j].dim() <= vertices_[i].dim()) continue;
      if (contains(F, vertices_[j], vertices_[i])) above_[i].push_back((int)j);
    }

  long long count = 0;
  std::vector<int> chain;
  std::function<void(int)> extend = [&](int v) {
    chain.push_back(v);
    if (++count > cap_simplices) throw Error(Errc::cap_exceeded, "building simplex count exceeds cap");
    Flag f;
    f.verts = chain;
    flags_.push_back(std::move(f));
    for (int w : above_[v]) extend(w);
    chain.pop_back();
  };
  for (int v = 0; v < (int)vertices_.size(); ++v) extend(v);

  std::sort(flags_.begin(), flags_.end());
  for (size_t i = 0; i < flags_.size(); ++i) flag_index_[flags_[i].verts] = (int)i;
  for (const auto& f : flags_)
    if (f.size() == n - 1) ++chamber_count_;
}

int Building::vertex_id(const Subspace& s) const {
  auto it = vertex_index_.find(s);
  return it == vertex_index_.end() ? -1 : it->second;
}

int Building::flag_id(const Flag& f) const {
  auto it = flag_index_.find(f.verts);
  return it == flag_index_.end() ? -1 : it->second;
}

std::vector<int> Building::flag_type(const Flag& f) const {
  std::vector<int> t;
  t.reserve(f.verts.size());
  for (int v : f.verts) t.push_back(vertices_[v].dim());
  return t;
}

bool Building::flag_subset(const Flag& a, const Flag& b) const {
  return std::includes(b.verts.begin(), b.verts.end(), a.verts.begin(), a.verts.end());
}

int Building::dim_intersect(int va, int vb) const {
  if (meet_dim_.empty()) meet_dim_.assign(vertices_.size() * vertices_.size(), -1);
  size_t key = (size_t)va * vertices_.size() + vb;
  if (meet_dim_[key] >= 0) return meet_dim_[key];
  const Subspace& a = vertices_[va];
  const Subspace& b = vertices_[vb];
  int d = a.dim() + b.dim() - sum(*field_, a, b).dim();
  meet_dim_[key] = (signed char)d;
  meet_dim_[(size_t)vb * vertices_.size() + va] = (signed char)d;
  return d;
}

bool Building::opposite(const Flag& a, const Flag& b) const {
  int r = a.size();
  if (r != b.size()) return false;
  for (int i = 0; i < r; ++i) {
    int va = a.verts[i];
    int vb = b.verts[r - 1 - i];
    if (vertices_[va].dim() + vertices_[vb].dim() != n_) return false;
    if (dim_intersect(va, vb) != 0) return false;
  }
  return true;
}

std::vector<int> Building::vertex_map(const BuildingAuto& a) const {
  std::vector<int> out(vertices_.size());
  for (size_t i = 0; i < vertices_.size(); ++i) {
    int id = vertex_id(apply_auto(*field_, a, vertices_[i]));
    if (id < 0) throw Error(Errc::internal, "automorphism image is not a building vertex");
    out[i] = id;
  }
  return out;
}

Flag Building::apply_map(const std::vector<int>& vmap, const Flag& f) const {
  Flag g;
  g.verts.reserve(f.verts.size());
  for (int v : f.verts) g.verts.push_back(vmap[v]);
  std::sort(g.verts.begin(), g.verts.end());  // vertex order is dimension-major
  return g;
}

bool Building::stabilizes(const Mat& g, const Flag& f) const {
  for (int v : f.verts)
    if (!(apply_matrix(*field_, g, vertices_[v]) == vertices_[v])) return false;
  return true;
}

bool Building::group_stabilizes(const MatGroup& h, const Flag& f) const {
  const auto& gens = h.generators.empty() ? h.elements : h.generators;
  for (const auto& g : gens)
    if (!stabilizes(g, f)) return false;
  return true;
}

bool common_levi_oracle(const Building& b, const Flag& f, const Flag& g, const std::vector<Mat>& ambient) {
  const Field& F = b.field();
  int n = b.n();
  int r = f.size();
  if (r != g.size()) return false;

  // transversal graded pieces L_i = V_i cap W_{r+2-i}, with V_{r+1} = W_{r+1}
  // = F^n; the pair is transversal iff the pieces sum directly to F^n
  std::vector<Subspace> pieces;
  for (int i = 1; i <= r + 1; ++i) {
    Subspace vi = (i <= r) ? b.vertex(f.verts[i - 1]) : full_space(n);
    int j = r + 2 - i;
    Subspace wj = (j <= r) ? b.vertex(g.verts[j - 1]) : full_space(n);
    pieces.push_back(intersect(F, vi, wj));
  }
  int total = 0;
  Subspace acc = zero_subspace(n);
  for (const auto& p : pieces) {
    total += p.dim();
    acc = sum(F, acc, p);
  }
  if (total != n || acc.dim() != n) return false;

  for (const auto& x : ambient) {
    bool in_both = b.stabilizes(x, f) && b.stabilizes(x, g);
    bool in_levi = true;
    for (const auto& p : pieces)
      if (!(apply_matrix(F, x, p) == p)) {
        in_levi = false;
        break;
      }
    if (in_both != in_levi) return false;
  }
  return true;
}

CocharParabolic cocharacter_parabolic(const Field&, int n, const std::vector<long long>& weights) {
  if ((int)weights.size() != n) throw Error(Errc::invalid_argument, "cocharacter weight vector has wrong length");
  CocharParabolic out;
  std::vector<long long> distinct = weights;
  std::sort(distinct.begin(), distinct.end(), std::greater<>());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::vector<int> taken;
  for (size_t k = 0; k < distinct.size(); ++k) {
    std::vector<int> block;
    for (int i = 0; i < n; ++i)
      if (weights[i] == distinct[k]) block.push_back(i);
    out.levi_blocks.push_back(block);
    taken.insert(taken.end(), block.begin(), block.end());
    if (k + 1 < distinct.size()) out.chain.push_back(span_of_coords(n, taken));
  }
  return out;
}

bool limit_exists(const Field&, const std::vector<long long>& weights, const Mat& g) {
  // conjugation by diag(t^w) scales entry (i, j) by t^(w_i - w_j)
  for (int i = 0; i < g.rows; ++i)
    for (int j = 0; j < g.cols; ++j)
      if (weights[i] < weights[j] && g.at(i, j) != 0) return false;
  return true;
}

bool centralizes_cochar(const Field&, const std::vector<long long>& weights, const Mat& g) {
  for (int i = 0; i < g.rows; ++i)
    for (int j = 0; j < g.cols; ++j)
      if (weights[i] != weights[j] && g.at(i, j) != 0) return false;
  return true;
}

bool limit_is_identity(const Field&, const std::vector<long long>& weights, const Mat& g) {
  // entries above the weight grading keep their value in the limit, entries
  // below must vanish for the limit to exist at all
  for (int i = 0; i < g.rows; ++i)
    for (int j = 0; j < g.cols; ++j) {
      if (weights[i] < weights[j] && g.at(i, j) != 0) return false;
      if (weights[i] == weights[j] && g.at(i, j) != (i == j ? 1u : 0u)) return false;
    }
  return true;
}

std::vector<int> levi_sphere_flags(const Building& b, const std::vector<Subspace>& pieces) {
  const Field& F = b.field();
  int s = (int)pieces.size();
  int total = 0;
  Subspace acc = zero_subspace(b.n());
  for (const auto& p : pieces) {
    total += p.dim();
    acc = sum(F, acc, p);
  }
  if (total != b.n() || acc.dim() != b.n())
    throw Error(Errc::invalid_argument, "pieces do not decompose the ambient space");

  // vertices of s(L) are the partial sums over nonempty proper subsets;
  // simplices are chains of nested subsets
  std::vector<int> sum_vertex(1u << s, -1);
  for (unsigned mask = 1; mask + 1 < (1u << s); ++mask) {
    Subspace u = zero_subspace(b.n());
    for (int i = 0; i < s; ++i)
      if (mask & (1u << i)) u = sum(F, u, pieces[i]);
    sum_vertex[mask] = b.vertex_id(u);
    if (sum_vertex[mask] < 0) throw Error(Errc::internal, "partial sum is not a building vertex");
  }

  std::vector<unsigned> masks;
  for (unsigned m = 1; m + 1 < (1u << s); ++m) masks.push_back(m);

  std::vector<int> out;
  std::vector<unsigned> chain;
  auto emit = [&]() {
    Flag f;
    for (unsigned m : chain) f.verts.push_back(sum_vertex[m]);
    std::sort(f.verts.begin(), f.verts.end());
    int id = b.flag_id(f);
    if (id < 0) throw Error(Errc::internal, "levi sphere flag missing from building");
    out.push_back(id);
  };
  std::function<void(unsigned)> extend = [&](unsigned last) {
    for (unsigned m : masks) {
      if (m == last || (m & last) != last) continue;
      chain.push_back(m);
      emit();
      extend(m);
      chain.pop_back();
    }
  };
  for (unsigned m : masks) {
    chain.assign(1, m);
    emit();
    extend(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> standard_blocks(const Field&, int n, const std::vector<int>& sizes) {
  int total = 0;
  for (int s : sizes) {
    if (s < 1) throw Error(Errc::invalid_argument, "block sizes must be positive");
    total += s;
  }
  if (total != n) throw Error(Errc::invalid_argument, "block sizes must sum to n");
  std::vector<Subspace> out;
  int offset = 0;
  for (int s : sizes) {
    std::vector<int> coords;
    for (int i = 0; i < s; ++i) coords.push_back(offset + i);
    out.push_back(span_of_coords(n, coords));
    offset += s;
  }
  return out;
}

std::vector<int> apartment_flags(const Building& b) {
  std::vector<Subspace> lines;
  for (int i = 0; i < b.n(); ++i) lines.push_back(span_of_coords(b.n(), {i}));
  return levi_sphere_flags(b, lines);
}

}  // namespace crb
