#include "topology.hpp"

#include <algorithm>
#include <functional>

namespace crb {

std::vector<long long> SimplicialComplex::face_counts() const {
  std::vector<long long> out;
  for (const auto& level : simplices) out.push_back((long long)level.size());
  return out;
}

long long SimplicialComplex::euler_reduced_from_faces() const {
  long long e = -1;
  long long sign = 1;
  for (const auto& level : simplices) {
    e += sign * (long long)level.size();
    sign = -sign;
  }
  return e;
}

static SimplicialComplex chains_of_poset(int num_vertices, const std::vector<std::vector<int>>& above) {
  SimplicialComplex sc;
  sc.num_vertices = num_vertices;
  std::vector<int> chain;
  std::function<void(int)> extend = [&](int v) {
    chain.push_back(v);
    int d = (int)chain.size() - 1;
    if ((int)sc.simplices.size() <= d) sc.simplices.resize(d + 1);
    sc.simplices[d].push_back(chain);
    for (int w : above[v]) extend(w);
    chain.pop_back();
  };
  for (int v = 0; v < num_vertices; ++v) extend(v);
  for (auto& level : sc.simplices) std::sort(level.begin(), level.end());
  return sc;
}

SimplicialComplex order_complex_of_flags(const Building& b, const std::vector<int>& flag_ids) {
  // poset vertices in ascending flag order; edges by strict subflag inclusion
  const auto& flags = b.flags();
  int n = (int)flag_ids.size();
  std::vector<std::vector<int>> above(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (flags[flag_ids[i]].size() >= flags[flag_ids[j]].size()) continue;
      if (b.flag_subset(flags[flag_ids[i]], flags[flag_ids[j]])) above[i].push_back(j);
    }
  return chains_of_poset(n, above);
}

SimplicialComplex order_complex(const FixedComplex& fc) {
  return order_complex_of_flags(*fc.building, fc.stable);
}

SimplicialComplex flag_complex(const Building& b) {
  SimplicialComplex sc;
  sc.num_vertices = (int)b.vertices().size();
  for (const auto& f : b.flags()) {
    int d = f.size() - 1;
    if ((int)sc.simplices.size() <= d) sc.simplices.resize(d + 1);
    sc.simplices[d].push_back(f.verts);
  }
  for (auto& level : sc.simplices) std::sort(level.begin(), level.end());
  return sc;
}

// ---- Smith normal form ----

namespace {

Bigint babs(const Bigint& x) { return x < 0 ? Bigint(-x) : x; }

struct SnfWorker {
  IntMat a;
  IntMat *u = nullptr, *v = nullptr;  // optional transform accumulators
  int rows, cols;

  void row_swap(int i, int j) {
    std::swap(a[i], a[j]);
    if (u) std::swap((*u)[i], (*u)[j]);
  }
  void col_swap(int i, int j) {
    for (int r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
    if (v)
      for (size_t r = 0; r < (*v).size(); ++r) std::swap((*v)[r][i], (*v)[r][j]);
  }
  void row_add(int dst, int src, const Bigint& c) {  // row dst += c * row src
    for (int k = 0; k < cols; ++k) a[dst][k] += c * a[src][k];
    if (u)
      for (size_t k = 0; k < (*u)[dst].size(); ++k) (*u)[dst][k] += c * (*u)[src][k];
  }
  void col_add(int dst, int src, const Bigint& c) {
    for (int r = 0; r < rows; ++r) a[r][dst] += c * a[r][src];
    if (v)
      for (size_t r = 0; r < (*v).size(); ++r) (*v)[r][dst] += c * (*v)[r][src];
  }
  void row_negate(int i) {
    for (int k = 0; k < cols; ++k) a[i][k] = -a[i][k];
    if (u)
      for (auto& x : (*u)[i]) x = -x;
  }

  SnfResult run() {
    SnfResult res;
    int t = 0;
    while (true) {
      // find the nonzero entry of least magnitude in the remaining block
      int pr = -1, pc = -1;
      Bigint best = 0;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pr < 0 || babs(a[i][j]) < best)) {
            pr = i;
            pc = j;
            best = babs(a[i][j]);
          }
      if (pr < 0) break;
      row_swap(t, pr);
      col_swap(t, pc);
      if (a[t][t] < 0) row_negate(t);

      bool clean = true;
      for (int i = t + 1; i < rows; ++i)
        if (a[i][t] != 0) {
          Bigint q = a[i][t] / a[t][t];
          row_add(i, t, -q);
          if (a[i][t] != 0) clean = false;
        }
      for (int j = t + 1; j < cols; ++j)
        if (a[t][j] != 0) {
          Bigint q = a[t][j] / a[t][t];
          col_add(j, t, -q);
          if (a[t][j] != 0) clean = false;
        }
      if (!clean) continue;  // remainders became new, smaller pivot candidates

      // pivot must divide the rest of the block for the divisibility chain
      bool divides_all = true;
      for (int i = t + 1; i < rows && divides_all; ++i)
        for (int j = t + 1; j < cols && divides_all; ++j)
          if (a[i][j] % a[t][t] != 0) {
            row_add(t, i, 1);  // fold the offending row in and redo the pivot
            divides_all = false;
          }
      if (!divides_all) continue;
      ++t;
    }
    res.rank = t;
    for (int i = 0; i < t; ++i) res.diagonal.push_back(a[i][i]);
    return res;
  }
};

}  // namespace

SnfResult smith_normal_form(IntMat a) {
  SnfWorker w;
  w.rows = (int)a.size();
  w.cols = w.rows ? (int)a[0].size() : 0;
  w.a = std::move(a);
  return w.run();
}

SnfResult smith_normal_form_with_transforms(IntMat a, IntMat& u, IntMat& v) {
  SnfWorker w;
  w.rows = (int)a.size();
  w.cols = w.rows ? (int)a[0].size() : 0;
  w.a = std::move(a);
  u.assign(w.rows, std::vector<Bigint>(w.rows, 0));
  for (int i = 0; i < w.rows; ++i) u[i][i] = 1;
  v.assign(w.cols, std::vector<Bigint>(w.cols, 0));
  for (int i = 0; i < w.cols; ++i) v[i][i] = 1;
  w.u = &u;
  w.v = &v;
  return w.run();
}

HomologyProfile reduced_homology(const SimplicialComplex& sc) {
  HomologyProfile hp;
  if (sc.empty()) {
    hp.empty_complex = true;
    return hp;
  }
  hp.empty_complex = false;
  int dim = sc.dim();

  // boundary_k maps C_k -> C_{k-1}; degree 0 gets the augmentation row
  auto boundary = [&](int k) -> IntMat {
    const auto& level = sc.simplices[k];
    if (k == 0) {
      IntMat m(1, std::vector<Bigint>(level.size(), 1));
      return m;
    }
    const auto& faces = sc.simplices[k - 1];
    auto face_index = [&](const std::vector<int>& f) {
      auto it = std::lower_bound(faces.begin(), faces.end(), f);
      return (long long)(it - faces.begin());
    };
    IntMat m(faces.size(), std::vector<Bigint>(level.size(), 0));
    for (size_t j = 0; j < level.size(); ++j) {
      const auto& s = level[j];
      int sign = 1;
      for (size_t drop = 0; drop < s.size(); ++drop) {
        std::vector<int> f;
        for (size_t t = 0; t < s.size(); ++t)
          if (t != drop) f.push_back(s[t]);
        m[face_index(f)][j] = sign;
        sign = -sign;
      }
    }
    return m;
  };

  std::vector<long long> ranks(dim + 2, 0);           // rank of boundary_k, k = 0..dim+1
  std::vector<std::vector<Bigint>> factors(dim + 2);  // invariant factors of boundary_k
  for (int k = 0; k <= dim; ++k) {
    SnfResult s = smith_normal_form(boundary(k));
    ranks[k] = s.rank;
    factors[k] = s.diagonal;
  }

  hp.reduced_betti.assign(dim + 1, 0);
  hp.torsion.assign(dim + 1, {});
  for (int k = 0; k <= dim; ++k) {
    long long ck = (long long)sc.simplices[k].size();
    hp.reduced_betti[k] = ck - ranks[k] - ranks[k + 1];
    for (const auto& d : factors[k + 1])
      if (babs(d) > 1) hp.torsion[k].push_back(babs(d));
  }
  hp.euler_reduced = 0;
  long long sign = 1;
  for (int k = 0; k <= dim; ++k) {
    hp.euler_reduced += sign * hp.reduced_betti[k];
    sign = -sign;
  }
  if (hp.euler_reduced != sc.euler_reduced_from_faces())
    throw Error(Errc::invariant, "Euler characteristic mismatch between faces and homology");
  return hp;
}

TopoClass classify(const HomologyProfile& hp, int dim_fixed) {
  TopoClass tc;
  if (hp.empty_complex) {
    tc.tag = TopoTag::PointLike;  // vacuous case, kept out of the equivalence suites
    return tc;
  }
  if (hp.all_zero()) {
    tc.tag = TopoTag::PointLike;
    return tc;
  }
  if (!hp.torsion_free()) {
    tc.tag = TopoTag::Other;
    return tc;
  }
  int nonzero_degree = -1;
  for (size_t k = 0; k < hp.reduced_betti.size(); ++k) {
    if (hp.reduced_betti[k] == 0) continue;
    if (nonzero_degree >= 0) {
      tc.tag = TopoTag::Other;  // spread over several degrees
      return tc;
    }
    nonzero_degree = (int)k;
  }
  if (nonzero_degree == dim_fixed) {
    tc.tag = TopoTag::SphereBouquetLike;
    tc.degree = nonzero_degree;
    tc.count = hp.reduced_betti[nonzero_degree];
  } else {
    tc.tag = TopoTag::Other;
  }
  return tc;
}

const char* topo_tag_name(TopoTag t) {
  switch (t) {
    case TopoTag::PointLike:
      return "point_like";
    case TopoTag::SphereBouquetLike:
      return "sphere_bouquet_like";
    default:
      return "other";
  }
}

LeviSphereSearch levi_sphere_containment(const FixedComplex& fc, long long cap_candidates) {
  LeviSphereSearch out;
  const Building& b = *fc.building;
  const Field& F = b.field();
  int n = b.n();
  int d = fc.poset_dim();
  if (d < 0) return out;  // empty stable set: nothing to contain
  int pieces_needed = d + 2;
  if (pieces_needed > n) return out;

  std::vector<const Subspace*> all;
  for (const auto& v : b.vertices()) all.push_back(&v);

  std::vector<Subspace> chosen;
  std::function<bool(size_t, int)> search = [&](size_t start, int dims_left) -> bool {
    if ((int)chosen.size() == pieces_needed) {
      if (dims_left != 0) return false;
      auto flags = levi_sphere_flags(b, chosen);
      for (int f : flags)
        if (!fc.is_stable(f)) return false;
      return true;
    }
    if (out.candidates_tried > cap_candidates) return false;
    int slots_after = pieces_needed - (int)chosen.size() - 1;
    for (size_t i = start; i < all.size(); ++i) {
      const Subspace& cand = *all[i];
      if (cand.dim() > dims_left - slots_after) continue;
      ++out.candidates_tried;
      if (out.candidates_tried > cap_candidates) return false;
      // keep the pieces independent
      bool indep = true;
      Subspace acc = chosen.empty() ? cand : sum(F, chosen[0], cand);
      if (!chosen.empty()) {
        Subspace run = chosen[0];
        for (size_t k = 1; k < chosen.size(); ++k) run = sum(F, run, chosen[k]);
        if (intersect(F, run, cand).dim() != 0) indep = false;
      }
      (void)acc;
      if (!indep) continue;
      chosen.push_back(cand);
      if (search(i + 1, dims_left - cand.dim())) return true;
      chosen.pop_back();
    }
    return false;
  };

  bool found = search(0, n);
  if (found) {
    out.status = LeviSphereSearch::Status::Found;
    out.decomposition = chosen;
  } else if (out.candidates_tried > cap_candidates) {
    out.status = LeviSphereSearch::Status::Inconclusive;
  } else {
    out.status = LeviSphereSearch::Status::NotFound;
  }
  return out;
}

}  // namespace crb
