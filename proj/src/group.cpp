#include "group.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace crb {

MatGroup closure(const Field& F, int n, std::vector<Mat> generators, long long cap) {
  if (!mat_encodable(F, n, n))
    throw Error(Errc::cap_exceeded, "group elements too wide for the packed representation");
  for (const auto& g : generators) {
    if (g.rows != n || g.cols != n) throw Error(Errc::invalid_argument, "generator has wrong shape");
    if (!inverse(F, g)) throw Error(Errc::singular, "generator is not invertible");
  }
  MatGroup h;
  h.n = n;
  h.field = &F;
  h.generators = generators;

  std::deque<Mat> queue;
  Mat id = Mat::identity(n);
  h.codes.insert(encode_mat(F, id));
  h.elements.push_back(id);
  queue.push_back(id);
  // products of invertible matrices: multiplicative closure is already a group
  while (!queue.empty()) {
    Mat x = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Mat y = mul(F, x, g);
      if (h.codes.insert(encode_mat(F, y)).second) {
        if ((long long)h.codes.size() > cap)
          throw Error(Errc::cap_exceeded, "group closure exceeds cap " + std::to_string(cap));
        h.elements.push_back(y);
        queue.push_back(y);
      }
    }
  }
  std::sort(h.elements.begin(), h.elements.end());
  return h;
}

MatGroup group_from_elements(const Field& F, int n, std::vector<Mat> elements, std::vector<Mat> generators) {
  MatGroup h;
  h.n = n;
  h.field = &F;
  h.generators = std::move(generators);
  h.elements = std::move(elements);
  std::sort(h.elements.begin(), h.elements.end());
  for (const auto& e : h.elements) h.codes.insert(encode_mat(F, e));
  return h;
}

MatGroup trivial_group(const Field& F, int n) { return closure(F, n, {}, 1); }

long long gl_order(const Field& F, int n, long long cap) {
  __int128 order = 1;
  __int128 qn = 1;
  for (int i = 0; i < n; ++i) qn *= F.q();
  __int128 qi = 1;
  for (int i = 0; i < n; ++i) {
    order *= (qn - qi);
    qi *= F.q();
    if (order > cap) throw Error(Errc::cap_exceeded, "general linear group order exceeds cap");
  }
  return (long long)order;
}

std::vector<Mat> gl_elements(const Field& F, int n, long long cap) {
  gl_order(F, n, cap);
  __int128 total = 1;
  for (int i = 0; i < n * n; ++i) {
    total *= F.q();
    if (total > 4 * (__int128)cap + (1 << 20))
      throw Error(Errc::cap_exceeded, "matrix space too large to scan for invertible elements");
  }
  std::vector<Mat> out;
  Mat m(n, n);
  while (true) {
    if (rank(F, m) == n) out.push_back(m);
    int k = 0;
    while (k < n * n && m.a[k] + 1 == F.q()) m.a[k++] = 0;
    if (k == n * n) break;
    ++m.a[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mat> small_generating_set(const Field& F, int n, const std::vector<Mat>& elements) {
  std::vector<Mat> gens;
  std::unordered_set<std::uint64_t> have;
  have.insert(encode_mat(F, Mat::identity(n)));
  for (const auto& e : elements) {
    if (have.count(encode_mat(F, e))) continue;
    gens.push_back(e);
    MatGroup h = closure(F, n, gens, (long long)elements.size());
    have = h.codes;
  }
  return gens;
}

MatGroup normalizer(const Field& F, const std::vector<Mat>& ambient, const MatGroup& h) {
  std::vector<Mat> elems;
  for (const auto& g : ambient) {
    Mat gi = inverse_or_throw(F, g);
    bool ok = true;
    for (const auto& x : h.generators.empty() ? h.elements : h.generators) {
      if (!h.contains(mul(F, mul(F, g, x), gi))) {
        ok = false;
        break;
      }
    }
    // conjugation by g is injective, so g gens g^-1 inside H gives g H g^-1 = H
    if (ok) elems.push_back(g);
  }
  return group_from_elements(F, h.n, std::move(elems), {});
}

MatGroup centralizer(const Field& F, const std::vector<Mat>& ambient, const MatGroup& h) {
  std::vector<Mat> elems;
  for (const auto& g : ambient) {
    bool ok = true;
    for (const auto& x : h.generators.empty() ? h.elements : h.generators) {
      if (!(mul(F, g, x) == mul(F, x, g))) {
        ok = false;
        break;
      }
    }
    if (ok) elems.push_back(g);
  }
  return group_from_elements(F, h.n, std::move(elems), {});
}

bool is_normal_in(const Field& F, const MatGroup& n, const MatGroup& h) {
  for (const auto& x : n.elements)
    if (!h.contains(x)) return false;
  for (const auto& g : h.generators.empty() ? h.elements : h.generators) {
    Mat gi = inverse_or_throw(F, g);
    for (const auto& x : n.elements)
      if (!n.contains(mul(F, mul(F, g, x), gi))) return false;
  }
  return true;
}

Mat apply_auto(const Field& F, const BuildingAuto& a, const Mat& g) {
  Mat x = g;
  if (a.dual) x = inverse_or_throw(F, transpose(x));
  if (a.frob > 0) x = frobenius_map(F, x, a.frob);
  if (a.has_inner()) x = mul(F, mul(F, a.inner, x), inverse_or_throw(F, a.inner));
  return x;
}

Subspace apply_auto(const Field& F, const BuildingAuto& a, const Subspace& u) {
  Subspace x = u;
  if (a.dual) x = annihilator(F, x);
  if (a.frob > 0) x = apply_frobenius(F, x, a.frob);
  if (a.has_inner()) x = apply_matrix(F, a.inner, x);
  return x;
}

BuildingAuto compose(const Field& F, const BuildingAuto& a, const BuildingAuto& b) {
  // normal form of a o b: pull b's inner part through a's duality and
  // Frobenius, using dual(h x h^-1) = dual(h) dual(x) dual(h)^-1 and
  // frob(h x h^-1) = frob(h) frob(x) frob(h)^-1
  BuildingAuto out;
  out.dual = a.dual != b.dual;
  out.frob = a.frob + b.frob;
  Mat moved;  // b's inner conjugator seen from the left of a
  if (b.has_inner()) {
    moved = b.inner;
    if (a.dual) moved = inverse_or_throw(F, transpose(moved));
    if (a.frob > 0) moved = frobenius_map(F, moved, a.frob);
  }
  if (a.has_inner() && moved.rows > 0)
    out.inner = mul(F, a.inner, moved);
  else if (a.has_inner())
    out.inner = a.inner;
  else if (moved.rows > 0)
    out.inner = moved;
  // duality conjugates Frobenius to itself, so powers just add; a double
  // duality cancels because the dot form is symmetric
  return out;
}

AutoSet inner_autos(const MatGroup& h, const std::string& description) {
  AutoSet s;
  s.description = description;
  for (const auto& g : h.generators) s.autos.push_back(BuildingAuto::inner_auto(g));
  if (h.generators.empty()) s.autos.push_back(BuildingAuto::inner_auto(Mat::identity(h.n)));
  return s;
}

bool is_auto_stable_group(const Field& F, const MatGroup& h, const BuildingAuto& a) {
  for (const auto& x : h.elements)
    if (!h.contains(apply_auto(F, a, x))) return false;
  return true;
}

std::vector<SubgroupRecord> enumerate_subgroups(const Field& F, int n, const std::vector<Mat>& ambient,
                                                long long group_cap) {
  if ((long long)ambient.size() > group_cap)
    throw Error(Errc::cap_exceeded, "ambient group too large for subgroup enumeration (cap " +
                                        std::to_string(group_cap) + ")");
  std::map<std::vector<std::uint64_t>, SubgroupRecord> dedup;
  auto add = [&](std::vector<Mat> gens) {
    MatGroup g = closure(F, n, std::move(gens), (long long)ambient.size());
    std::vector<std::uint64_t> key;
    key.reserve(g.elements.size());
    for (const auto& e : g.elements) key.push_back(encode_mat(F, e));
    if (!dedup.count(key)) dedup.emplace(std::move(key), SubgroupRecord{g.generators, std::move(g)});
  };
  add({});
  for (const auto& g : ambient) add({g});
  for (size_t i = 0; i < ambient.size(); ++i)
    for (size_t j = i + 1; j < ambient.size(); ++j) add({ambient[i], ambient[j]});

  std::vector<SubgroupRecord> out;
  out.reserve(dedup.size());
  for (auto& [key, rec] : dedup) out.push_back(std::move(rec));
  std::sort(out.begin(), out.end(), [&](const SubgroupRecord& a, const SubgroupRecord& b) {
    if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
    return a.group.elements < b.group.elements;
  });
  return out;
}

}  // namespace crb
