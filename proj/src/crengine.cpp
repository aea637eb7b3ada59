#include "crengine.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>

namespace crb {

bool FixedComplex::is_stable(int flag_id) const {
  return std::binary_search(stable.begin(), stable.end(), flag_id);
}

int FixedComplex::poset_dim() const {
  if (stable.empty()) return -1;
  // longest chain under subflag inclusion; flags are grouped by size, so a
  // pass in size order is a topological order
  const auto& flags = building->flags();
  std::vector<int> depth(stable.size(), 1);
  int best = 1;
  for (size_t i = 0; i < stable.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      if (flags[stable[j]].size() >= flags[stable[i]].size()) continue;
      if (building->flag_subset(flags[stable[j]], flags[stable[i]]))
        depth[i] = std::max(depth[i], depth[j] + 1);
    }
  for (int d : depth) best = std::max(best, d);
  return best - 1;
}

FixedComplex fixed_complex(const Building& b, const AutoSet& autos) {
  FixedComplex fc;
  fc.building = &b;
  fc.autos = autos;
  fc.type_preserving = autos.type_preserving();
  std::vector<std::vector<int>> maps;
  maps.reserve(autos.autos.size());
  for (const auto& a : autos.autos) maps.push_back(b.vertex_map(a));
  for (int i = 0; i < (int)b.flags().size(); ++i) {
    const Flag& f = b.flags()[i];
    bool ok = true;
    for (const auto& vm : maps)
      if (!(b.apply_map(vm, f) == f)) {
        ok = false;
        break;
      }
    if (ok) fc.stable.push_back(i);
  }
  return fc;
}

CrVerdict is_cr(const FixedComplex& fc) {
  CrVerdict v;
  const Building& b = *fc.building;
  for (int f : fc.stable) {
    int found = -1;
    for (int g : fc.stable)
      if (b.opposite(b.flags()[f], b.flags()[g])) {
        found = g;  // stable list is ascending, first hit is the least
        break;
      }
    if (found < 0) {
      v.cr = false;
      v.counterexample = f;
      v.witness.clear();
      return v;
    }
    v.witness.emplace_back(f, found);
  }
  return v;
}

namespace {

// Literal variant of the definitions: quantify over flags whose stabilizer
// contains H and which are fixed by every automorphism in sigma, and demand
// an opposite of the same kind. Recomputed from matrices and subspaces
// rather than the fixed-complex tables.
bool definitional_cr(const Building& b, const MatGroup& h, const std::vector<BuildingAuto>& sigma) {
  const Field& F = b.field();
  auto sigma_fixed = [&](const Flag& f) {
    for (const auto& a : sigma) {
      Flag image;
      for (int v : f.verts) {
        Subspace u = apply_auto(F, a, b.vertex(v));
        int id = b.vertex_id(u);
        if (id < 0) return false;
        image.verts.push_back(id);
      }
      std::sort(image.verts.begin(), image.verts.end());
      if (!(image == f)) return false;
    }
    return true;
  };
  auto contains_h = [&](const Flag& f) { return b.group_stabilizes(h, f); };
  auto opposite_flags = [&](const Flag& f, const Flag& g) {
    // direct subspace arithmetic, independent of the memoized tables
    int r = f.size();
    if (r != g.size()) return false;
    for (int i = 0; i < r; ++i) {
      const Subspace& vi = b.vertex(f.verts[i]);
      const Subspace& wj = b.vertex(g.verts[r - 1 - i]);
      if (vi.dim() + wj.dim() != b.n()) return false;
      if (intersect(F, vi, wj).dim() != 0) return false;
    }
    return true;
  };

  for (const Flag& f : b.flags()) {
    if (!sigma_fixed(f) || !contains_h(f)) continue;
    bool found = false;
    for (const Flag& g : b.flags()) {
      if (!opposite_flags(f, g)) continue;
      if (sigma_fixed(g) && contains_h(g)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

SigmaCrResult sigma_cr(const Building& b, const MatGroup& h, const BuildingAuto& sigma) {
  if (!(b.field() == *h.field)) throw Error(Errc::invalid_argument, "subgroup and building field mismatch");
  if (h.n != b.n()) throw Error(Errc::invalid_argument, "subgroup and building dimension mismatch");
  SigmaCrResult out;
  AutoSet gamma = inner_autos(h, "subgroup with endomorphism");
  gamma.autos.push_back(sigma);
  out.fc = fixed_complex(b, gamma);
  out.building = is_cr(out.fc);
  out.definitional = definitional_cr(b, h, {sigma});
  out.agree = (out.building.cr == out.definitional);
  out.sigma_stable_subgroup = is_auto_stable_group(b.field(), h, sigma);
  return out;
}

GsigmaCrResult gsigma_cr(const MatGroup& h, int r, long long cap_order, long long cap_simplices) {
  (void)cap_order;
  const Field& F = *h.field;
  GsigmaCrResult out;
  Building base(F, h.n, cap_simplices);
  out.base = is_cr(fixed_complex(base, inner_autos(h)));
  if (r > 1) {
    const Field& E = Field::get(F.p(), F.m() * r);
    Embedding em = make_embedding(F, E);
    std::vector<Mat> gens;
    for (const auto& g : h.generators.empty() ? h.elements : h.generators) gens.push_back(map_entries(em, g));
    BuildingAuto sigma = BuildingAuto::frobenius(F.m());  // x -> x^q, fixed field F_q
    for (const auto& g : gens)
      if (!(frobenius_map(E, g, F.m()) == g))
        throw Error(Errc::precondition, "subgroup entries are not fixed by the chosen Frobenius");
    Building ext(E, h.n, cap_simplices);
    MatGroup h_ext = closure(E, h.n, gens, h.order());
    SigmaCrResult s = sigma_cr(ext, h_ext, sigma);
    out.has_extension = true;
    out.extension_cr = s.building.cr;
    out.extension_definitional = s.definitional;
    out.agree = (out.base.cr == s.building.cr) && s.agree;
  }
  return out;
}

CliffordResult clifford_check(const Building& b, const MatGroup& h, const MatGroup& n) {
  const Field& F = b.field();
  if (!is_normal_in(F, n, h)) throw Error(Errc::precondition, "N is not a normal subgroup of H");
  CliffordResult out;
  out.h_verdict = is_cr(fixed_complex(b, inner_autos(h)));
  out.n_verdict = is_cr(fixed_complex(b, inner_autos(n)));
  out.consistent = !out.h_verdict.cr || out.n_verdict.cr;
  return out;
}

namespace {

// ---- the join building X(K) for a block Levi subgroup K ----

struct JoinBuilding {
  const Field* field;
  int n;
  std::vector<int> sizes;
  Mat conj, conj_inv;                      // identity when K is standard
  std::vector<const Building*> locals;     // one per block, null for size-1 blocks
  std::vector<std::unique_ptr<Building>> owned;
  // a simplex is one local flag id per block, -1 meaning the empty flag;
  // at least one coordinate is not -1
  std::vector<std::vector<int>> simplices;
};

JoinBuilding make_join_building(const Field& F, int n, const LeviBlockGroup& k, long long cap_simplices) {
  JoinBuilding jb;
  jb.field = &F;
  jb.n = n;
  jb.sizes = k.sizes;
  jb.conj = k.conj ? *k.conj : Mat::identity(n);
  jb.conj_inv = inverse_or_throw(F, jb.conj);
  int total = 0;
  for (int s : k.sizes) total += s;
  if (total != n) throw Error(Errc::invalid_argument, "K block sizes must sum to n");

  std::map<int, const Building*> by_size;
  for (int s : k.sizes) {
    if (s >= 2 && !by_size.count(s)) {
      jb.owned.push_back(std::make_unique<Building>(F, s, cap_simplices));
      by_size[s] = jb.owned.back().get();
    }
  }
  for (int s : jb.sizes) jb.locals.push_back(s >= 2 ? by_size[s] : nullptr);

  // all tuples of local flags (or empty), minus the all-empty tuple
  std::vector<std::vector<int>> tuples{{}};
  for (size_t i = 0; i < jb.sizes.size(); ++i) {
    std::vector<std::vector<int>> next;
    long long nflags = jb.locals[i] ? (long long)jb.locals[i]->flags().size() : 0;
    for (const auto& t : tuples)
      for (long long f = -1; f < nflags; ++f) {
        auto u = t;
        u.push_back((int)f);
        next.push_back(std::move(u));
      }
    tuples = std::move(next);
    if ((long long)tuples.size() > cap_simplices)
      throw Error(Errc::cap_exceeded, "join building exceeds simplex cap");
  }
  for (auto& t : tuples) {
    bool all_empty = true;
    for (int f : t)
      if (f >= 0) all_empty = false;
    if (!all_empty) jb.simplices.push_back(std::move(t));
  }
  std::sort(jb.simplices.begin(), jb.simplices.end());
  return jb;
}

bool join_opposite(const JoinBuilding& jb, const std::vector<int>& a, const std::vector<int>& c) {
  for (size_t i = 0; i < jb.sizes.size(); ++i) {
    if ((a[i] < 0) != (c[i] < 0)) return false;  // whole factor is a Levi only opposite itself
    if (a[i] < 0) continue;
    if (!jb.locals[i]->opposite(jb.locals[i]->flags()[a[i]], jb.locals[i]->flags()[c[i]])) return false;
  }
  return true;
}

// Block permutation induced by an element normalizing K, in standard
// coordinates. Throws when the element does not permute the blocks.
std::vector<int> block_permutation(const JoinBuilding& jb, const Mat& g_std) {
  const Field& F = *jb.field;
  std::vector<Subspace> blocks = standard_blocks(F, jb.n, jb.sizes);
  std::vector<int> perm(jb.sizes.size(), -1);
  for (size_t i = 0; i < blocks.size(); ++i) {
    Subspace img = apply_matrix(F, g_std, blocks[i]);
    int target = -1;
    for (size_t j = 0; j < blocks.size(); ++j)
      if (img == blocks[j]) target = (int)j;
    if (target < 0) throw Error(Errc::precondition, "H does not normalize K");
    perm[i] = target;
  }
  return perm;
}

// Image of a join simplex under a normalizing element (standard coordinates).
std::vector<int> join_apply(const JoinBuilding& jb, const Mat& g_std, const std::vector<int>& perm,
                            const std::vector<int>& simplex) {
  const Field& F = *jb.field;
  std::vector<int> offsets(jb.sizes.size(), 0);
  for (size_t i = 1; i < jb.sizes.size(); ++i) offsets[i] = offsets[i - 1] + jb.sizes[i - 1];
  std::vector<int> out(simplex.size(), -1);
  for (size_t i = 0; i < simplex.size(); ++i) {
    if (simplex[i] < 0) {
      out[perm[i]] = -1;
      continue;
    }
    int src = offsets[i], dst = offsets[perm[i]], sz = jb.sizes[i];
    // the submatrix carrying block i onto block perm(i)
    Mat sub(sz, sz);
    for (int r = 0; r < sz; ++r)
      for (int c = 0; c < sz; ++c) sub.at(r, c) = g_std.at(dst + r, src + c);
    const Building& lb = *jb.locals[i];
    Flag f = lb.flags()[simplex[i]];
    Flag img;
    for (int v : f.verts) {
      int id = jb.locals[perm[i]]->vertex_id(apply_matrix(F, sub, lb.vertex(v)));
      if (id < 0) throw Error(Errc::internal, "block image is not a local vertex");
      img.verts.push_back(id);
    }
    std::sort(img.verts.begin(), img.verts.end());
    int fid = jb.locals[perm[i]]->flag_id(img);
    if (fid < 0) throw Error(Errc::internal, "block image is not a local flag");
    out[perm[i]] = fid;
  }
  return out;
}

}  // namespace

RelativeCrResult relative_cr(const Field& F, int n, const MatGroup& h, const LeviBlockGroup& k,
                             long long cap_order) {
  RelativeCrResult out;
  Mat conj = k.conj ? *k.conj : Mat::identity(n);
  Mat conj_inv = inverse_or_throw(F, conj);
  const auto& hgens = h.generators.empty() ? h.elements : h.generators;

  // precondition: every generator permutes the blocks of K
  std::vector<Subspace> blocks;
  {
    auto std_blocks = standard_blocks(F, n, k.sizes);
    for (const auto& bsub : std_blocks) blocks.push_back(apply_matrix(F, conj, bsub));
  }
  std::vector<Mat> hgens_std;
  for (const auto& g : hgens) {
    Mat g_std = mul(F, mul(F, conj_inv, g), conj);
    hgens_std.push_back(g_std);
    for (const auto& bsub : blocks) {
      Subspace img = apply_matrix(F, g, bsub);
      bool hit = false;
      for (const auto& other : blocks)
        if (img == other) hit = true;
      if (!hit) throw Error(Errc::precondition, "H does not normalize K");
    }
  }

  // rational points of K: block-diagonal invertibles, conjugated
  std::vector<Mat> k_elements;
  {
    __int128 order = 1;
    for (int s : k.sizes) order *= gl_order(F, s, cap_order);
    if (order > cap_order) throw Error(Errc::cap_exceeded, "K(F_q) too large to enumerate");
    std::vector<std::vector<Mat>> factor_elems;
    for (int s : k.sizes) factor_elems.push_back(gl_elements(F, s, cap_order));
    std::vector<size_t> idx(k.sizes.size(), 0);
    while (true) {
      Mat m(n, n);
      int off = 0;
      for (size_t i = 0; i < k.sizes.size(); ++i) {
        const Mat& f = factor_elems[i][idx[i]];
        for (int r = 0; r < k.sizes[i]; ++r)
          for (int c = 0; c < k.sizes[i]; ++c) m.at(off + r, off + c) = f.at(r, c);
        off += k.sizes[i];
      }
      k_elements.push_back(mul(F, mul(F, conj, m), conj_inv));
      size_t i = 0;
      while (i < idx.size() && idx[i] + 1 == factor_elems[i].size()) idx[i++] = 0;
      if (i == idx.size()) break;
      ++idx[i];
    }
  }

  // ---- direct test over cocharacters of K ----
  // P_lambda only depends on the weight preorder, so weights range over
  // {0..n-1}^n; lambda = conjugates by rational points of K. For each
  // arising parabolic flag record every Levi decomposition it carries.
  std::map<std::vector<Subspace>, std::set<std::vector<Subspace>>> parabolic_levis;
  {
    std::vector<long long> w(n, 0);
    while (true) {
      CocharParabolic cp = cocharacter_parabolic(F, n, w);
      std::vector<Subspace> base_chain = cp.chain;
      std::vector<Subspace> base_pieces;
      for (const auto& blk : cp.levi_blocks) base_pieces.push_back(span_of_coords(n, blk));
      for (const auto& kk : k_elements) {
        std::vector<Subspace> chain, pieces;
        for (const auto& u : base_chain) chain.push_back(apply_matrix(F, kk, u));
        for (const auto& u : base_pieces) pieces.push_back(apply_matrix(F, kk, u));
        std::sort(pieces.begin(), pieces.end());
        parabolic_levis[chain].insert(pieces);
      }
      int i = 0;
      while (i < n && w[i] + 1 == n) w[i++] = 0;
      if (i == n) break;
      ++w[i];
    }
  }
  auto h_stabilizes_all = [&](const std::vector<Subspace>& subs) {
    for (const auto& g : hgens)
      for (const auto& u : subs)
        if (!(apply_matrix(F, g, u) == u)) return false;
    return true;
  };
  for (const auto& [chain, levis] : parabolic_levis) {
    if (!h_stabilizes_all(chain)) continue;
    bool found = false;
    for (const auto& pieces : levis)
      if (h_stabilizes_all(pieces)) {
        found = true;
        break;
      }
    if (!found) {
      out.direct = false;
      break;
    }
  }

  // ---- via the join building X(K) ----
  JoinBuilding jb = make_join_building(F, n, k, 100000);
  out.k_simplices = (long long)jb.simplices.size();
  std::vector<std::vector<int>> perms;
  for (const auto& g_std : hgens_std) perms.push_back(block_permutation(jb, g_std));
  std::vector<std::vector<int>> stable;
  for (const auto& s : jb.simplices) {
    bool ok = true;
    for (size_t gi = 0; gi < hgens_std.size() && ok; ++gi)
      if (!(join_apply(jb, hgens_std[gi], perms[gi], s) == s)) ok = false;
    if (ok) stable.push_back(s);
  }
  out.k_stable = (long long)stable.size();
  out.via_building = true;
  for (const auto& s : stable) {
    bool found = false;
    for (const auto& t : stable)
      if (join_opposite(jb, s, t)) {
        found = true;
        break;
      }
    if (!found) {
      out.via_building = false;
      break;
    }
  }

  out.agree = (out.direct == out.via_building);
  return out;
}

AutoCrResult sigma_variant_cr(const Building& b, const MatGroup& h, const AutoSet& sigma) {
  AutoCrResult out;
  AutoSet gamma = sigma;
  for (const auto& g : h.generators.empty() ? h.elements : h.generators)
    gamma.autos.push_back(BuildingAuto::inner_auto(g));
  out.fc = fixed_complex(b, gamma);
  out.building = is_cr(out.fc);
  out.definitional = definitional_cr(b, h, sigma.autos);
  out.agree = (out.building.cr == out.definitional);
  return out;
}

TauSearchResult tau_search(const MatGroup& h, int r_max, long long cap_order, long long cap_simplices) {
  const Field& F = *h.field;
  TauSearchResult out;
  for (int r = 1; r <= r_max; ++r) {
    const Field& E = Field::get(F.p(), F.m() * r);
    Building ext(E, h.n, cap_simplices);
    Embedding em = make_embedding(F, E);
    std::vector<Mat> elems;
    for (const auto& x : h.elements) elems.push_back(map_entries(em, x));
    std::vector<Mat> gens;
    for (const auto& g : h.generators.empty() ? h.elements : h.generators) gens.push_back(map_entries(em, g));
    MatGroup h_ext = group_from_elements(E, h.n, elems, gens);

    std::vector<Mat> ambient = gl_elements(E, h.n, cap_order);  // throws when the scan cap is hit
    MatGroup norm = normalizer(E, ambient, h_ext);
    std::vector<Mat> norm_gens = small_generating_set(E, h.n, norm.elements);
    MatGroup norm_group = group_from_elements(E, h.n, norm.elements, norm_gens);

    TauAttempt at;
    at.r = r;
    at.normalizer_order = norm_group.order();
    at.h_cr = is_cr(fixed_complex(ext, inner_autos(h_ext))).cr;
    at.normalizer_cr = is_cr(fixed_complex(ext, inner_autos(norm_group))).cr;
    out.attempts.push_back(at);
    if (at.h_cr == at.normalizer_cr) {
      out.found = r;
      return out;
    }
  }
  return out;
}

QuotientTransferResult quotient_transfer_check(const Building& b, const MatGroup& h, long long cap_order) {
  const Field& F = b.field();
  QuotientTransferResult out;
  out.h_verdict = is_cr(fixed_complex(b, inner_autos(h)));
  std::vector<Mat> gens = h.generators.empty() ? h.elements : h.generators;
  for (Fel a = 1; a < F.q(); ++a) {
    Mat s = Mat::identity(h.n);
    for (int i = 0; i < h.n; ++i) s.at(i, i) = a;
    gens.push_back(s);
  }
  MatGroup zh = closure(F, h.n, gens, cap_order);
  out.saturated_order = zh.order();
  out.saturated_verdict = is_cr(fixed_complex(b, inner_autos(zh)));
  out.consistent = (out.h_verdict.cr == out.saturated_verdict.cr);
  return out;
}

}  // namespace crb
