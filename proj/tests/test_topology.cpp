#include <doctest.h>

#include <random>
#include <set>

#include "topology.hpp"

using namespace crb;

namespace {

Mat mat_of(const Field& F, std::vector<std::vector<long long>> rows) {
  Mat m((int)rows.size(), (int)rows[0].size());
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = F.from_int(rows[i][j]);
  return m;
}

// face closure of a facet list, for hand-built fixtures
SimplicialComplex complex_from_facets(int num_vertices, const std::vector<std::vector<int>>& facets) {
  SimplicialComplex sc;
  sc.num_vertices = num_vertices;
  std::set<std::vector<int>> all;
  for (auto facet : facets) {
    std::sort(facet.begin(), facet.end());
    for (unsigned mask = 1; mask < (1u << facet.size()); ++mask) {
      std::vector<int> face;
      for (size_t i = 0; i < facet.size(); ++i)
        if (mask & (1u << i)) face.push_back(facet[i]);
      all.insert(face);
    }
  }
  for (const auto& f : all) {
    int d = (int)f.size() - 1;
    if ((int)sc.simplices.size() <= d) sc.simplices.resize(d + 1);
    sc.simplices[d].push_back(f);
  }
  for (auto& level : sc.simplices) std::sort(level.begin(), level.end());
  return sc;
}

IntMat random_int_mat(std::mt19937& rng, int r, int c) {
  IntMat m(r, std::vector<Bigint>(c));
  for (auto& row : m)
    for (auto& e : row) e = (long long)(rng() % 11) - 5;
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  IntMat c(a.size(), std::vector<Bigint>(b[0].size(), 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k)
      for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Bigint det(IntMat m) {
  // fraction-free Gaussian elimination (Bareiss)
  int n = (int)m.size();
  Bigint sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

TEST_CASE("smith normal form on known matrices") {
  SnfResult s1 = smith_normal_form({{2, 0}, {0, 4}});
  CHECK(s1.diagonal == std::vector<Bigint>{2, 4});
  SnfResult s2 = smith_normal_form({{0, 2}, {3, 0}});
  CHECK(s2.diagonal == std::vector<Bigint>{1, 6});
  SnfResult s3 = smith_normal_form({{1, 2}, {3, 4}});
  CHECK(s3.diagonal == std::vector<Bigint>{1, 2});
  SnfResult s4 = smith_normal_form({{2, 4}, {4, 8}});
  CHECK(s4.diagonal == std::vector<Bigint>{2});
  CHECK(s4.rank == 1);
}

TEST_CASE("smith normal form transforms are unimodular and reproduce the input") {
  std::mt19937 rng(77);
  for (int t = 0; t < 40; ++t) {
    int r = 1 + (int)(rng() % 5), c = 1 + (int)(rng() % 5);
    IntMat a = random_int_mat(rng, r, c);
    IntMat u, v;
    SnfResult s = smith_normal_form_with_transforms(a, u, v);
    Bigint du = det(u), dv = det(v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    IntMat uav = mat_mul(mat_mul(u, a), v);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        Bigint expect = (i == j && i < (int)s.diagonal.size()) ? s.diagonal[i] : Bigint(0);
        CHECK(uav[i][j] == expect);
      }
    for (size_t i = 1; i < s.diagonal.size(); ++i) CHECK(s.diagonal[i] % s.diagonal[i - 1] == 0);
  }
}

TEST_CASE("reduced homology of basic complexes") {
  SUBCASE("a single point is contractible") {
    auto sc = complex_from_facets(1, {{0}});
    auto hp = reduced_homology(sc);
    CHECK(hp.all_zero());
  }
  SUBCASE("three isolated points") {
    auto sc = complex_from_facets(3, {{0}, {1}, {2}});
    auto hp = reduced_homology(sc);
    CHECK(hp.reduced_betti == std::vector<long long>{2});
  }
  SUBCASE("a hollow triangle is a circle") {
    auto sc = complex_from_facets(3, {{0, 1}, {1, 2}, {0, 2}});
    auto hp = reduced_homology(sc);
    CHECK(hp.reduced_betti == std::vector<long long>{0, 1});
    CHECK(hp.torsion_free());
  }
  SUBCASE("the boundary of a tetrahedron is a 2-sphere") {
    auto sc = complex_from_facets(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    auto hp = reduced_homology(sc);
    CHECK(hp.reduced_betti == std::vector<long long>{0, 0, 1});
  }
  SUBCASE("the six vertex projective plane has 2-torsion") {
    auto sc = complex_from_facets(
        6, {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5}, {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}});
    auto hp = reduced_homology(sc);
    CHECK(hp.reduced_betti == std::vector<long long>{0, 0, 0});
    REQUIRE(hp.torsion.size() == 3);
    CHECK(hp.torsion[1] == std::vector<Bigint>{2});
    CHECK(classify(hp, 2).tag == TopoTag::Other);
  }
  SUBCASE("empty complex") {
    SimplicialComplex sc;
    auto hp = reduced_homology(sc);
    CHECK(hp.empty_complex);
    CHECK(classify(hp, 0).tag == TopoTag::PointLike);
  }
}

TEST_CASE("order complexes of fixed point sets") {
  const Field& F = Field::get(2, 1);

  SUBCASE("full GL_2(F_2) building: three isolated vertices") {
    Building b(F, 2, 1000);
    FixedComplex fc = fixed_complex(b, inner_autos(trivial_group(F, 2)));
    auto sc = order_complex(fc);
    CHECK(sc.num_vertices == 3);
    CHECK(sc.dim() == 0);
    auto hp = reduced_homology(sc);
    CHECK(hp.reduced_betti == std::vector<long long>{2});
  }
  SUBCASE("full GL_3(F_2) building subdivides into 35 vertices and 42 edges") {
    Building b(F, 3, 100000);
    FixedComplex fc = fixed_complex(b, inner_autos(trivial_group(F, 3)));
    auto sc = order_complex(fc);
    CHECK(sc.num_vertices == 35);
    REQUIRE(sc.dim() == 1);
    CHECK(sc.simplices[1].size() == 42);
  }
  SUBCASE("single stable flag gives a point") {
    Building b(F, 2, 1000);
    MatGroup u = closure(F, 2, {mat_of(F, {{1, 1}, {0, 1}})}, 10);
    FixedComplex fc = fixed_complex(b, inner_autos(u));
    REQUIRE(fc.stable.size() == 1);
    auto hp = reduced_homology(order_complex(fc));
    CHECK(hp.all_zero());
    CHECK(classify(hp, fc.poset_dim()).tag == TopoTag::PointLike);
  }
}

TEST_CASE("homology of the full buildings and subdivision invariance") {
  struct Case {
    int p, n;
    std::vector<long long> betti;
  };
  for (const auto& c : {Case{2, 2, {2}}, Case{3, 2, {3}}, Case{2, 3, {0, 8}}}) {
    const Field& F = Field::get(c.p, 1);
    Building b(F, c.n, 100000);
    auto direct = reduced_homology(flag_complex(b));
    CHECK(direct.reduced_betti == c.betti);
    CHECK(direct.torsion_free());
    FixedComplex fc = fixed_complex(b, inner_autos(trivial_group(F, c.n)));
    auto subdivided = reduced_homology(order_complex(fc));
    CHECK(subdivided.reduced_betti == c.betti);
    CHECK(subdivided.torsion_free());
  }
}

TEST_CASE("classification of fixed complexes") {
  const Field& F3 = Field::get(3, 1);

  SUBCASE("apartment fixed by the torus is one circle") {
    Building b(F3, 3, 100000);
    MatGroup torus = closure(
        F3, 3, {mat_of(F3, {{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}), mat_of(F3, {{1, 0, 0}, {0, 2, 0}, {0, 0, 1}}),
                mat_of(F3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}})},
        100);
    FixedComplex fc = fixed_complex(b, inner_autos(torus));
    CHECK(fc.stable.size() == 12);
    auto hp = reduced_homology(order_complex(fc));
    TopoClass tc = classify(hp, fc.poset_dim());
    CHECK(tc.tag == TopoTag::SphereBouquetLike);
    CHECK(tc.degree == 1);
    CHECK(tc.count == 1);
    auto search = levi_sphere_containment(fc, 1'000'000);
    CHECK(search.status == LeviSphereSearch::Status::Found);
  }
  SUBCASE("full building classification") {
    const Field& F2 = Field::get(2, 1);
    Building b(F2, 3, 100000);
    FixedComplex fc = fixed_complex(b, inner_autos(trivial_group(F2, 3)));
    auto hp = reduced_homology(order_complex(fc));
    TopoClass tc = classify(hp, fc.poset_dim());
    CHECK(tc == TopoClass{TopoTag::SphereBouquetLike, 1, 8});
  }
  SUBCASE("unipotent fixed set is point-like with no levi sphere") {
    const Field& F2 = Field::get(2, 1);
    Building b(F2, 2, 1000);
    MatGroup u = closure(F2, 2, {mat_of(F2, {{1, 1}, {0, 1}})}, 10);
    FixedComplex fc = fixed_complex(b, inner_autos(u));
    auto search = levi_sphere_containment(fc, 1'000'000);
    CHECK(search.status == LeviSphereSearch::Status::NotFound);
  }
  SUBCASE("swap eigenlines over F_3 form a 0-sphere") {
    Building b(F3, 2, 1000);
    MatGroup h = closure(F3, 2, {mat_of(F3, {{0, 1}, {1, 0}})}, 10);
    FixedComplex fc = fixed_complex(b, inner_autos(h));
    CHECK(fc.stable.size() == 2);
    auto search = levi_sphere_containment(fc, 1'000'000);
    REQUIRE(search.status == LeviSphereSearch::Status::Found);
    CHECK(search.decomposition.size() == 2);
    TopoClass tc = classify(reduced_homology(order_complex(fc)), fc.poset_dim());
    CHECK(tc == TopoClass{TopoTag::SphereBouquetLike, 0, 1});
  }
  SUBCASE("the rank-three apartment classifies as one 2-sphere") {
    Building b(F3, 4, 200000);
    auto flags = apartment_flags(b);
    TopoClass tc = classify(reduced_homology(order_complex_of_flags(b, flags)), 2);
    CHECK(tc == TopoClass{TopoTag::SphereBouquetLike, 2, 1});
  }
  SUBCASE("search cap reports inconclusive") {
    Building b(F3, 3, 100000);
    FixedComplex fc = fixed_complex(b, inner_autos(trivial_group(F3, 3)));
    auto search = levi_sphere_containment(fc, 1);
    CHECK(search.status == LeviSphereSearch::Status::Inconclusive);
  }
}
