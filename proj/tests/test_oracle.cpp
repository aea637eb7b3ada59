#include <doctest.h>

#include <random>

#include "oracle.hpp"

using namespace crb;

namespace {

Mat mat_of(const Field& F, std::vector<std::vector<long long>> rows) {
  Mat m((int)rows.size(), (int)rows[0].size());
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = F.from_int(rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("invariant subspaces of small groups") {
  const Field& F = Field::get(2, 1);

  SUBCASE("trivial group keeps every subspace") {
    auto lat = invariant_subspaces(F, trivial_group(F, 2), 100000);
    CHECK(lat.members.size() == 5);  // 0, three lines, the plane
  }
  SUBCASE("a transvection keeps only its axis") {
    MatGroup h = closure(F, 2, {mat_of(F, {{1, 1}, {0, 1}})}, 10);
    auto lat = invariant_subspaces(F, h, 100000);
    REQUIRE(lat.members.size() == 3);
    CHECK(lat.members[0] == zero_subspace(2));
    CHECK(lat.members[1] == subspace_from_rows(F, 2, mat_of(F, {{1, 0}})));
    CHECK(lat.members[2] == full_space(2));
    // hasse diagram of a 3-chain
    CHECK(lat.hasse == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  }
  SUBCASE("the full group leaves only 0 and the whole space") {
    MatGroup gl2 = closure(F, 2, {mat_of(F, {{0, 1}, {1, 0}}), mat_of(F, {{1, 1}, {0, 1}})}, 10);
    auto lat = invariant_subspaces(F, gl2, 100000);
    CHECK(lat.members.size() == 2);
  }
}

TEST_CASE("semisimplicity of the natural module") {
  const Field& F2 = Field::get(2, 1);
  const Field& F3 = Field::get(3, 1);
  CHECK(is_semisimple_module(F2, trivial_group(F2, 2), 100000));
  CHECK(!is_semisimple_module(F2, closure(F2, 2, {mat_of(F2, {{1, 1}, {0, 1}})}, 10), 100000));
  CHECK(is_semisimple_module(F3, closure(F3, 2, {mat_of(F3, {{0, 1}, {1, 0}})}, 10), 100000));
  // swap in characteristic 2 is unipotent
  CHECK(!is_semisimple_module(F2, closure(F2, 2, {mat_of(F2, {{0, 1}, {1, 0}})}, 10), 100000));
}

TEST_CASE("semisimplicity is conjugation invariant") {
  const Field& F = Field::get(3, 1);
  std::mt19937 rng(31);
  auto ambient = gl_elements(F, 2, 10000);
  for (int t = 0; t < 25; ++t) {
    const Mat& a = ambient[rng() % ambient.size()];
    const Mat& g = ambient[rng() % ambient.size()];
    MatGroup h = closure(F, 2, {a}, 1000);
    Mat gi = inverse_or_throw(F, g);
    MatGroup hc = closure(F, 2, {mul(F, mul(F, g, a), gi)}, 1000);
    CHECK(is_semisimple_module(F, h, 100000) == is_semisimple_module(F, hc, 100000));
  }
}

TEST_CASE("subspace cap is enforced") {
  const Field& F = Field::get(2, 1);
  CHECK_THROWS_AS(invariant_subspaces(F, trivial_group(F, 3), 5), Error);
}
