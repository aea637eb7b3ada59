#include <doctest.h>

#include <random>

#include "field.hpp"

using namespace crb;

TEST_CASE("prime fields use the modulus x") {
  const Field& f2 = Field::get(2, 1);
  CHECK(f2.q() == 2);
  CHECK(f2.modulus() == std::vector<int>{0, 1});
  const Field& f3 = Field::get(3, 1);
  CHECK(f3.q() == 3);
  CHECK(f3.add(2, 2) == 1);
  CHECK(f3.mul(2, 2) == 1);
}

TEST_CASE("F_4 modulus is the unique irreducible quadratic") {
  // independent check: a monic quadratic over F_2 is irreducible iff it has
  // no root; scan all four candidates
  std::vector<std::vector<int>> irreducible;
  for (int c0 = 0; c0 < 2; ++c0)
    for (int c1 = 0; c1 < 2; ++c1) {
      auto value = [&](int x) { return (c0 + c1 * x + x * x) % 2; };
      if (value(0) != 0 && value(1) != 0) irreducible.push_back({c0, c1, 1});
    }
  REQUIRE(irreducible.size() == 1);
  CHECK(irreducible[0] == std::vector<int>{1, 1, 1});

  const Field& f4 = Field::get(2, 2);
  CHECK(f4.q() == 4);
  CHECK(f4.modulus() == irreducible[0]);
  // w^2 = w + 1 with w = code 2
  CHECK(f4.mul(2, 2) == 3);
}

TEST_CASE("constructor rejects bad parameters") {
  CHECK_THROWS_AS(Field::get(4, 1), Error);
  CHECK_THROWS_AS(Field::get(2, 0), Error);
  CHECK_THROWS_AS(Field::get(2, 17), Error);  // 2^17 > 2^16 cap
  CHECK_NOTHROW(Field::get(2, 16));
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(12345);
  for (auto [p, m] : {std::pair{2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2}, {5, 1}, {3, 3}, {2, 11}}) {
    const Field& F = Field::get(p, m);
    for (int t = 0; t < 200; ++t) {
      Fel a = rng() % F.q(), b = rng() % F.q(), c = rng() % F.q();
      CHECK(F.add(a, b) == F.add(b, a));
      CHECK(F.mul(a, b) == F.mul(b, a));
      CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
      CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
      CHECK(F.mul(a, 1) == a);
      CHECK(F.add(a, 0) == a);
    }
  }
}

TEST_CASE("frobenius is a field automorphism") {
  std::mt19937 rng(99);
  for (auto [p, m] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    const Field& F = Field::get(p, m);
    for (int r = 1; r <= m; ++r)
      for (int t = 0; t < 100; ++t) {
        Fel a = rng() % F.q(), b = rng() % F.q();
        CHECK(F.frobenius(F.mul(a, b), r) == F.mul(F.frobenius(a, r), F.frobenius(b, r)));
        CHECK(F.frobenius(F.add(a, b), r) == F.add(F.frobenius(a, r), F.frobenius(b, r)));
      }
    // x^(p^m) = x
    for (Fel a = 0; a < F.q(); ++a) CHECK(F.frobenius(a, m) == a);
  }
  // fixed points of x -> x^2 on F_4 are exactly the prime field
  const Field& f4 = Field::get(2, 2);
  for (Fel a = 0; a < 4; ++a) CHECK((f4.frobenius(a, 1) == a) == (a < 2));
}

TEST_CASE("from_int reduction") {
  const Field& f3 = Field::get(3, 1);
  CHECK(f3.from_int(-1) == 2);
  CHECK(f3.from_int(7) == 1);
  const Field& f4 = Field::get(2, 2);
  CHECK(f4.from_int(2) == 2);
  CHECK(f4.from_int(4) == 3);  // x^2 = x + 1
  CHECK_THROWS_AS(f4.from_int(-1), Error);
}

TEST_CASE("subfield embedding is a field homomorphism") {
  const Field& f2 = Field::get(2, 1);
  const Field& f4 = Field::get(2, 2);
  const Field& f16 = Field::get(2, 4);
  Embedding e24 = make_embedding(f2, f4);
  CHECK(e24(0) == 0);
  CHECK(e24(1) == 1);

  Embedding e = make_embedding(f4, f16);
  CHECK(e(0) == 0);
  CHECK(e(1) == 1);
  for (Fel a = 0; a < 4; ++a)
    for (Fel b = 0; b < 4; ++b) {
      CHECK(e(f4.add(a, b)) == f16.add(e(a), e(b)));
      CHECK(e(f4.mul(a, b)) == f16.mul(e(a), e(b)));
    }
  // injectivity and image inside the Frobenius-fixed subfield
  CHECK(e(2) != e(3));
  for (Fel a = 0; a < 4; ++a) CHECK(f16.frobenius(e(a), 2) == e(a));
  CHECK_THROWS_AS(make_embedding(f4, Field::get(2, 3)), Error);
}
