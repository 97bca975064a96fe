#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbifano/toric_git.hpp"

using namespace orbifano;

namespace {

// weight data for the degree-10/3 one-singular-point family
const IntMat kD133{{1, 1, 0, 0, 0}, {0, 0, 1, 1, 3}};        // + bundle (1,3)
const IntMat kD103{{1, 1, 2, 1, 0, 0}, {0, 0, 1, 2, 1, 1}};  // + bundles (2,2),(2,2)
const IntMat kD473{{1, 0, 0, -1, -1}, {0, 3, 3, 2, 1}};      // + bundle (0,6)

Cone cone_of(std::vector<IVec> gens) { return cone_from_generators(std::move(gens)); }

}  // namespace

TEST_CASE("is_standard") {
  CHECK(is_standard(kD133));
  CHECK_FALSE(is_standard(IntMat{{1, 1, 1}, {0, 0, 2}}));
  CHECK(is_standard(IntMat::identity(2)));
}

TEST_CASE("is_wellformed") {
  CHECK(is_wellformed(kD133));
  CHECK(is_wellformed(kD103));
  CHECK(is_wellformed(kD473));
  CHECK_FALSE(is_wellformed(IntMat{{1, 1, 1}, {0, 0, 2}}));
  CHECK(is_wellformed(IntMat{{1, 2, 3, 5, 10}}));
  CHECK_FALSE(is_wellformed(IntMat{{1, 2, 2}}));  // quasi-reflection on x0
}

TEST_CASE("wellform fixes the curve presentation from the worked example") {
  IntMat c{{1, 1, 1}, {0, 0, 2}};
  auto w = wellform(c);
  CHECK(w.d == IntMat{{1, 1, 0}, {0, 0, 1}});
  // restricted bundle classes transform with the presentation
  CHECK(w.transform_class({2, 2}) == IVec{1, 1});
  // idempotence
  auto w2 = wellform(w.d);
  CHECK(w2.d == w.d);
  CHECK(is_standard(w.d));
}

TEST_CASE("wellform divides a global stabilizer and quasi-reflections") {
  auto w = wellform(IntMat{{2, 2, 4}});
  CHECK(w.d == IntMat{{1, 1, 2}});
  auto w2 = wellform(IntMat{{1, 2, 2}});
  CHECK(w2.d == IntMat{{1, 1, 1}});
  // already well-formed input is unchanged
  auto w3 = wellform(kD103);
  CHECK(w3.d == kD103);
}

TEST_CASE("chamber_of on the degree-10/3 family") {
  IVec omega = {1, 1};  // -K_F - L1 - L2 = (5,6)-(4,4)
  Cone c = chamber_of(kD103, omega);
  Cone expected = cone_of({{2, 1}, {1, 2}});
  CHECK(c.same_cone_as(expected));
  // any interior stability condition gives the same chamber
  Cone c2 = chamber_of(kD103, {3, 4});
  CHECK(c2.same_cone_as(c));
  // the bundle class (2,2) sits in the nef cone
  CHECK(c.contains({2, 2}));
  CHECK(c.contains_interior({1, 1}));
  CHECK_FALSE(c.contains({1, 0}));
}

TEST_CASE("chamber_of single-row and the k=4 root family") {
  Cone c1 = chamber_of(IntMat{{1, 2, 3, 5}}, {1});
  CHECK(c1.rays == std::vector<IVec>{{1}});

  // omega = -K_F - Lambda = (-1,9) - (0,6) = (-1,3)
  Cone c4 = chamber_of(kD473, {-1, 3});
  Cone expected = cone_of({{0, 1}, {-1, 2}});
  CHECK(c4.same_cone_as(expected));
  CHECK(c4.contains({0, 6}));  // the bundle is nef
  CHECK(c4.contains_interior({-1, 3}));
}

TEST_CASE("walls are rejected") {
  CHECK_THROWS_AS(chamber_of(kD103, {2, 1}), OnWall);  // on a chamber ray
  CHECK_THROWS_AS(chamber_of(kD103, {1, 0}), OnWall);  // on a column ray
  CHECK_THROWS_AS(chamber_of(IntMat{{1, 1, 3}}, {0}), OnWall);
}

TEST_CASE("irrelevant ideal of the degree-10/3 family is the 3x3 product") {
  auto gens = irrelevant_ideal(kD103, {1, 1});
  REQUIRE(gens.size() == 9);
  for (const auto& g : gens) {
    REQUIRE(g.size() == 2);
    CHECK(g[0] <= 2);
    CHECK(g[1] >= 3);
  }
}

TEST_CASE("irrelevant ideal of the projective plane") {
  auto gens = irrelevant_ideal(IntMat{{1, 1, 1}}, {1});
  REQUIRE(gens.size() == 3);
  CHECK(gens[0] == std::vector<std::size_t>{0});
  CHECK(gens[1] == std::vector<std::size_t>{1});
  CHECK(gens[2] == std::vector<std::size_t>{2});
}

TEST_CASE("fans from chambers") {
  SUBCASE("weighted projective plane P(1,1,3)") {
    auto fan = fan_from_chamber(IntMat{{1, 1, 3}}, {1});
    CHECK(fan.dim == 2);
    CHECK(fan.max_cones.size() == 3);
  }
  SUBCASE("P^3 from a single row") {
    auto fan = fan_from_chamber(IntMat{{1, 1, 1, 1}}, {1});
    CHECK(fan.dim == 3);
    CHECK(fan.max_cones.size() == 4);
  }
  SUBCASE("degree-10/3 family ambient: nine maximal cones") {
    auto fan = fan_from_chamber(kD103, {1, 1});
    CHECK(fan.dim == 4);
    CHECK(fan.max_cones.size() == 9);
  }
  SUBCASE("non-well-formed input refused") {
    CHECK_THROWS_AS(fan_from_chamber(IntMat{{1, 1, 1}, {0, 0, 2}}, {1, 1}),
                    NotWellFormed);
  }
}

TEST_CASE("charts of the degree-10/3 family match the worked example") {
  auto cs = charts(kD103, {1, 1});
  REQUIRE(cs.size() == 9);
  bool seen23 = false, seen03 = false;
  for (const auto& c : cs) {
    if (c.pivots == std::vector<std::size_t>{2, 3}) {
      seen23 = true;
      auto [n, w] = c.cyclic_weights();
      CHECK(n == 3);
      CHECK(w == IVec{1, 1, 1, 1});
    }
    if (c.pivots == std::vector<std::size_t>{0, 3}) {
      seen03 = true;
      auto [n, w] = c.cyclic_weights();
      CHECK(n == 2);
      CHECK(w == IVec{0, 1, 1, 1});
    }
  }
  CHECK(seen23);
  CHECK(seen03);
}

TEST_CASE("projective plane charts are smooth") {
  auto cs = charts(IntMat{{1, 1, 1}}, {1});
  REQUIRE(cs.size() == 3);
  for (const auto& c : cs) CHECK(c.stabilizer.is_trivial());
}

TEST_CASE("weight matrix constructor validates") {
  CHECK_THROWS_AS(WeightMatrix::make(IntMat{{1, -1}}), std::invalid_argument);
  auto w = WeightMatrix::make(kD133);
  CHECK(w.anticanonical() == IVec{2, 5});
}
