#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbifano/polygon.hpp"

#include <random>

using namespace orbifano;

namespace {

// rows 26, 9, 7, 5 and 12 of the polygon table
FanoPolygon row26() { return FanoPolygon::make({{-1, 2}, {-2, 1}, {1, -1}}); }
FanoPolygon row9() {
  return FanoPolygon::make({{1, 1}, {-1, 2}, {-2, 1}, {-1, -1}, {1, -2}, {2, -1}});
}
FanoPolygon row7() {
  return FanoPolygon::make(
      {{2, 1}, {1, 2}, {-1, 2}, {-2, 1}, {-2, -1}, {-1, -2}, {1, -1}});
}
FanoPolygon row5() {
  return FanoPolygon::make(
      {{2, 1}, {1, 2}, {-1, 2}, {-2, 1}, {-2, -1}, {-1, -2}, {1, -2}, {2, -1}});
}
FanoPolygon row12() { return FanoPolygon::make({{3, 1}, {-3, 1}, {0, -1}}); }

FanoPolygon square() { return FanoPolygon::make({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}); }

}  // namespace

TEST_CASE("validation accepts the table rows and the square") {
  CHECK_NOTHROW(row26());
  CHECK_NOTHROW(square());
  CHECK(row26().size() == 3);
}

TEST_CASE("validation failures name the offending vertex") {
  CHECK_THROWS_AS(FanoPolygon::make({{1, 0}, {0, 1}, {-2, -2}}), NonPrimitiveVertex);
  // origin on an edge
  CHECK_THROWS_AS(FanoPolygon::make({{0, 1}, {-2, 1}, {2, -1}}), OriginNotInterior);
  CHECK_THROWS_AS(FanoPolygon::make({{1, 0}, {0, 1}, {-1, 1}}), OriginNotInterior);
  // three consecutive collinear vertices
  CHECK_THROWS_AS(FanoPolygon::make({{1, 0}, {1, 1}, {1, 2}, {-1, 1}, {-1, -3}}),
                  NotConvex);
}

TEST_CASE("input vertex order does not matter") {
  auto a = FanoPolygon::make({{-1, 2}, {-2, 1}, {1, -1}});
  auto b = FanoPolygon::make({{1, -1}, {-2, 1}, {-1, 2}});
  CHECK(a == b);
}

TEST_CASE("singularity content of table rows") {
  SUBCASE("row 26: two T-cones and one 1/3(1,1)") {
    auto c = singularity_content(row26());
    CHECK(c.n == 2);
    CHECK(c.basket.size() == 1);
    CHECK(c.basket.count_of(one_third_1_1()) == 1);
  }
  SUBCASE("row 9: pure residue hexagon") {
    auto c = singularity_content(row9());
    CHECK(c.n == 0);
    CHECK(c.basket.count_of(one_third_1_1()) == 6);
  }
  SUBCASE("row 7") {
    auto c = singularity_content(row7());
    CHECK(c.n == 2);
    CHECK(c.basket.count_of(one_third_1_1()) == 5);
  }
}

TEST_CASE("face fans") {
  CHECK(face_fan(row26()).rays.size() == 3);
  CHECK(face_fan(row5()).rays.size() == 8);
  CHECK(face_fan(square()).rays.size() == 4);
}

TEST_CASE("toric degrees") {
  Fan2 p2;
  p2.rays = {{1, 0}, {0, 1}, {-1, -1}};
  CHECK(toric_degree(p2) == Rat(9));
  Fan2 p113;
  p113.rays = {{1, 0}, {0, 1}, {-1, -3}};
  CHECK(toric_degree(p113) == make_rat(25, 3));
  CHECK(toric_degree(face_fan(row9())) == Rat(2));
  // the (+-1,+-1) square generates an index-2 sublattice: the quotient of
  // P^1 x P^1 with four A_1 points, degree 12 - 8 - 0
  CHECK(toric_degree(face_fan(square())) == Rat(4));
}

TEST_CASE("ray lattice index") {
  CHECK(ray_lattice_index(face_fan(row9())) == 3);
  Fan2 p2;
  p2.rays = {{1, 0}, {0, 1}, {-1, -1}};
  CHECK(ray_lattice_index(p2) == 1);
  CHECK(ray_lattice_index(face_fan(row12())) == 3);
}

TEST_CASE("class group and Fano index") {
  Fan2 p113;
  p113.rays = {{1, 0}, {0, 1}, {-1, -3}};
  auto cl = class_group(p113);
  CHECK(cl.free_rank == 1);
  CHECK(cl.invariant_factors.empty());
  CHECK(fano_index(p113) == 5);

  Fan2 p2;
  p2.rays = {{1, 0}, {0, 1}, {-1, -1}};
  CHECK(fano_index(p2) == 3);

  auto cl9 = class_group(face_fan(row9()));
  CHECK(cl9.free_rank == 4);
  REQUIRE(cl9.invariant_factors.size() == 1);
  CHECK(cl9.invariant_factors[0] == 3);
  CHECK(fano_index(face_fan(row9())) == 1);
}

TEST_CASE("content is invariant under unimodular transforms of the polygon") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (auto base : {row26(), row9(), row7(), row5()}) {
    auto expect = singularity_content(base);
    for (int t = 0; t < 8; ++t) {
      IntMat g = IntMat::identity(2);
      for (int s = 0; s < 5; ++s) {
        Int c = coef(rng);
        if (s % 2 == 0)
          for (int k = 0; k < 2; ++k) g.at(0, k) += c * g.at(1, k);
        else
          for (int k = 0; k < 2; ++k) g.at(1, k) += c * g.at(0, k);
      }
      std::vector<IVec> verts;
      for (const auto& v : base.vertices) verts.push_back(g.mul_vec(v));
      auto img = FanoPolygon::make(verts);
      CHECK(singularity_content(img) == expect);
    }
  }
}

TEST_CASE("family matching with ambiguity resolution") {
  std::vector<FamilyKey> families = {
      {"S_{1,25/3}", 1, make_rat(25, 3)},
      {"B_{2,8/3}", 2, make_rat(8, 3)},
      {"X_{2,8/3}", 2, make_rat(8, 3)},
      {"X_{6,2}", 6, 2},
  };
  auto p13 = FanoPolygon::make({{1, 1}, {-1, 2}, {-1, -1}, {2, -1}});
  std::vector<AmbiguityEntry> resolutions = {{row12(), "B_{2,8/3}"},
                                             {p13, "X_{2,8/3}"}};
  CHECK(match_family(row26(), families, resolutions).name == "S_{1,25/3}");
  CHECK(match_family(row12(), families, resolutions).name == "B_{2,8/3}");
  CHECK(match_family(p13, families, resolutions).name == "X_{2,8/3}");
  CHECK(match_family(row9(), families, resolutions).name == "X_{6,2}");
  CHECK_THROWS_AS(match_family(row5(), families, resolutions), NoFamily);
}
