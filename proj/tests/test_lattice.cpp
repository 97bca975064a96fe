#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbifano/lattice.hpp"

#include <random>

using namespace orbifano;

namespace {

IntMat random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo,
                     int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
  return m;
}

// random unimodular matrix as a product of elementary operations
IntMat random_unimodular(std::mt19937& rng, std::size_t n, int steps = 8) {
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  IntMat u = IntMat::identity(n);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    Int c = coef(rng);
    for (std::size_t k = 0; k < n; ++k) u.at(i, k) += c * u.at(j, k);
  }
  return u;
}

}  // namespace

TEST_CASE("smith normal form on fixed examples") {
  SUBCASE("identity is its own form") {
    IntMat m = IntMat::identity(2);
    auto f = smith_normal_form(m);
    CHECK(f.s == IntMat::identity(2));
    CHECK(f.rank == 2);
  }
  SUBCASE("diag(2,4) already in form") {
    IntMat m{{2, 0}, {0, 4}};
    auto f = smith_normal_form(m);
    CHECK(f.s.at(0, 0) == 2);
    CHECK(f.s.at(1, 1) == 4);
  }
  SUBCASE("rows (1,1,1),(0,0,2) has diagonal (1,2)") {
    IntMat m{{1, 1, 1}, {0, 0, 2}};
    auto f = smith_normal_form(m);
    CHECK(f.s.at(0, 0) == 1);
    CHECK(f.s.at(1, 1) == 2);
    CHECK(f.rank == 2);
  }
}

TEST_CASE("smith normal form round trip on random matrices") {
  std::mt19937 rng(20260810);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 5;
    IntMat m = random_matrix(rng, rows, cols, -9, 9);
    auto f = smith_normal_form(m);
    CHECK(f.u.mul(m).mul(f.v) == f.s);
    CHECK(abs_int(det(f.u)) == 1);
    CHECK(abs_int(det(f.v)) == 1);
    // diagonal with divisibility chain
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j) CHECK(f.s.at(i, j) == 0);
    for (std::size_t i = 0; i + 1 < std::min(rows, cols); ++i) {
      if (f.s.at(i + 1, i + 1) != 0) {
        REQUIRE(f.s.at(i, i) != 0);
        CHECK(f.s.at(i + 1, i + 1) % f.s.at(i, i) == 0);
      }
    }
  }
}

TEST_CASE("cokernel on fixed examples") {
  SUBCASE("columns (2,1),(1,2): cyclic of order 3") {
    IntMat m = IntMat::from_cols({{2, 1}, {1, 2}});
    auto g = cokernel(m);
    CHECK(g.free_rank == 0);
    REQUIRE(g.invariant_factors.size() == 1);
    CHECK(g.invariant_factors[0] == 3);
  }
  SUBCASE("identity gives the trivial group") {
    auto g = cokernel(IntMat::identity(3));
    CHECK(g.is_trivial());
  }
  SUBCASE("single column (3,0) in Z^2") {
    IntMat m = IntMat::from_cols({{3, 0}});
    auto g = cokernel(m);
    CHECK(g.free_rank == 1);
    REQUIRE(g.invariant_factors.size() == 1);
    CHECK(g.invariant_factors[0] == 3);
  }
}

TEST_CASE("cokernel invariant under unimodular row and column operations") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 3, k = 1 + trial % 3;
    IntMat m = random_matrix(rng, n, k, -6, 6);
    IntMat u = random_unimodular(rng, n), v = random_unimodular(rng, k);
    auto g1 = cokernel(m);
    auto g2 = cokernel(u.mul(m).mul(v));
    CHECK(g1 == g2);
  }
}

TEST_CASE("gcd of minors") {
  CHECK(gcd_of_minors(IntMat{{1, 1, 1}, {0, 0, 2}}, 2) == 2);
  CHECK(gcd_of_minors(IntMat::identity(2), 2) == 1);
  CHECK(gcd_of_minors(IntMat{{2, 4}}, 1) == 2);
  // all minors vanish
  CHECK(gcd_of_minors(IntMat{{1, 1}, {1, 1}}, 2) == 0);
}

TEST_CASE("enumerate_nonneg_solutions examples") {
  SUBCASE("weights (1,1,3), target 3") {
    IntMat d{{1, 1, 3}};
    auto sols = enumerate_nonneg_solutions(d, {Int(3)});
    REQUIRE(sols.size() == 5);
    CHECK(sols[0] == IVec{3, 0, 0});
    CHECK(sols[1] == IVec{2, 1, 0});
    CHECK(sols[2] == IVec{1, 2, 0});
    CHECK(sols[3] == IVec{0, 3, 0});
    CHECK(sols[4] == IVec{0, 0, 1});
  }
  SUBCASE("target zero gives only the zero vector") {
    IntMat d{{1, 2}, {0, 1}};
    auto sols = enumerate_nonneg_solutions(d, {Int(0), Int(0)});
    REQUIRE(sols.size() == 1);
    CHECK(vec_is_zero(sols[0]));
  }
  SUBCASE("non-convex cone rejected") {
    IntMat d{{1, -1}};
    CHECK_THROWS_AS(enumerate_nonneg_solutions(d, {Int(0)}), NonConvexCone);
  }
}

TEST_CASE("enumerate_nonneg_solutions matches brute force on random positive matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(1, 4);
  for (int trial = 0; trial < 25; ++trial) {
    IntMat d(2, 4);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 4; ++j) d.at(i, j) = dist(rng);
    IVec target = {Int(dist(rng) + 4), Int(dist(rng) + 4)};
    auto sols = enumerate_nonneg_solutions(d, target);
    // every returned v satisfies D v = target exactly
    for (const auto& v : sols) CHECK(d.mul_vec(v) == target);
    // independent bounded brute force
    long count = 0;
    int bound = 14;
    for (int a = 0; a <= bound; ++a)
      for (int b = 0; b <= bound; ++b)
        for (int c = 0; c <= bound; ++c)
          for (int e = 0; e <= bound; ++e) {
            IVec v = {Int(a), Int(b), Int(c), Int(e)};
            if (d.mul_vec(v) == target) ++count;
          }
    CHECK(Int(count) == Int(sols.size()));
  }
}

TEST_CASE("kernel basis and solvers") {
  IntMat d{{1, 1, 2, 1, 0, 0}, {0, 0, 1, 2, 1, 1}};
  auto ker = kernel_basis(d);
  CHECK(ker.size() == 4);
  for (const auto& v : ker) CHECK(vec_is_zero(d.mul_vec(v)));

  auto x = solve_q(d, {Int(2), Int(2)});
  REQUIRE(x.has_value());
  QVec check(2, Rat(0));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 6; ++j) check[i] += Rat(d.at(i, j)) * (*x)[j];
  CHECK(check[0] == Rat(2));
  CHECK(check[1] == Rat(2));

  // inconsistent system over Z
  IntMat m{{2, 0}, {0, 2}};
  CHECK_FALSE(solve_z(m, {Int(1), Int(0)}).has_value());
  CHECK(solve_q(m, {Int(1), Int(0)}).has_value());
}
