#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbifano/singularity.hpp"

#include <random>
#include <set>

using namespace orbifano;

namespace {

IVec apply2(const IntMat& g, const IVec& v) { return g.mul_vec(v); }

IntMat random_gl2(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  IntMat u = IntMat::identity(2);
  for (int s = 0; s < 6; ++s) {
    Int c = coef(rng);
    if (s % 2 == 0)
      for (std::size_t k = 0; k < 2; ++k) u.at(0, k) += c * u.at(1, k);
    else
      for (std::size_t k = 0; k < 2; ++k) u.at(1, k) += c * u.at(0, k);
  }
  return u;
}

// Hirzebruch-Jung evaluation oracle: [b1,...,bs] -> b1 - 1/(b2 - 1/(...))
Rat hj_value(const std::vector<Int>& bs) {
  Rat val = Rat(bs.back());
  for (auto it = bs.rbegin() + 1; it != bs.rend(); ++it) val = Rat(*it) - 1 / val;
  return val;
}

}  // namespace

TEST_CASE("cone_singularity on fixed cones") {
  CHECK(cone_singularity({1, 0}, {0, 1}).is_smooth());
  // a cone of the fan of P(1,1,3)
  CHECK(cone_singularity({1, 0}, {-1, -3}) == CyclicQuotient::make(3, 1));
  CHECK(cone_singularity({1, 0}, {1, 2}) == a1_point());
  // brute-force normal form cross-check for small determinants: the A_2 cone
  CHECK(cone_singularity({0, 1}, {3, -2}) == CyclicQuotient::make(3, 2));
  CHECK_THROWS_AS(cone_singularity({1, 2}, {-1, -2}), DegenerateCone);
  CHECK_THROWS_AS(cone_singularity({2, 0}, {0, 1}), std::invalid_argument);
}

TEST_CASE("cone_singularity is GL(2,Z) and swap invariant") {
  std::mt19937 rng(42);
  std::vector<std::pair<IVec, IVec>> cones = {
      {{1, 0}, {-1, -3}}, {{1, 0}, {1, 2}},   {{0, 1}, {5, -2}},
      {{0, 1}, {12, -7}}, {{1, 1}, {-1, 2}},  {{2, -1}, {-1, 2}},
      {{0, 1}, {7, -3}},  {{0, 1}, {11, -4}},
  };
  for (const auto& [u, v] : cones) {
    auto base = cone_singularity(u, v);
    CHECK(cone_singularity(v, u) == base);
    for (int t = 0; t < 12; ++t) {
      IntMat g = random_gl2(rng);
      CHECK(cone_singularity(apply2(g, u), apply2(g, v)) == base);
    }
  }
}

TEST_CASE("normal form canonicalizes a vs inverse and stores the smaller") {
  auto s = CyclicQuotient::make(5, 3);  // 3^{-1} = 2 mod 5
  CHECK(s.a == 2);
  CHECK(CyclicQuotient::make(5, 2) == s);
  CHECK(CyclicQuotient::make(3, 1).str() == "1/3(1,1)");
  CHECK(CyclicQuotient::make(2, 1).str() == "A1");
}

TEST_CASE("hj_expansion examples verified against the continued-fraction oracle") {
  CHECK(hj_expansion(CyclicQuotient::make(3, 1)) == std::vector<Int>{3});
  CHECK(hj_expansion(a1_point()) == std::vector<Int>{2});

  // 12/7: oracle evaluation fixes the expansion
  auto e = hj_expansion(CyclicQuotient::make(12, 7));
  CHECK(e == std::vector<Int>{2, 4, 2});
  CHECK(hj_value(e) == make_rat(12, 7));

  CHECK_THROWS_AS(hj_expansion(CyclicQuotient::smooth()), SmoothPoint);

  // every expansion entry is >= 2 and evaluates back to r/a
  for (int r = 2; r <= 40; ++r)
    for (int a = 1; a < r; ++a) {
      if (gcd_int(r, a) != 1) continue;
      CyclicQuotient s{Int(r), Int(a)};  // not normalized on purpose
      auto bs = hj_expansion(s);
      for (const auto& b : bs) CHECK(b >= 2);
      CHECK(hj_value(bs) == make_rat(r, a));
    }
}

TEST_CASE("class T criterion") {
  CHECK(is_class_T(CyclicQuotient::make(4, 1)));
  CHECK_FALSE(is_class_T(CyclicQuotient::make(3, 1)));
  CHECK(is_class_T(CyclicQuotient::smooth()));
  // all du Val A_n are class T
  for (int n = 1; n <= 20; ++n) CHECK(is_class_T(CyclicQuotient::make(n + 1, n)));
}

TEST_CASE("class T agrees with the parametric family for r <= 200") {
  // family 1/(w r^2)(1, w r a - 1) with gcd(a, r) = 1, normalized
  std::set<std::pair<Int, Int>> family;
  for (int r = 1; r * r <= 200; ++r)
    for (int w = 1; r * r * w <= 200; ++w) {
      Int R = Int(r) * r * w;
      if (R == 1) continue;
      for (int a = 1; a <= r * w + 1; ++a) {
        if (gcd_int(Int(a), Int(r)) != 1) continue;
        Int A = (Int(w) * r * a - 1) % R;
        if (A < 0) A += R;
        if (A == 0 || gcd_int(A, R) != 1) continue;
        auto s = CyclicQuotient::make(R, A);
        family.insert({s.r, s.a});
      }
    }
  for (int R = 2; R <= 200; ++R)
    for (int A = 1; A < R; ++A) {
      if (gcd_int(Int(R), Int(A)) != 1) continue;
      auto s = CyclicQuotient::make(R, A);
      bool in_family = family.count({s.r, s.a}) > 0;
      CHECK(is_class_T(s) == in_family);
    }
}

TEST_CASE("singularity content of cones") {
  SUBCASE("the 1/3(1,1) cone is pure residue") {
    auto c = singularity_content_of_cone({1, 0}, {-1, -3});
    CHECK(c.n == 0);
    REQUIRE(c.residue.has_value());
    CHECK(*c.residue == one_third_1_1());
  }
  SUBCASE("smooth cones of width w at height 1 split into w primitive T-cones") {
    for (int w = 1; w <= 6; ++w) {
      auto c = singularity_content_of_cone({0, 1}, {Int(w), 1});
      CHECK(c.n == w);
      CHECK_FALSE(c.residue.has_value());
    }
  }
  SUBCASE("1/12(1,7) has one T-cone and residue 1/3(1,1)") {
    auto c = singularity_content_of_cone({0, 1}, {12, -7});
    CHECK(c.n == 1);
    REQUIRE(c.residue.has_value());
    CHECK(*c.residue == one_third_1_1());
  }
  SUBCASE("du Val A_2 cone is fully T-decomposable") {
    auto c = singularity_content_of_cone({0, 1}, {3, -2});
    CHECK(c.n == 3);
    CHECK_FALSE(c.residue.has_value());
  }
}

TEST_CASE("residues are never class T; residue 1/3(1,1) happens exactly on the known family") {
  std::set<std::pair<Int, Int>> family;  // 1/(3(3m+1))(1, 2(3m+1)-1)
  for (int m = 0; 3 * (3 * m + 1) <= 200; ++m) {
    Int q = 3 * m + 1;
    auto s = CyclicQuotient::make(3 * q, 2 * q - 1);
    family.insert({s.r, s.a});
  }
  for (int R = 2; R <= 200; ++R)
    for (int A = 1; A < R; ++A) {
      if (gcd_int(Int(R), Int(A)) != 1) continue;
      auto s = CyclicQuotient::make(R, A);
      auto c = singularity_content_of_cone({0, 1}, {s.r, -s.a});
      if (c.residue) {
        CHECK_FALSE(is_class_T(*c.residue));
        bool is_third = (*c.residue == one_third_1_1());
        CHECK(is_third == (family.count({s.r, s.a}) > 0));
      } else {
        CHECK(is_class_T(s));
      }
    }
}

TEST_CASE("content is GL(2,Z) invariant") {
  std::mt19937 rng(11);
  std::vector<std::pair<IVec, IVec>> cones = {
      {{0, 1}, {12, -7}}, {{0, 1}, {9, -2}}, {{1, 1}, {-1, 2}}, {{0, 1}, {15, -4}}};
  for (const auto& [u, v] : cones) {
    auto base = singularity_content_of_cone(u, v);
    for (int t = 0; t < 10; ++t) {
      IntMat g = random_gl2(rng);
      auto c = singularity_content_of_cone(apply2(g, u), apply2(g, v));
      CHECK(c.n == base.n);
      CHECK(c.residue.has_value() == base.residue.has_value());
      if (c.residue) CHECK(*c.residue == *base.residue);
    }
  }
}

TEST_CASE("quotient_from_weights normalizes non-faithful and reflection actions") {
  CHECK(quotient_from_weights(3, 1, 1) == one_third_1_1());
  CHECK(quotient_from_weights(3, 2, 2) == one_third_1_1());
  CHECK(quotient_from_weights(2, 0, 1).is_smooth());
  CHECK(quotient_from_weights(3, 0, 1).is_smooth());
  CHECK(quotient_from_weights(2, 1, 1) == a1_point());
  CHECK(quotient_from_weights(3, 1, 2) == a2_point());
  CHECK(quotient_from_weights(6, 2, 2) == one_third_1_1());  // mu_2 acts trivially
  CHECK(quotient_from_weights(4, 2, 2) == a1_point());
  CHECK(quotient_from_weights(1, 0, 0).is_smooth());
}

TEST_CASE("basket keeps canonical order and counts") {
  Basket b;
  b.add(one_third_1_1());
  b.add(a1_point());
  b.add(one_third_1_1());
  b.add(CyclicQuotient::smooth());
  CHECK(b.size() == 3);
  CHECK(b.count_of(one_third_1_1()) == 2);
  CHECK(b.str() == "{A1, 2 x 1/3(1,1)}");
}
