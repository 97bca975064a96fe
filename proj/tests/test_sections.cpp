#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbifano/sections.hpp"

using namespace orbifano;

namespace {

const IntMat kD103{{1, 1, 2, 1, 0, 0}, {0, 0, 1, 2, 1, 1}};
const IntMat kD133{{1, 1, 0, 0, 0}, {0, 0, 1, 1, 3}};

std::vector<std::string> xvars(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

}  // namespace

TEST_CASE("monomial polynomial arithmetic and parsing") {
  auto vars = xvars(3);
  auto p = MonomialPoly::parse("x0^2 x1 - 3 x2", vars);
  CHECK(p.term_count() == 2);
  auto q = MonomialPoly::parse("3 x2", vars);
  CHECK((p + q).term_count() == 1);
  CHECK((p - p).is_zero());
  auto r = MonomialPoly::parse("x0 + x1", vars) * MonomialPoly::parse("x0 - x1", vars);
  CHECK(r == MonomialPoly::parse("x0^2 - x1^2", vars));
  CHECK(MonomialPoly::parse("x0^2 - x1^2", vars).str(vars) == "x0^2 - x1^2");
}

TEST_CASE("monomial bases") {
  SUBCASE("P(1,1,3), degree 3 has 5 monomials") {
    auto w = WeightMatrix::make(IntMat{{1, 1, 3}});
    auto basis = monomial_basis(w, {3});
    CHECK(basis.size() == 5);
  }
  SUBCASE("every returned monomial has the requested class") {
    auto w = WeightMatrix::make(kD103);
    for (const auto& cls : {IVec{2, 2}, IVec{4, 3}, IVec{1, 2}}) {
      for (const auto& mono : monomial_basis(w, cls)) CHECK(w.d.mul_vec(mono) == cls);
    }
  }
  SUBCASE("class zero gives the constant") {
    auto w = WeightMatrix::make(kD103);
    auto basis = monomial_basis(w, {0, 0});
    REQUIRE(basis.size() == 1);
    CHECK(vec_is_zero(basis[0]));
  }
  SUBCASE("the rank-5 model ambient: class (1,...,1) is the boundary section only") {
    // every second-block column has an entry 2, so none of those coordinates
    // can appear; exhaustive enumeration leaves the single square-free
    // monomial in the first block
    IntMat d{{1, 0, 0, 0, 0, 2, 1, 1, 1, 1},
             {0, 1, 0, 0, 0, 1, 2, 1, 1, 1},
             {0, 0, 1, 0, 0, 1, 1, 2, 1, 1},
             {0, 0, 0, 1, 0, 1, 1, 1, 2, 1},
             {0, 0, 0, 0, 1, 1, 1, 1, 1, 2}};
    auto w = WeightMatrix::make(d);
    auto basis = monomial_basis(w, {1, 1, 1, 1, 1});
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == Monomial{1, 1, 1, 1, 1, 0, 0, 0, 0, 0});
  }
}

TEST_CASE("restricted bases reproduce the curve computation") {
  auto w = WeightMatrix::make(kD103);
  auto basis = monomial_basis(w, {2, 2});
  auto rb = restricted_basis(basis, {2, 4, 5});
  REQUIRE(rb.size() == 2);
  // x0 x3 and x1 x3
  CHECK(rb[0] == Monomial{1, 0, 0, 1, 0, 0});
  CHECK(rb[1] == Monomial{0, 1, 0, 1, 0, 0});
  CHECK(restricted_basis(basis, {}) == basis);
  CHECK(restricted_basis(basis, {0, 1, 2, 3, 4, 5}).empty());
}

TEST_CASE("pfaffians") {
  auto zero = MonomialPoly::zero();
  std::vector<std::vector<MonomialPoly>> z(5, std::vector<MonomialPoly>(5, zero));
  CHECK(pfaffian4(z, 0).is_zero());

  // generic antisymmetric matrix in 10 independent symbols
  std::vector<std::string> vars;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      vars.push_back("a" + std::to_string(i) + std::to_string(j));
  auto sym = [&](int i, int j) {
    std::string name = "a" + std::to_string(std::min(i, j)) + std::to_string(std::max(i, j));
    Monomial m(vars.size(), Int(0));
    for (std::size_t k = 0; k < vars.size(); ++k)
      if (vars[k] == name) m[k] = 1;
    auto p = MonomialPoly::monomial(m, 1);
    return i < j ? p : MonomialPoly::zero() - p;
  };
  std::vector<std::vector<MonomialPoly>> a(5, std::vector<MonomialPoly>(5, zero));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (i != j) a[i][j] = sym(i, j);
  for (std::size_t r = 0; r < 5; ++r) CHECK(pfaffian4(a, r).term_count() == 3);

  auto bad = a;
  bad[1][2] = bad[2][1];
  CHECK_THROWS_AS(pfaffian4(bad, 0), NotAntisymmetric);
}

TEST_CASE("homogeneity detection") {
  auto w = WeightMatrix::make(kD103);
  auto vars = xvars(6);
  auto p = MonomialPoly::parse("x0 x3 + x2 x4", vars);
  auto cls = check_homogeneity(p, w);
  REQUIRE(cls.has_value());
  CHECK(*cls == IVec{2, 2});

  auto w1 = WeightMatrix::make(IntMat{{1}});
  auto mixed = MonomialPoly::parse("x0 + x0^2", {"x0"});
  CHECK_FALSE(check_homogeneity(mixed, w1).has_value());
}

TEST_CASE("substitution identities") {
  // u^4 v^4 - (u v)^4 = 0 under x0 -> u^4, x1 -> u v, y -> v^4
  std::vector<std::string> src = {"x0", "x1", "y"};
  std::vector<std::string> tgt = {"u", "v"};
  std::vector<MonomialPoly> subst = {
      MonomialPoly::parse("u^4", tgt),
      MonomialPoly::parse("u v", tgt),
      MonomialPoly::parse("v^4", tgt),
  };
  auto relation = MonomialPoly::parse("y x0 - x1^4", src);
  CHECK(check_substitution_identity(subst, relation));

  // identity substitution on a nonzero binomial is not an identity
  std::vector<MonomialPoly> ident = {
      MonomialPoly::parse("x0", src),
      MonomialPoly::parse("x1", src),
      MonomialPoly::parse("y", src),
  };
  CHECK_FALSE(check_substitution_identity(ident, relation));
}

TEST_CASE("induced singularities: one third point on the degree-10/3 surface") {
  auto w = WeightMatrix::make(kD103);
  auto rep = ci_singularity_report(w, {1, 1}, {{2, 2}, {2, 2}});
  CHECK(rep.clean());
  auto b = rep.basket();
  CHECK(b.size() == 1);
  CHECK(b.count_of(one_third_1_1()) == 1);
  // the two singular curve strata are proven disjoint from the surface
  int disjoint = 0;
  for (const auto& f : rep.findings)
    if (f.kind == FindingKind::StratumDisjoint) ++disjoint;
  CHECK(disjoint == 2);
}

TEST_CASE("induced singularities: hypersurfaces in weighted projective spaces") {
  SUBCASE("quartic in P(1,1,1,3)") {
    auto w = WeightMatrix::make(IntMat{{1, 1, 1, 3}});
    auto rep = ci_singularity_report(w, {1}, {{4}});
    CHECK(rep.clean());
    CHECK(rep.basket().count_of(one_third_1_1()) == 1);
    CHECK(rep.basket().size() == 1);
  }
  SUBCASE("sextic in P(1,1,3,3)") {
    auto w = WeightMatrix::make(IntMat{{1, 1, 3, 3}});
    auto rep = ci_singularity_report(w, {1}, {{6}});
    CHECK(rep.clean());
    CHECK(rep.basket().count_of(one_third_1_1()) == 2);
    CHECK(rep.basket().size() == 2);
  }
  SUBCASE("degree (4,6) intersection in P(1,2,2,3,3)") {
    auto w = WeightMatrix::make(IntMat{{1, 2, 2, 3, 3}});
    auto rep = ci_singularity_report(w, {1}, {{4}, {6}});
    CHECK(rep.clean());
    CHECK(rep.basket().count_of(one_third_1_1()) == 2);
    CHECK(rep.basket().size() == 2);
  }
  SUBCASE("degree (6,6) intersection in P(2,2,3,3,3)") {
    auto w = WeightMatrix::make(IntMat{{2, 2, 3, 3, 3}});
    auto rep = ci_singularity_report(w, {1}, {{6}, {6}});
    CHECK(rep.clean());
    CHECK(rep.basket().count_of(one_third_1_1()) == 4);
    CHECK(rep.basket().size() == 4);
  }
}

TEST_CASE("induced singularities via a tangent direction of the stratum") {
  // the singular point sits on the one-dimensional singular stratum itself
  auto w = WeightMatrix::make(kD133);
  auto rep = ci_singularity_report(w, {1, 2}, {{1, 3}});
  CHECK(rep.clean());
  CHECK(rep.basket().count_of(one_third_1_1()) == 1);
  CHECK(rep.basket().size() == 1);
}

TEST_CASE("toric surface with no bundles reports its own chart singularities") {
  IntMat d{{1, 1, 2, 0}, {0, 1, 3, 1}};
  auto w = WeightMatrix::make(d);
  auto rep = ci_singularity_report(w, w.anticanonical(), {});
  CHECK(rep.clean());
  CHECK(rep.basket().count_of(one_third_1_1()) == 1);
  CHECK(rep.basket().size() == 1);
}
