#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbifano/invariants.hpp"

#include <set>

using namespace orbifano;

TEST_CASE("closed-form invariants on table rows") {
  auto f = invariants_of(4, make_rat(7, 3));
  CHECK(f.h0 == 2);
  CHECK(f.r == 9);
  CHECK(f.moduli == 0);
  CHECK(f.n == 3);

  auto g = invariants_of(1, make_rat(25, 3));
  CHECK(g.h0 == 9);
  CHECK(g.r == 2);
  CHECK(g.moduli == -8);

  auto h = invariants_of(6, 1);
  CHECK(h.h0 == 0);
  CHECK(h.r == 11);
  CHECK(h.moduli == 0);
  CHECK(h.n == 1);
  CHECK(h.c2hat == 3);

  CHECK_THROWS_AS(invariants_of(1, 1), BadCongruence);
  CHECK_THROWS_AS(invariants_of(3, make_rat(-3, 1)), BadCongruence);
}

TEST_CASE("poincare series starts 1, h0 and matches direct section counts") {
  // P(1,1,3): coefficients are the counts of monomials of degree 5n in
  // weights (1,1,3)
  auto ps = poincare_series(1, make_rat(25, 3), 8);
  CHECK(ps[0] == 1);
  CHECK(ps[1] == 9);  // 1 + d - k/3
  for (std::size_t n = 0; n < ps.size(); ++n) {
    long count = 0;
    long target = static_cast<long>(5 * n);
    for (long a = 0; a <= target; ++a)
      for (long c = 0; 3 * c + a <= target; ++c) ++count;  // b is determined
    CHECK(ps[n] == count);
  }
  // the t^2 coefficient of the closed form is 1 + 3d for every family
  CHECK(ps[2] == 26);
  auto ps2 = poincare_series(4, make_rat(7, 3), 3);
  CHECK(ps2[2] == 8);  // 1 + 3*(7/3)
}

TEST_CASE("poincare coefficients are nonnegative integers for all 29 families") {
  for (const auto& fam : cascade()) {
    auto ps = poincare_series(fam.k, fam.d, 12);
    CHECK(ps.size() == 12);
    for (const auto& c : ps) CHECK(c >= 0);
    CHECK(ps[0] == 1);
  }
}

TEST_CASE("defect bounds") {
  auto b61 = defect_bounds(6, 1);
  CHECK(b61.sigma_min == 1);
  CHECK(b61.sigma_max == 3);
  auto b7 = defect_bounds(7, make_rat(4, 3));
  CHECK(b7.sigma_min == 2);
  auto b1 = defect_bounds(1, make_rat(10, 3));
  CHECK(b1.sigma_min == 0);
  CHECK(b1.sigma_max == 0);
}

TEST_CASE("cascade produces the 29 family names") {
  auto fams = cascade();
  CHECK(fams.size() == 29);
  std::set<std::string> names;
  for (const auto& f : fams) names.insert(f.name);
  CHECK(names.size() == 29);
  CHECK(names.count("S_{1,25/3}"));
  CHECK(names.count("B_{1,16/3}"));
  CHECK(names.count("X_{1,16/3}"));
  CHECK(names.count("B_{2,8/3}"));
  CHECK(names.count("X_{2,8/3}"));
  CHECK(names.count("X_{6,1}"));
  // k=5 cascade is the root and one blow-up
  std::set<std::string> k5;
  for (const auto& f : fams)
    if (f.k == 5) k5.insert(f.name);
  CHECK(k5 == std::set<std::string>{"X_{5,5/3}", "X_{5,2/3}"});
  // k=3 runs through the five integer degrees
  int k3 = 0;
  for (const auto& f : fams)
    if (f.k == 3) ++k3;
  CHECK(k3 == 5);
}

TEST_CASE("candidate sieve") {
  auto sieve = candidate_sieve();
  auto find = [&](long k, const Rat& d) -> const CandidateStatus& {
    for (const auto& c : sieve)
      if (c.k == k && c.d == d) return c;
    throw std::runtime_error("candidate not found");
  };
  SUBCASE("worked exclusions") {
    CHECK(find(2, make_rat(23, 3)).verdict == CandidateVerdict::ExcludedByCover);
    CHECK(find(2, make_rat(23, 3)).sigma_min == 1);
    CHECK(find(5, make_rat(8, 3)).verdict == CandidateVerdict::Undecided);
    CHECK(find(7, make_rat(4, 3)).sigma_min == 2);
    CHECK(find(7, make_rat(4, 3)).verdict == CandidateVerdict::ExcludedByCover);
  }
  SUBCASE("defective-table rows match") {
    struct Row {
      long k;
      Rat d;
      long sigma_gt;  // the table asserts sigma > this
      bool occurs;
    };
    const std::vector<Row> table = {
        {2, make_rat(23, 3), 0, false}, {3, Rat(6), 0, false},
        {3, Rat(7), 0, false},          {4, make_rat(13, 3), 0, false},
        {4, make_rat(16, 3), 0, false}, {4, make_rat(19, 3), 1, false},
        {5, make_rat(8, 3), 0, false},  {5, make_rat(11, 3), 0, false},
        {5, make_rat(14, 3), 1, false}, {6, Rat(1), 0, true},
        {6, Rat(2), 0, true},           {6, Rat(3), 1, false},
        {7, make_rat(4, 3), 1, false},  {7, make_rat(7, 3), 1, false},
    };
    for (const auto& row : table) {
      const auto& c = find(row.k, row.d);
      CHECK(c.sigma_min > row.sigma_gt);
      if (row.occurs) {
        CHECK(c.verdict == CandidateVerdict::Occurs);
      } else if (row.k == 5 && row.d == make_rat(8, 3)) {
        // the sieve alone cannot exclude this one
        CHECK(c.verdict == CandidateVerdict::Undecided);
      } else {
        CHECK(c.verdict == CandidateVerdict::ExcludedByCover);
      }
    }
  }
  SUBCASE("six per-k degree windows") {
    std::map<long, Rat> dmax = {{1, make_rat(25, 3)}, {2, make_rat(20, 3)},
                                {3, Rat(5)},          {4, make_rat(10, 3)},
                                {5, make_rat(8, 3)},  {6, Rat(2)}};
    std::map<long, Rat> dmin = {{1, make_rat(1, 3)}, {2, make_rat(2, 3)},
                                {3, Rat(1)},         {4, make_rat(1, 3)},
                                {5, make_rat(2, 3)}, {6, Rat(1)}};
    std::map<long, Rat> seen_max, seen_min;
    for (const auto& c : sieve) {
      if (c.verdict == CandidateVerdict::ExcludedByBounds ||
          c.verdict == CandidateVerdict::ExcludedByCover)
        continue;
      long k = static_cast<long>(c.k);
      if (!seen_max.count(k) || c.d > seen_max[k]) seen_max[k] = c.d;
      if (!seen_min.count(k) || c.d < seen_min[k]) seen_min[k] = c.d;
    }
    CHECK(seen_max.size() == 6);  // nothing survives beyond k = 6
    for (long k = 1; k <= 6; ++k) {
      CHECK(seen_max[k] == dmax[k]);
      CHECK(seen_min[k] == dmin[k]);
    }
  }
  SUBCASE("survivors are the families plus the three spurious pairs") {
    std::set<std::pair<Int, Rat>> survivors;
    for (const auto& c : sieve)
      if (c.verdict == CandidateVerdict::Occurs ||
          c.verdict == CandidateVerdict::Undecided)
        survivors.insert({c.k, c.d});
    std::set<std::pair<Int, Rat>> expected;
    for (const auto& f : cascade()) expected.insert({f.k, f.d});
    expected.insert({2, make_rat(20, 3)});
    expected.insert({4, make_rat(10, 3)});
    expected.insert({5, make_rat(8, 3)});
    CHECK(survivors == expected);
  }
}
