#include "orbifano/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace orbifano {

namespace {

void check_congruence(const Int& k, const Rat& d) {
  if (k < 1) throw BadCongruence("k must be at least 1");
  if (d <= 0) throw BadCongruence("degree must be positive");
  Rat frac = d - make_rat(k, 3);
  if (!is_integer(frac)) throw BadCongruence("degree must equal k/3 modulo 1");
}

Int rat_int(const Rat& q) {
  if (!is_integer(q)) throw BadCongruence("expected an integer invariant");
  return rat_num(q);
}

std::string rat_tag(const Rat& d) {
  if (is_integer(d)) return rat_num(d).str();
  return rat_num(d).str() + "/" + rat_den(d).str();
}

}  // namespace

FamilyInvariants invariants_of(const Int& k, const Rat& d) {
  check_congruence(k, d);
  FamilyInvariants f;
  f.k = k;
  f.d = d;
  f.h0 = rat_int(Rat(1) + d - make_rat(k, 3));
  f.r = rat_int(Rat(10) - d + make_rat(k, 3));
  f.n = rat_int(Rat(12) - d - make_rat(5 * k, 3));
  f.c2hat = Rat(f.n) + make_rat(k, 3);
  f.moduli = rat_int(Rat(10) - 2 * d - make_rat(4 * k, 3));
  return f;
}

std::vector<Int> poincare_series(const Int& k, const Rat& d, std::size_t terms) {
  check_congruence(k, d);
  // numerator 1 + (d-1-k/3) t + (d+2k/3) t^2 + (d-1-k/3) t^3 + t^4 over
  // (1-t)^2 (1-t^3)
  std::vector<Rat> num = {Rat(1), d - 1 - make_rat(k, 3), d + make_rat(2 * k, 3),
                          d - 1 - make_rat(k, 3), Rat(1)};
  // denominator expansion: coefficient of t^n in 1/((1-t)^2 (1-t^3)) is
  // sum over 3j <= n of (n - 3j + 1)
  auto den_coef = [](std::size_t n) {
    Int total = 0;
    for (std::size_t j = 0; 3 * j <= n; ++j) total += Int(n - 3 * j + 1);
    return total;
  };
  std::vector<Int> out;
  for (std::size_t n = 0; n < terms; ++n) {
    Rat c = 0;
    for (std::size_t i = 0; i < num.size() && i <= n; ++i)
      c += num[i] * Rat(den_coef(n - i));
    if (!is_integer(c))
      throw BadCongruence("non-integral Poincare coefficient at t^" +
                          std::to_string(n));
    out.push_back(rat_num(c));
  }
  return out;
}

DefectBounds defect_bounds(const Int& k, const Rat& d) {
  auto f = invariants_of(k, d);
  DefectBounds b;
  Int lower = rat_ceil(Rat(k) - make_rat(f.r, 2));
  b.sigma_min = lower < 0 ? Int(0) : lower;
  b.sigma_max = rat_floor(make_rat(k, 2));
  return b;
}

std::string verdict_name(CandidateVerdict v) {
  switch (v) {
    case CandidateVerdict::Occurs: return "occurs";
    case CandidateVerdict::ExcludedByBounds: return "excluded-by-bounds";
    case CandidateVerdict::ExcludedByCover: return "excluded-by-cover";
    case CandidateVerdict::Undecided: return "undecided";
  }
  return "?";
}

std::vector<CandidateStatus> candidate_sieve() {
  // all (k, d) with the right congruence inside the coarse window
  struct Cand {
    Int k;
    Rat d;
    Int sigma_min, sigma_max;
    bool pre_ok;        // passes the closed-form bounds
    bool excluded = false;
    std::string note;
  };
  std::vector<Cand> cands;
  auto family_set = cascade();
  std::set<std::pair<Int, Rat>> occurs;
  for (const auto& f : family_set) occurs.insert({f.k, f.d});

  for (Int k = 1; k <= 9; ++k) {
    Rat dmax = Rat(12) - make_rat(4 * k, 3);
    Rat first = make_rat(k, 3) - Rat(rat_floor(make_rat(k, 3)));
    if (first == 0) first = 1;
    for (Int j = 0;; ++j) {
      Rat d = first + j;
      if (d > 12) break;
      Cand c;
      c.k = k;
      c.d = d;
      Rat h0 = Rat(1) + d - make_rat(k, 3);
      Rat r = Rat(10) - d + make_rat(k, 3);
      c.pre_ok = d <= dmax && h0 >= 0 && r > Rat(k);
      Int lower = rat_ceil(Rat(k) - r / 2);
      c.sigma_min = lower < 0 ? Int(0) : lower;
      c.sigma_max = rat_floor(make_rat(k, 2));
      if (!c.pre_ok) {
        c.excluded = true;
        if (d > dmax)
          c.note = "degree above 12 - 4k/3";
        else if (h0 < 0)
          c.note = "negative anticanonical section count";
        else
          c.note = "rank bound r > k fails";
      }
      cands.push_back(c);
    }
  }
  // iterate the covering exclusion to a fixpoint: a defective candidate needs
  // a degree-3^sigma cover target that is a smooth del Pezzo degree (1..9) or
  // a surviving candidate with at least one 1/3(1,1) point
  bool changed = true;
  while (changed) {
    changed = false;
    std::set<std::pair<Int, Rat>> alive;
    for (const auto& c : cands)
      if (!c.excluded) alive.insert({c.k, c.d});
    for (auto& c : cands) {
      if (c.excluded || c.sigma_min < 1) continue;
      Rat cover_deg = c.d;
      for (Int s = 0; s < c.sigma_min; ++s) cover_deg *= 3;
      bool target = false;
      if (is_integer(cover_deg) && cover_deg >= 1 && cover_deg <= 9)
        target = true;  // a smooth del Pezzo of that degree exists
      if (!target)
        for (const auto& [k2, d2] : alive)
          if (d2 == cover_deg) target = true;
      if (!target) {
        c.excluded = true;
        c.note = "no cover of degree " + rat_tag(cover_deg) + " exists";
        changed = true;
      }
    }
  }
  std::vector<CandidateStatus> out;
  for (const auto& c : cands) {
    CandidateStatus s;
    s.k = c.k;
    s.d = c.d;
    s.sigma_min = c.sigma_min;
    s.sigma_max = c.sigma_max;
    s.note = c.note;
    if (!c.pre_ok)
      s.verdict = CandidateVerdict::ExcludedByBounds;
    else if (c.excluded)
      s.verdict = CandidateVerdict::ExcludedByCover;
    else if (occurs.count({c.k, c.d}))
      s.verdict = CandidateVerdict::Occurs;
    else
      s.verdict = CandidateVerdict::Undecided;
    out.push_back(s);
  }
  return out;
}

std::vector<FamilyName> cascade() {
  struct Root {
    Int k;
    Rat d;
    Int budget;
  };
  const std::vector<Root> roots = {
      {1, make_rat(25, 3), 8}, {2, make_rat(17, 3), 5}, {3, Rat(5), 4},
      {4, make_rat(7, 3), 2},  {5, make_rat(5, 3), 1},  {6, Rat(2), 1},
  };
  std::vector<FamilyName> out;
  auto name_of = [](char series, const Int& k, const Rat& d) {
    return std::string(1, series) + "_{" + k.str() + "," + rat_tag(d) + "}";
  };
  for (const auto& root : roots) {
    for (Int j = 0; j <= root.budget; ++j) {
      Rat d = root.d - j;
      char series = (root.k == 1 && j == 0) ? 'S' : 'X';
      Int fano = (series == 'S') ? 5 : 1;
      out.push_back({name_of(series, root.k, d), root.k, d, series, fano});
    }
  }
  // the two index-two hypersurface families exist alongside the index-one
  // families with the same numerical data
  out.push_back({"B_{1,16/3}", 1, make_rat(16, 3), 'B', 2});
  out.push_back({"B_{2,8/3}", 2, make_rat(8, 3), 'B', 2});
  std::sort(out.begin(), out.end(), [](const FamilyName& a, const FamilyName& b) {
    if (a.k != b.k) return a.k < b.k;
    if (a.d != b.d) return a.d > b.d;
    return a.series < b.series;
  });
  return out;
}

}  // namespace orbifano
