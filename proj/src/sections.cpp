#include "orbifano/sections.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace orbifano {

MonomialPoly MonomialPoly::monomial(const Monomial& m, const Rat& c) {
  MonomialPoly p;
  if (c != 0) p.terms[m] = c;
  return p;
}

MonomialPoly MonomialPoly::operator+(const MonomialPoly& o) const {
  MonomialPoly out = *this;
  for (const auto& [m, c] : o.terms) {
    auto it = out.terms.find(m);
    if (it == out.terms.end()) {
      out.terms[m] = c;
    } else {
      it->second += c;
      if (it->second == 0) out.terms.erase(it);
    }
  }
  return out;
}

MonomialPoly MonomialPoly::operator-(const MonomialPoly& o) const {
  MonomialPoly neg;
  for (const auto& [m, c] : o.terms) neg.terms[m] = -c;
  return *this + neg;
}

MonomialPoly MonomialPoly::operator*(const MonomialPoly& o) const {
  MonomialPoly out;
  for (const auto& [m1, c1] : terms)
    for (const auto& [m2, c2] : o.terms) {
      Monomial m = vec_add(m1, m2);
      auto it = out.terms.find(m);
      if (it == out.terms.end()) {
        Rat c = c1 * c2;
        if (c != 0) out.terms[m] = c;
      } else {
        it->second += c1 * c2;
        if (it->second == 0) out.terms.erase(it);
      }
    }
  return out;
}

MonomialPoly MonomialPoly::parse(const std::string& text,
                                 const std::vector<std::string>& vars) {
  MonomialPoly out;
  std::size_t pos = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] {
    while (pos < n && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= n) break;
    Rat sign = 1;
    if (text[pos] == '+') {
      ++pos;
    } else if (text[pos] == '-') {
      sign = -1;
      ++pos;
    } else if (!first) {
      throw std::invalid_argument("poly parse: expected + or - near '" +
                                  text.substr(pos, 8) + "'");
    }
    first = false;
    Rat coef = sign;
    Monomial mono(vars.size(), Int(0));
    bool any = false;
    while (pos < n) {
      skip_ws();
      if (pos >= n || text[pos] == '+' || text[pos] == '-') break;
      if (text[pos] == '*') {
        ++pos;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::size_t start = pos;
        while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        coef *= Rat(Int(text.substr(start, pos - start)));
        any = true;
        continue;
      }
      std::size_t best = vars.size(), best_len = 0;
      for (std::size_t v = 0; v < vars.size(); ++v) {
        const auto& name = vars[v];
        if (name.size() > best_len && text.compare(pos, name.size(), name) == 0) {
          best = v;
          best_len = name.size();
        }
      }
      if (best == vars.size())
        throw std::invalid_argument("poly parse: unknown variable near '" +
                                    text.substr(pos, 8) + "'");
      pos += best_len;
      Int exp = 1;
      if (pos < n && text[pos] == '^') {
        ++pos;
        std::size_t start = pos;
        while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("poly parse: exponent");
        exp = Int(text.substr(start, pos - start));
      }
      mono[best] += exp;
      any = true;
    }
    if (!any) throw std::invalid_argument("poly parse: empty term");
    out = out + MonomialPoly::monomial(mono, coef);
  }
  return out;
}

std::string MonomialPoly::str(const std::vector<std::string>& vars) const {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat ac = c > 0 ? c : Rat(-c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += (c > 0) ? " + " : " - ";
    }
    first = false;
    std::string body;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += vars[i];
      if (m[i] > 1) body += "^" + m[i].str();
    }
    if (ac != 1 || body.empty()) {
      out += to_string(ac);
      if (!body.empty()) out += "*";
    }
    out += body;
  }
  return out;
}

std::vector<Monomial> monomial_basis(const WeightMatrix& w, const IVec& cls) {
  return enumerate_nonneg_solutions(w.d, cls);
}

std::vector<Monomial> restricted_basis(const std::vector<Monomial>& basis,
                                       const std::vector<std::size_t>& kill) {
  std::vector<Monomial> out;
  for (const auto& m : basis) {
    bool keep = true;
    for (auto j : kill)
      if (m[j] != 0) {
        keep = false;
        break;
      }
    if (keep) out.push_back(m);
  }
  return out;
}

MonomialPoly pfaffian4(const std::vector<std::vector<MonomialPoly>>& a,
                       std::size_t removed) {
  if (a.size() != 5) throw std::invalid_argument("pfaffian4: need a 5x5 matrix");
  for (const auto& row : a)
    if (row.size() != 5) throw std::invalid_argument("pfaffian4: need a 5x5 matrix");
  for (std::size_t i = 0; i < 5; ++i) {
    if (!a[i][i].is_zero()) throw NotAntisymmetric("nonzero diagonal");
    for (std::size_t j = i + 1; j < 5; ++j)
      if (!(a[i][j] + a[j][i]).is_zero()) throw NotAntisymmetric("a[i][j] != -a[j][i]");
  }
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < 5; ++i)
    if (i != removed) idx.push_back(i);
  auto j = idx[0], k = idx[1], l = idx[2], m = idx[3];
  return a[j][k] * a[l][m] - a[j][l] * a[k][m] + a[j][m] * a[k][l];
}

std::optional<IVec> check_homogeneity(const MonomialPoly& p, const WeightMatrix& w) {
  std::optional<IVec> cls;
  for (const auto& [m, c] : p.terms) {
    IVec d = w.d.mul_vec(m);
    if (!cls)
      cls = d;
    else if (*cls != d)
      return std::nullopt;
  }
  return cls;
}

bool same_class_mod_rays(const IntMat& rays, const Monomial& v, const Monomial& w) {
  return solve_z(rays, vec_sub(v, w)).has_value();
}

bool check_substitution_identity(const std::vector<MonomialPoly>& substitution,
                                 const MonomialPoly& relation) {
  std::size_t target_vars = 0;
  for (const auto& s : substitution)
    if (!s.terms.empty()) target_vars = s.terms.begin()->first.size();
  MonomialPoly image;
  for (const auto& [m, c] : relation.terms) {
    if (m.size() != substitution.size())
      throw std::invalid_argument("substitution: arity mismatch");
    MonomialPoly term = MonomialPoly::monomial(Monomial(target_vars, Int(0)), c);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (Int e = 0; e < m[i]; ++e) term = term * substitution[i];
    image = image + term;
  }
  return image.is_zero();
}

// ---------------------------------------------------------------------------
// induced-singularity report

Basket CiSingularityReport::basket() const {
  Basket b;
  for (const auto& f : findings)
    if (f.kind == FindingKind::OriginPoint || f.kind == FindingKind::StratumPoints)
      b.add(f.type, f.count);
  return b;
}

bool CiSingularityReport::clean() const {
  for (const auto& f : findings)
    if (f.kind == FindingKind::CannotReduce ||
        f.kind == FindingKind::NotWellFormedLocus ||
        f.kind == FindingKind::Inconclusive)
      return false;
  return true;
}

namespace {

bool supported_within(const Monomial& m, const std::vector<bool>& allowed) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0 && !allowed[i]) return false;
  return true;
}

// system of distinct representatives via backtracking
bool pick_distinct(const std::vector<std::vector<std::size_t>>& candidates,
                   std::size_t at, std::set<std::size_t>& used,
                   std::vector<std::size_t>& out) {
  if (at == candidates.size()) return true;
  for (auto j : candidates[at]) {
    if (used.count(j)) continue;
    used.insert(j);
    out.push_back(j);
    if (pick_distinct(candidates, at + 1, used, out)) return true;
    used.erase(j);
    out.pop_back();
  }
  return false;
}

std::vector<bool> mask_of(std::size_t m, const std::vector<std::size_t>& idx) {
  std::vector<bool> mask(m, false);
  for (auto i : idx) mask[i] = true;
  return mask;
}

}  // namespace

CiSingularityReport ci_singularity_report(const WeightMatrix& w, const IVec& omega,
                                          const std::vector<IVec>& bundles) {
  CiSingularityReport report;
  const std::size_t m = w.coords();
  auto cs = charts(w.d, omega);
  std::vector<std::vector<Monomial>> bases;
  for (const auto& l : bundles) bases.push_back(monomial_basis(w, l));

  // isolated chart origins
  for (const auto& chart : cs) {
    if (chart.stabilizer.is_trivial()) continue;
    auto pivot_mask = mask_of(m, chart.pivots);
    bool origin_on_x = true;
    for (const auto& basis : bases) {
      bool has_pivot_monomial = false;
      for (const auto& mono : basis)
        if (supported_within(mono, pivot_mask)) {
          has_pivot_monomial = true;
          break;
        }
      if (has_pivot_monomial) {
        origin_on_x = false;
        break;
      }
    }
    if (!origin_on_x) continue;
    SingularityFinding f;
    f.chart_pivots = chart.pivots;
    f.count = 1;
    if (!chart.stabilizer.is_cyclic()) {
      f.kind = FindingKind::CannotReduce;
      f.note = "stabilizer is not cyclic";
      report.findings.push_back(f);
      continue;
    }
    // one distinct non-pivot coordinate per bundle carrying a general-member
    // linear term at the origin
    std::vector<std::vector<std::size_t>> candidates;
    for (const auto& basis : bases) {
      std::vector<std::size_t> cand;
      for (auto j : chart.nonpivots) {
        auto mask = pivot_mask;
        mask[j] = true;
        for (const auto& mono : basis)
          if (mono[j] == 1 && supported_within(mono, mask)) {
            cand.push_back(j);
            break;
          }
      }
      candidates.push_back(cand);
    }
    std::set<std::size_t> used;
    std::vector<std::size_t> matched;
    if (!pick_distinct(candidates, 0, used, matched)) {
      f.kind = FindingKind::CannotReduce;
      f.note = "no independent linear terms for the bundles";
      report.findings.push_back(f);
      continue;
    }
    std::vector<std::size_t> remaining;
    for (auto j : chart.nonpivots)
      if (!used.count(j)) remaining.push_back(j);
    if (remaining.size() != 2) {
      f.kind = FindingKind::Inconclusive;
      f.note = "reduction does not end in a surface chart";
      report.findings.push_back(f);
      continue;
    }
    Int n = chart.stabilizer.order();
    Int w1 = 0, w2 = 0;
    for (std::size_t i = 0; i < chart.nonpivots.size(); ++i) {
      if (chart.nonpivots[i] == remaining[0]) w1 = chart.residual_weights[i][0];
      if (chart.nonpivots[i] == remaining[1]) w2 = chart.residual_weights[i][0];
    }
    f.kind = FindingKind::OriginPoint;
    f.type = quotient_from_weights(n, w1, w2);
    report.findings.push_back(f);
  }

  // positive-dimensional singular strata, deduplicated by vanishing set; the
  // fixed locus of the mu_p subgroup of a chart stabilizer kills exactly the
  // coordinates with weight nonzero mod p
  std::set<std::vector<std::size_t>> strata;
  for (const auto& chart : cs) {
    if (chart.stabilizer.is_trivial() || !chart.stabilizer.is_cyclic()) continue;
    Int n = chart.stabilizer.order();
    std::set<Int> primes;
    Int nn = n;
    for (Int p = 2; p * p <= nn; ++p)
      while (nn % p == 0) {
        primes.insert(p);
        nn /= p;
      }
    if (nn > 1) primes.insert(nn);
    for (const Int& p : primes) {
      std::vector<std::size_t> kill;
      bool any_fixed = false;
      for (std::size_t i = 0; i < chart.nonpivots.size(); ++i) {
        if (chart.residual_weights[i][0] % p == 0)
          any_fixed = true;
        else
          kill.push_back(chart.nonpivots[i]);
      }
      if (any_fixed && !kill.empty()) strata.insert(kill);
    }
  }

  auto fan = fan_from_chamber(w.d, omega);
  GradedRingContext ctx = GradedRingContext::from_fan(fan);

  for (const auto& kill : strata) {
    SingularityFinding f;
    f.stratum_kill = kill;
    std::vector<std::size_t> scoords;
    {
      auto km = mask_of(m, kill);
      for (std::size_t i = 0; i < m; ++i)
        if (!km[i]) scoords.push_back(i);
    }
    IntMat ds = w.d.columns(scoords);
    auto am = cokernel_map(ds);
    if (am.group.is_trivial()) continue;
    if (!am.group.is_cyclic() || am.group.free_rank > 0) {
      f.kind = FindingKind::Inconclusive;
      f.note = "stratum stabilizer is not finite cyclic";
      report.findings.push_back(f);
      continue;
    }
    const std::size_t s_dim = scoords.size() - rank_q(ds);
    auto smask = mask_of(m, scoords);
    std::vector<std::size_t> nonempty;
    std::vector<bool> bpf(bases.size(), true);
    for (std::size_t i = 0; i < bases.size(); ++i) {
      std::vector<Monomial> rb;
      for (const auto& mono : bases[i])
        if (supported_within(mono, smask)) rb.push_back(mono);
      if (rb.empty()) continue;
      nonempty.push_back(i);
      // base points on the stratum: a chart origin on the stratum closure at
      // which every restricted monomial vanishes
      for (const auto& chart : cs) {
        bool on_stratum = true;
        for (auto pv : chart.pivots)
          if (!smask[pv]) on_stratum = false;
        if (!on_stratum) continue;
        auto pm = mask_of(m, chart.pivots);
        bool ok = false;
        for (const auto& mono : rb)
          if (supported_within(mono, pm)) {
            ok = true;
            break;
          }
        if (!ok) bpf[i] = false;
      }
    }
    const std::size_t t = nonempty.size();
    bool all_bpf = true;
    for (auto i : nonempty)
      if (!bpf[i]) all_bpf = false;
    if (!all_bpf) {
      f.kind = FindingKind::Inconclusive;
      f.note = "restricted system has base points on the stratum";
      report.findings.push_back(f);
      continue;
    }
    if (t > s_dim) {
      f.kind = FindingKind::StratumDisjoint;
      report.findings.push_back(f);
      continue;
    }
    if (t < s_dim) {
      f.kind = FindingKind::NotWellFormedLocus;
      f.note = "general intersection contains part of the stratum";
      report.findings.push_back(f);
      continue;
    }
    // finite intersection with the stratum: count points via the ambient
    // intersection numbers (each point carries 1/|A_S| in the stacky count)
    std::vector<QVec> factors;
    for (auto i : nonempty)
      factors.push_back(class_as_ray_coefficients(w.d, bundles[i]));
    for (auto j : kill) {
      QVec e(m, Rat(0));
      e[j] = 1;
      factors.push_back(e);
    }
    Rat stacky = ctx.top(factors);
    Rat count = stacky * Rat(am.group.order());
    if (count == 0) {
      f.kind = FindingKind::StratumDisjoint;
      report.findings.push_back(f);
      continue;
    }
    if (!is_integer(count) || count < 0) {
      f.kind = FindingKind::Inconclusive;
      f.note = "non-integral point count " + to_string(count);
      report.findings.push_back(f);
      continue;
    }
    // bundles vanishing identically on the stratum must contribute a linear
    // term transverse to it
    std::vector<std::vector<std::size_t>> candidates;
    for (std::size_t i = 0; i < bases.size(); ++i) {
      if (std::find(nonempty.begin(), nonempty.end(), i) != nonempty.end()) continue;
      std::vector<std::size_t> cand;
      for (auto j : kill) {
        auto mask = smask;
        mask[j] = true;
        for (const auto& mono : bases[i])
          if (mono[j] == 1 && supported_within(mono, mask)) {
            cand.push_back(j);
            break;
          }
      }
      candidates.push_back(cand);
    }
    std::set<std::size_t> used;
    std::vector<std::size_t> matched;
    if (!pick_distinct(candidates, 0, used, matched)) {
      f.kind = FindingKind::CannotReduce;
      f.note = "no independent linear terms transverse to the stratum";
      report.findings.push_back(f);
      continue;
    }
    std::vector<std::size_t> remaining;
    for (auto j : kill)
      if (!used.count(j)) remaining.push_back(j);
    if (remaining.size() != 2) {
      f.kind = FindingKind::Inconclusive;
      f.note = "stratum reduction does not end in a surface chart";
      report.findings.push_back(f);
      continue;
    }
    Int n = am.group.order();
    Int w1 = am.class_of(w.d.col(remaining[0]))[0];
    Int w2 = am.class_of(w.d.col(remaining[1]))[0];
    f.kind = FindingKind::StratumPoints;
    f.count = rat_num(count);
    f.type = quotient_from_weights(n, w1, w2);
    report.findings.push_back(f);
  }

  std::sort(report.findings.begin(), report.findings.end(),
            [](const SingularityFinding& a, const SingularityFinding& b) {
              if (a.kind != b.kind) return a.kind < b.kind;
              if (a.chart_pivots != b.chart_pivots)
                return a.chart_pivots < b.chart_pivots;
              return a.stratum_kill < b.stratum_kill;
            });
  return report;
}

}  // namespace orbifano
