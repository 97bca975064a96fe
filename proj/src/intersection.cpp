#include "orbifano/intersection.hpp"

#include <algorithm>
#include <set>

namespace orbifano {

Int cone_multiplicity(const IntMat& cone_rays) {
  if (cone_rays.rows() != cone_rays.cols())
    throw DegenerateCone("cone_multiplicity: need d rays in dimension d");
  Int dt = det(cone_rays);
  if (dt == 0) throw DegenerateCone("cone_multiplicity: rays do not span");
  return abs_int(dt);
}

GradedRingContext::GradedRingContext(IntMat rays,
                                     std::vector<std::vector<std::size_t>> max_cones)
    : rays_(std::move(rays)), cones_(std::move(max_cones)) {
  const std::size_t d = rays_.cols();
  for (const auto& cone : cones_) {
    if (cone.size() != d)
      throw DimensionMismatch("GradedRingContext: cone size != dimension");
    std::vector<std::size_t> all(d);
    for (std::size_t j = 0; j < d; ++j) all[j] = j;
    mult_.push_back(cone_multiplicity(rays_.submatrix(cone, all)));
  }
}

bool GradedRingContext::is_face(const std::vector<std::size_t>& support) const {
  for (const auto& cone : cones_)
    if (std::includes(cone.begin(), cone.end(), support.begin(), support.end()))
      return true;
  return false;
}

namespace {

std::vector<std::size_t> mono_support(const std::vector<Int>& mono) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < mono.size(); ++i)
    if (mono[i] > 0) s.push_back(i);
  return s;
}

}  // namespace

Rat GradedRingContext::evaluate(const std::vector<Int>& mono) const {
  auto it = memo_.find(mono);
  if (it != memo_.end()) {
    if (!it->second.has_value())
      throw std::logic_error("intersection: cyclic reduction");  // caught by top()
    return *it->second;
  }
  auto support = mono_support(mono);
  if (!is_face(support)) {
    memo_[mono] = Rat(0);
    return 0;
  }
  bool squarefree = true;
  for (const auto& e : mono)
    if (e > 1) squarefree = false;
  if (squarefree) {
    // a d-element face of a simplicial fan is a maximal cone
    for (std::size_t ci = 0; ci < cones_.size(); ++ci)
      if (cones_[ci] == support) {
        Rat v = make_rat(1, mult_[ci]);
        memo_[mono] = v;
        return v;
      }
    throw std::logic_error("intersection: squarefree support is not a maximal cone");
  }
  memo_[mono] = std::nullopt;  // in-progress marker
  // pick the repeated ray with the smallest index
  std::size_t j = 0;
  for (std::size_t i = 0; i < mono.size(); ++i)
    if (mono[i] > 1) {
      j = i;
      break;
    }
  std::vector<Int> rest = mono;
  rest[j] -= 1;
  // maximal independent completion among the remaining factors
  const std::size_t d = dim();
  std::vector<std::size_t> indep;
  {
    std::vector<IVec> chosen = {rays_.row(j)};
    for (auto i : mono_support(rest)) {
      if (i == j) continue;
      std::vector<IVec> trial = chosen;
      trial.push_back(rays_.row(i));
      if (rank_q(IntMat::from_rows(trial)) == trial.size()) {
        chosen = trial;
        indep.push_back(i);
      }
    }
  }
  // covector with <m, rho_j> = 1 and <m, rho_i> = 0 on the completion
  std::vector<IVec> rows = {rays_.row(j)};
  for (auto i : indep) rows.push_back(rays_.row(i));
  IntMat sys = IntMat::from_rows(rows);
  IVec rhs(rows.size(), Int(0));
  rhs[0] = 1;
  auto mvec = solve_q(sys, rhs);
  if (!mvec) throw std::logic_error("intersection: no reduction covector");
  // D_j = - sum_{i != j} <m, rho_i> D_i
  Rat total = 0;
  for (std::size_t i = 0; i < ray_count(); ++i) {
    if (i == j) continue;
    Rat coef = 0;
    for (std::size_t k = 0; k < d; ++k) coef += (*mvec)[k] * Rat(rays_.at(i, k));
    if (coef == 0) continue;
    std::vector<Int> next = rest;
    next[i] += 1;
    if (!is_face(mono_support(next))) continue;
    total += -coef * evaluate(next);
  }
  memo_[mono] = total;
  return total;
}

Rat GradedRingContext::top(const std::vector<QVec>& classes) const {
  const std::size_t d = dim();
  if (classes.size() != d)
    throw DimensionMismatch("top_intersection: need exactly dim factors");
  for (const auto& c : classes)
    if (c.size() != ray_count())
      throw DimensionMismatch("top_intersection: class has wrong length");
  // expand factor by factor with Stanley-Reisner pruning
  std::map<std::vector<Int>, Rat> terms;
  terms[std::vector<Int>(ray_count(), Int(0))] = 1;
  for (const auto& cls : classes) {
    std::map<std::vector<Int>, Rat> next;
    for (const auto& [mono, coef] : terms) {
      for (std::size_t i = 0; i < ray_count(); ++i) {
        if (cls[i] == 0) continue;
        std::vector<Int> m2 = mono;
        m2[i] += 1;
        if (!is_face(mono_support(m2))) continue;
        next[m2] += coef * cls[i];
      }
    }
    for (auto it = next.begin(); it != next.end();) {
      if (it->second == 0)
        it = next.erase(it);
      else
        ++it;
    }
    terms = std::move(next);
  }
  Rat out = 0;
  try {
    for (const auto& [mono, coef] : terms) out += coef * evaluate(mono);
  } catch (const std::logic_error&) {
    memo_.clear();
    return top_by_linear_system(classes);
  }
  return out;
}

Rat GradedRingContext::top_by_linear_system(const std::vector<QVec>& classes) const {
  const std::size_t d = dim(), m = ray_count();
  if (classes.size() != d)
    throw DimensionMismatch("top_intersection: need exactly dim factors");
  // enumerate degree-d monomials with face support
  std::vector<std::vector<Int>> monos;
  std::map<std::vector<Int>, std::size_t> index;
  {
    std::vector<Int> cur(m, Int(0));
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                            std::size_t left) {
      if (left == 0) {
        if (is_face(mono_support(cur))) {
          index[cur] = monos.size();
          monos.push_back(cur);
        }
        return;
      }
      if (pos == m) return;
      for (std::size_t e = 0; e <= left; ++e) {
        cur[pos] = Int(e);
        rec(pos + 1, left - e);
      }
      cur[pos] = 0;
    };
    rec(0, d);
  }
  // rows: relations sum_i <e_l, rho_i> val(beta + e_i) = 0 for each
  // degree-(d-1) monomial beta and coordinate covector e_l; pins from the
  // maximal-cone squarefree monomials
  std::vector<QVec> rows;
  std::vector<Rat> rhs;
  {
    std::vector<Int> cur(m, Int(0));
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                            std::size_t left) {
      if (left == 0) {
        if (!is_face(mono_support(cur))) return;
        for (std::size_t l = 0; l < d; ++l) {
          QVec row(monos.size(), Rat(0));
          bool nontrivial = false;
          for (std::size_t i = 0; i < m; ++i) {
            if (rays_.at(i, l) == 0) continue;
            std::vector<Int> up = cur;
            up[i] += 1;
            auto it = index.find(up);
            if (it == index.end()) continue;  // Stanley-Reisner zero
            row[it->second] += Rat(rays_.at(i, l));
            nontrivial = true;
          }
          if (nontrivial) {
            rows.push_back(row);
            rhs.push_back(0);
          }
        }
        return;
      }
      if (pos == m) return;
      for (std::size_t e = 0; e <= left; ++e) {
        cur[pos] = Int(e);
        rec(pos + 1, left - e);
      }
      cur[pos] = 0;
    };
    rec(0, d - 1);
  }
  for (std::size_t ci = 0; ci < cones_.size(); ++ci) {
    std::vector<Int> mono(m, Int(0));
    for (auto i : cones_[ci]) mono[i] = 1;
    auto it = index.find(mono);
    if (it == index.end()) throw std::logic_error("linear system: missing cone");
    QVec row(monos.size(), Rat(0));
    row[it->second] = 1;
    rows.push_back(row);
    rhs.push_back(make_rat(1, mult_[ci]));
  }
  // Gaussian elimination
  const std::size_t nvar = monos.size();
  std::vector<QVec> a = rows;
  std::vector<Rat> b = rhs;
  std::vector<std::ptrdiff_t> where(nvar, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < nvar && row < a.size(); ++col) {
    std::size_t sel = a.size();
    for (std::size_t i = row; i < a.size(); ++i)
      if (a[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel == a.size()) continue;
    std::swap(a[sel], a[row]);
    std::swap(b[sel], b[row]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rat f = a[i][col] / a[row][col];
      for (std::size_t j2 = col; j2 < nvar; ++j2) a[i][j2] -= f * a[row][j2];
      b[i] -= f * b[row];
    }
    where[col] = static_cast<std::ptrdiff_t>(row);
    ++row;
  }
  for (std::size_t i = row; i < a.size(); ++i)
    if (b[i] != 0) throw std::logic_error("linear system: inconsistent");
  std::vector<Rat> val(nvar, Rat(0));
  bool all_pinned = true;
  for (std::size_t col = 0; col < nvar; ++col) {
    if (where[col] < 0) {
      all_pinned = false;
      continue;
    }
    val[col] = b[static_cast<std::size_t>(where[col])] /
               a[static_cast<std::size_t>(where[col])][col];
  }
  if (!all_pinned)
    throw std::logic_error("linear system: intersection numbers underdetermined");
  // expand the product of classes over the values
  std::map<std::vector<Int>, Rat> terms;
  terms[std::vector<Int>(m, Int(0))] = 1;
  for (const auto& cls : classes) {
    std::map<std::vector<Int>, Rat> next;
    for (const auto& [mono, coef] : terms)
      for (std::size_t i = 0; i < m; ++i) {
        if (cls[i] == 0) continue;
        std::vector<Int> m2 = mono;
        m2[i] += 1;
        if (!is_face(mono_support(m2))) continue;
        next[m2] += coef * cls[i];
      }
    terms = std::move(next);
  }
  Rat out = 0;
  for (const auto& [mono, coef] : terms) {
    auto it = index.find(mono);
    if (it == index.end()) continue;
    out += coef * val[it->second];
  }
  return out;
}

Rat surface_top_intersection(const IntMat& rays,
                             const std::vector<std::vector<std::size_t>>& cones,
                             const QVec& class_a, const QVec& class_b) {
  const std::size_t m = rays.rows();
  if (rays.cols() != 2) throw DimensionMismatch("surface oracle: dimension 2 only");
  auto det2 = [&](std::size_t i, std::size_t j) {
    return rays.at(i, 0) * rays.at(j, 1) - rays.at(i, 1) * rays.at(j, 0);
  };
  std::set<std::pair<std::size_t, std::size_t>> adjacent;
  for (const auto& c : cones) adjacent.insert({c[0], c[1]});
  auto is_adj = [&](std::size_t i, std::size_t j) {
    return adjacent.count({i, j}) || adjacent.count({j, i});
  };
  // off-diagonal intersection numbers of the ray divisors: 1/det on adjacent
  // pairs, 0 otherwise; the diagonal then follows from the linear relations
  // sum_j <e_l, rho_j> D_j . D_i = 0
  std::vector<std::vector<Rat>> dd(m, std::vector<Rat>(m, Rat(0)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && is_adj(i, j)) dd[i][j] = make_rat(1, abs_int(det2(i, j)));
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t l = rays.at(i, 0) != 0 ? 0 : 1;
    Rat sum = 0;
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) sum += Rat(rays.at(j, l)) * dd[j][i];
    dd[i][i] = -sum / Rat(rays.at(i, l));
  }
  Rat out = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out += class_a[i] * class_b[j] * dd[i][j];
  return out;
}

QVec class_as_ray_coefficients(const IntMat& d, const IVec& c) {
  auto sol = solve_q(d, c);
  if (!sol)
    throw std::invalid_argument("class_as_ray_coefficients: class not in the image");
  return *sol;
}

Rat ci_degree(const WeightMatrix& w, const IVec& omega, const std::vector<IVec>& bundles) {
  const std::size_t dimf = w.coords() - w.rank();
  if (dimf != bundles.size() + 2)
    throw DimensionMismatch("ci_degree: dim F - #bundles must be 2");
  auto fan = fan_from_chamber(w.d, omega);
  GradedRingContext ctx = GradedRingContext::from_fan(fan);
  IVec a = w.anticanonical();
  for (const auto& l : bundles) a = vec_sub(a, l);
  std::vector<QVec> classes;
  for (const auto& l : bundles) classes.push_back(class_as_ray_coefficients(w.d, l));
  classes.push_back(class_as_ray_coefficients(w.d, a));
  classes.push_back(class_as_ray_coefficients(w.d, a));
  return ctx.top(classes);
}

}  // namespace orbifano
