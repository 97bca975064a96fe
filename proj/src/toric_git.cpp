#include "orbifano/toric_git.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace orbifano {

namespace {

std::vector<IVec> matrix_columns(const IntMat& d) {
  std::vector<IVec> cols;
  for (std::size_t j = 0; j < d.cols(); ++j) cols.push_back(d.col(j));
  return cols;
}

}  // namespace

WeightMatrix WeightMatrix::make(const IntMat& d, std::vector<std::string> labels) {
  if (rank_q(d) != d.rows())
    throw std::invalid_argument("WeightMatrix: rows must be linearly independent");
  if (!positive_functional(d))
    throw std::invalid_argument("WeightMatrix: column cone is not strictly convex");
  WeightMatrix w;
  w.d = d;
  if (labels.empty()) {
    for (std::size_t j = 0; j < d.cols(); ++j) labels.push_back("x" + std::to_string(j));
  }
  if (labels.size() != d.cols())
    throw std::invalid_argument("WeightMatrix: label count mismatch");
  w.labels = std::move(labels);
  return w;
}

IVec WeightMatrix::anticanonical() const {
  IVec k(d.rows(), Int(0));
  for (std::size_t j = 0; j < d.cols(); ++j) k = vec_add(k, d.col(j));
  return k;
}

// ---------------------------------------------------------------------------
// cone predicates

bool cone_contains(const std::vector<IVec>& gens, const IVec& x) {
  if (vec_is_zero(x)) return true;
  IntMat all = IntMat::from_cols(gens);
  std::size_t rk = rank_q(all);
  bool found = false;
  for (std::size_t k = 1; k <= std::min(rk, gens.size()) && !found; ++k) {
    for_each_subset(gens.size(), k, [&](const std::vector<std::size_t>& sub) {
      if (found) return;
      std::vector<IVec> cols;
      for (auto i : sub) cols.push_back(gens[i]);
      IntMat b = IntMat::from_cols(cols);
      if (rank_q(b) != k) return;
      auto sol = solve_q(b, x);
      if (!sol) return;
      for (const Rat& l : *sol)
        if (l < 0) return;
      found = true;
    });
  }
  return found;
}

bool Cone::contains(const IVec& x) const {
  for (const auto& n : normals) {
    Int dot = 0;
    for (std::size_t i = 0; i < x.size(); ++i) dot += n[i] * x[i];
    if (dot < 0) return false;
  }
  return true;
}

bool Cone::contains_interior(const IVec& x) const {
  for (const auto& n : normals) {
    Int dot = 0;
    for (std::size_t i = 0; i < x.size(); ++i) dot += n[i] * x[i];
    if (dot <= 0) return false;
  }
  return true;
}

bool Cone::same_cone_as(const Cone& o) const { return rays == o.rays; }

namespace {

// extreme rays of {x : n . x >= 0 for all n}; the cone must be pointed
std::vector<IVec> extreme_rays_from_normals(const std::vector<IVec>& normals,
                                            std::size_t r) {
  std::set<IVec> rays;
  if (r == 0) return {};
  if (r == 1) {
    bool okp = true, okm = true;
    for (const auto& n : normals) {
      if (n[0] < 0) okp = false;
      if (n[0] > 0) okm = false;
    }
    if (okp) rays.insert(IVec{Int(1)});
    if (okm) rays.insert(IVec{Int(-1)});
    return {rays.begin(), rays.end()};
  }
  IntMat nm = IntMat::from_rows(normals);
  std::vector<std::size_t> all_cols(r);
  for (std::size_t i = 0; i < r; ++i) all_cols[i] = i;
  for_each_subset(normals.size(), r - 1, [&](const std::vector<std::size_t>& sub) {
    IntMat a = nm.submatrix(sub, all_cols);
    if (rank_q(a) != r - 1) return;
    auto ker = kernel_basis(a);
    if (ker.size() != 1) return;
    for (int sign = 0; sign < 2; ++sign) {
      IVec v = sign ? vec_neg(ker[0]) : ker[0];
      bool ok = true;
      for (const auto& n : normals) {
        Int dot = 0;
        for (std::size_t i = 0; i < r; ++i) dot += n[i] * v[i];
        if (dot < 0) {
          ok = false;
          break;
        }
      }
      if (ok && !vec_is_zero(v)) {
        Int g = vec_gcd(v);
        for (auto& x : v) x /= g;
        rays.insert(v);
      }
    }
  });
  return {rays.begin(), rays.end()};
}

std::vector<IVec> facet_normals_of_simplicial(const IntMat& b) {
  // b: r x r invertible; inward facet normals are the rows of the adjugate
  // carrying the sign of det
  const std::size_t r = b.rows();
  Int dt = det(b);
  std::vector<IVec> normals;
  for (std::size_t i = 0; i < r; ++i) {
    IVec n(r);
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<std::size_t> ris, cis;
      for (std::size_t k = 0; k < r; ++k)
        if (k != j) ris.push_back(k);
      for (std::size_t k = 0; k < r; ++k)
        if (k != i) cis.push_back(k);
      Int c = det(b.submatrix(ris, cis));
      if ((i + j) % 2 == 1) c = -c;
      n[j] = (dt < 0) ? Int(-c) : c;
    }
    Int g = vec_gcd(n);  // divide the content, keep the inward orientation
    if (g > 1)
      for (auto& x : n) x /= g;
    normals.push_back(n);
  }
  return normals;
}

}  // namespace

Cone cone_from_generators(const std::vector<IVec>& gens) {
  if (gens.empty()) throw std::invalid_argument("cone_from_generators: no generators");
  const std::size_t r = gens.front().size();
  if (r == 1) {
    Cone c;
    bool pos = false, neg = false;
    for (const auto& g : gens) {
      if (g[0] > 0) pos = true;
      if (g[0] < 0) neg = true;
    }
    if (pos == neg) throw std::invalid_argument("cone_from_generators: not pointed");
    c.rays = {IVec{Int(pos ? 1 : -1)}};
    c.normals = c.rays;
    return c;
  }
  IntMat gm = IntMat::from_cols(gens);
  if (rank_q(gm) != r)
    throw std::invalid_argument("cone_from_generators: not full-dimensional");
  std::set<IVec> normals;
  for_each_subset(gens.size(), r - 1, [&](const std::vector<std::size_t>& sub) {
    std::vector<IVec> rows;
    for (auto i : sub) rows.push_back(gens[i]);
    IntMat a = IntMat::from_rows(rows);  // kernel = candidate hyperplane normal
    if (rank_q(a) != r - 1) return;
    auto ker = kernel_basis(a);
    if (ker.size() != 1) return;
    IVec n = vec_primitive(ker[0]);
    bool pos = false, neg = false;
    for (const auto& g : gens) {
      Int dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += n[i] * g[i];
      if (dot > 0) pos = true;
      if (dot < 0) neg = true;
    }
    if (pos && neg) return;  // not supporting
    if (neg) n = vec_neg(n);
    normals.insert(n);
  });
  Cone c;
  c.normals = {normals.begin(), normals.end()};
  c.rays = extreme_rays_from_normals(c.normals, r);
  return c;
}

// ---------------------------------------------------------------------------
// standard / well-formed

bool is_standard(const IntMat& d) { return gcd_of_minors(d, d.rows()) == 1; }

bool is_wellformed(const IntMat& d) {
  if (!is_standard(d)) return false;
  for (std::size_t j = 0; j < d.cols(); ++j)
    if (!is_standard(d.drop_column(j))) return false;
  return true;
}

namespace {

// rational row transform (rank x rows) making A * d integral with a saturated
// row lattice; dependent rows are dropped
std::vector<QVec> saturation_transform(const IntMat& d) {
  SmithForm f = smith_normal_form(d);
  std::vector<QVec> a;
  for (std::size_t i = 0; i < f.rank; ++i) {
    QVec row(d.rows(), Rat(0));
    for (std::size_t j = 0; j < d.rows(); ++j)
      row[j] = make_rat(f.u.at(i, j), f.s.at(i, i));
    a.push_back(row);
  }
  return a;
}

IntMat apply_transform(const std::vector<QVec>& a, const IntMat& d) {
  IntMat out(a.size(), d.cols());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) {
      Rat x = 0;
      for (std::size_t k = 0; k < d.rows(); ++k) x += a[i][k] * Rat(d.at(k, j));
      if (!is_integer(x)) throw std::logic_error("wellform: non-integral transform");
      out.at(i, j) = rat_num(x);
    }
  return out;
}

std::vector<QVec> compose(const std::vector<QVec>& a, const std::vector<QVec>& b) {
  std::vector<QVec> out(a.size(), QVec(b.empty() ? 0 : b.front().size(), Rat(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < out[i].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

// canonical row form under integer row operations, for deterministic output
IntMat hermite_rows(const IntMat& m) {
  IntMat a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a.at(i, c) != 0)
        if (p == rows || abs_int(a.at(i, c)) < abs_int(a.at(p, c))) p = i;
    if (p == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(p, j));
    bool again = true;
    while (again) {
      again = false;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a.at(i, c) == 0) continue;
        Int q = a.at(i, c) / a.at(r, c);
        for (std::size_t j = 0; j < cols; ++j) a.at(i, j) -= q * a.at(r, j);
        if (a.at(i, c) != 0) {
          for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(r, j), a.at(i, j));
          again = true;
        }
      }
    }
    if (a.at(r, c) < 0)
      for (std::size_t j = 0; j < cols; ++j) a.at(r, j) = -a.at(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      Int rem = a.at(i, c) % a.at(r, c);
      Int q = a.at(i, c) / a.at(r, c);
      if (rem < 0) q -= 1;
      for (std::size_t j = 0; j < cols; ++j) a.at(i, j) -= q * a.at(r, j);
    }
    ++r;
  }
  return a;
}

}  // namespace

IVec WellformResult::transform_class(const IVec& old_class) const {
  IVec out(transform.size());
  for (std::size_t i = 0; i < transform.size(); ++i) {
    Rat x = 0;
    for (std::size_t k = 0; k < old_class.size(); ++k)
      x += transform[i][k] * Rat(old_class[k]);
    if (!is_integer(x))
      throw std::invalid_argument("transform_class: class not defined on the quotient");
    out[i] = rat_num(x);
  }
  return out;
}

WellformResult wellform(const IntMat& d0) {
  std::vector<QVec> t;
  for (std::size_t i = 0; i < d0.rows(); ++i) {
    QVec row(d0.rows(), Rat(0));
    row[i] = 1;
    t.push_back(row);
  }
  if (is_wellformed(d0)) {
    WellformResult out;
    out.d = d0;
    out.transform = t;
    return out;
  }
  IntMat d = d0;
  {
    auto a = saturation_transform(d);
    d = apply_transform(a, d);
    t = compose(a, t);
  }
  // divide out quasi-reflections: while removing column j leaves a row
  // lattice of index g > 1, rebase and scale column j back by g (the
  // substitution x_j -> x_j^g leaves monomial counts and classes intact)
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j < d.cols() && !changed; ++j) {
      IntMat rest = d.drop_column(j);
      if (rank_q(rest) != d.rows()) continue;
      Int g = gcd_of_minors(rest, d.rows());
      if (g > 1) {
        auto a = saturation_transform(rest);
        IntMat nd(a.size(), d.cols());
        for (std::size_t i = 0; i < a.size(); ++i)
          for (std::size_t c = 0; c < d.cols(); ++c) {
            Rat x = 0;
            for (std::size_t k = 0; k < d.rows(); ++k) x += a[i][k] * Rat(d.at(k, c));
            if (c == j) x *= Rat(g);
            if (!is_integer(x)) throw std::logic_error("wellform: rescale failed");
            nd.at(i, c) = rat_num(x);
          }
        d = nd;
        t = compose(a, t);
        changed = true;
      }
    }
  }
  WellformResult out;
  out.d = hermite_rows(d);
  {
    IntMat dt = d.transpose();
    std::vector<QVec> rrows;
    for (std::size_t i = 0; i < out.d.rows(); ++i) {
      auto sol = solve_q(dt, out.d.row(i));
      if (!sol) throw std::logic_error("wellform: canonicalization transform");
      rrows.push_back(*sol);
    }
    t = compose(rrows, t);
  }
  out.transform = t;
  return out;
}

// ---------------------------------------------------------------------------
// chambers, irrelevant ideal, fan, charts

namespace {

void check_on_wall(const IntMat& d, const IVec& omega) {
  const std::size_t r = d.rows();
  if (r == 0) return;
  auto cols = matrix_columns(d);
  if (r == 1) {
    if (omega[0] == 0) throw OnWall("stability condition at the origin");
    return;
  }
  std::set<IVec> hyperplanes;
  for_each_subset(d.cols(), r - 1, [&](const std::vector<std::size_t>& sub) {
    std::vector<IVec> rows;
    for (auto i : sub) rows.push_back(cols[i]);
    IntMat a = IntMat::from_rows(rows);
    if (rank_q(a) != r - 1) return;
    auto ker = kernel_basis(a);
    if (ker.size() == 1) hyperplanes.insert(vec_primitive(ker[0]));
  });
  for (const auto& n : hyperplanes) {
    Int dot = 0;
    for (std::size_t i = 0; i < r; ++i) dot += n[i] * omega[i];
    if (dot != 0) continue;
    std::vector<IVec> on;
    for (const auto& c : cols) {
      Int cd = 0;
      for (std::size_t i = 0; i < r; ++i) cd += n[i] * c[i];
      if (cd == 0) on.push_back(c);
    }
    if (!on.empty() && cone_contains(on, omega))
      throw OnWall("stability condition lies on a wall of the secondary fan");
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> irrelevant_ideal(const IntMat& d,
                                                       const IVec& omega) {
  check_on_wall(d, omega);
  const std::size_t r = d.rows();
  std::vector<std::vector<std::size_t>> out;
  auto cols = matrix_columns(d);
  for_each_subset(d.cols(), r, [&](const std::vector<std::size_t>& sub) {
    std::vector<IVec> gens;
    for (auto i : sub) gens.push_back(cols[i]);
    IntMat b = IntMat::from_cols(gens);
    if (rank_q(b) != r) return;
    auto sol = solve_q(b, omega);
    if (!sol) return;
    for (const Rat& l : *sol)
      if (l <= 0) return;  // off-wall membership is interior membership
    out.push_back(sub);
  });
  return out;
}

Cone chamber_of(const IntMat& d, const IVec& omega) {
  const std::size_t r = d.rows();
  auto cols = matrix_columns(d);
  if (r == 1) {
    check_on_wall(d, omega);
    Cone c;
    c.rays = {IVec{Int(omega[0] > 0 ? 1 : -1)}};
    c.normals = c.rays;
    return c;
  }
  auto pivot_sets = irrelevant_ideal(d, omega);
  if (pivot_sets.empty()) throw OnWall("stability condition not in any chamber");
  std::set<IVec> normals;
  for (const auto& sub : pivot_sets) {
    std::vector<IVec> gens;
    for (auto i : sub) gens.push_back(cols[i]);
    for (auto& n : facet_normals_of_simplicial(IntMat::from_cols(gens)))
      normals.insert(n);
  }
  Cone c;
  c.normals = {normals.begin(), normals.end()};
  c.rays = extreme_rays_from_normals(c.normals, r);
  // keep the actual facets only
  std::vector<IVec> kept;
  for (const auto& n : c.normals) {
    std::vector<IVec> on;
    for (const auto& ray : c.rays) {
      Int dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += n[i] * ray[i];
      if (dot == 0) on.push_back(ray);
    }
    if (!on.empty() && rank_q(IntMat::from_cols(on)) == r - 1) kept.push_back(n);
  }
  if (!kept.empty()) c.normals = kept;
  return c;
}

SimplicialFan fan_from_chamber(const IntMat& d, const IVec& omega) {
  if (!is_wellformed(d))
    throw NotWellFormed("fan_from_chamber: weight matrix must be well-formed");
  auto pivot_sets = irrelevant_ideal(d, omega);
  if (pivot_sets.empty()) throw OnWall("no chamber");
  SimplicialFan fan;
  fan.m = d.cols();
  fan.dim = d.cols() - d.rows();
  for (const auto& sub : pivot_sets) {
    std::vector<bool> in(fan.m, false);
    for (auto i : sub) in[i] = true;
    std::vector<std::size_t> cone;
    for (std::size_t i = 0; i < fan.m; ++i)
      if (!in[i]) cone.push_back(i);
    fan.max_cones.push_back(cone);
  }
  std::sort(fan.max_cones.begin(), fan.max_cones.end());
  auto ker = kernel_basis(d);
  if (ker.size() != fan.dim) throw std::logic_error("fan_from_chamber: kernel rank");
  fan.rays = IntMat(fan.m, fan.dim);
  for (std::size_t i = 0; i < fan.m; ++i)
    for (std::size_t j = 0; j < fan.dim; ++j) fan.rays.at(i, j) = ker[j][i];
  for (std::size_t i = 0; i < fan.m; ++i)
    if (vec_gcd(fan.rays.row(i)) != 1)
      throw NotWellFormed("fan_from_chamber: non-primitive ray in realization");
  for (std::size_t j = 0; j < fan.dim; ++j)
    if (!vec_is_zero(d.mul_vec(ker[j])))
      throw std::logic_error("fan_from_chamber: realization not in the kernel");
  // completeness: every facet shared by exactly two maximal cones, and the
  // rays span positively
  std::map<std::vector<std::size_t>, int> facet_count;
  for (const auto& cone : fan.max_cones)
    for (std::size_t k = 0; k < cone.size(); ++k) {
      std::vector<std::size_t> facet = cone;
      facet.erase(facet.begin() + k);
      facet_count[facet] += 1;
    }
  for (const auto& [facet, count] : facet_count)
    if (count != 2) throw std::logic_error("fan_from_chamber: fan is not complete");
  {
    std::vector<IVec> rows;
    for (std::size_t i = 0; i < fan.m; ++i) rows.push_back(fan.rays.row(i));
    IntMat rt = IntMat::from_rows(rows).transpose();
    if (positive_functional(rt))
      throw std::logic_error("fan_from_chamber: rays do not span positively");
  }
  return fan;
}

std::vector<Chart> charts(const IntMat& d, const IVec& omega) {
  auto pivot_sets = irrelevant_ideal(d, omega);
  if (pivot_sets.empty()) throw OnWall("no chamber");
  std::vector<Chart> out;
  for (const auto& sub : pivot_sets) {
    Chart c;
    c.pivots = sub;
    auto cm = cokernel_map(d.columns(sub));
    c.stabilizer = cm.group;
    std::vector<bool> in(d.cols(), false);
    for (auto i : sub) in[i] = true;
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (!in[j]) {
        c.nonpivots.push_back(j);
        c.residual_weights.push_back(cm.class_of(d.col(j)));
      }
    out.push_back(c);
  }
  std::sort(out.begin(), out.end(),
            [](const Chart& a, const Chart& b) { return a.pivots < b.pivots; });
  return out;
}

std::pair<Int, IVec> Chart::cyclic_weights() const {
  if (!stabilizer.is_cyclic())
    throw std::logic_error("cyclic_weights: stabilizer is not finite cyclic");
  Int n = stabilizer.is_trivial() ? Int(1) : stabilizer.invariant_factors[0];
  IVec w(nonpivots.size(), Int(0));
  if (n == 1) return {n, w};
  for (std::size_t i = 0; i < nonpivots.size(); ++i) w[i] = residual_weights[i][0];
  IVec best = w;
  for (Int u = 1; u < n; ++u) {
    if (gcd_int(u, n) != 1) continue;
    IVec cand(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) cand[i] = (w[i] * u) % n;
    if (cand < best) best = cand;
  }
  return {n, best};
}

}  // namespace orbifano
