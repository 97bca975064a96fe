#include "orbifano/lattice.hpp"

#include <algorithm>
#include <functional>

namespace orbifano {

namespace {

void swap_rows(IntMat& a, IntMat& u, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
  for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
}

void swap_cols(IntMat& a, IntMat& v, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
  for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
}

// row i += c * row j
void add_row(IntMat& a, IntMat& u, std::size_t i, std::size_t j, const Int& c) {
  for (std::size_t k = 0; k < a.cols(); ++k) a.at(i, k) += c * a.at(j, k);
  for (std::size_t k = 0; k < u.cols(); ++k) u.at(i, k) += c * u.at(j, k);
}

// col i += c * col j
void add_col(IntMat& a, IntMat& v, std::size_t i, std::size_t j, const Int& c) {
  for (std::size_t k = 0; k < a.rows(); ++k) a.at(k, i) += c * a.at(k, j);
  for (std::size_t k = 0; k < v.rows(); ++k) v.at(k, i) += c * v.at(k, j);
}

void negate_row(IntMat& a, IntMat& u, std::size_t i) {
  for (std::size_t k = 0; k < a.cols(); ++k) a.at(i, k) = -a.at(i, k);
  for (std::size_t k = 0; k < u.cols(); ++k) u.at(i, k) = -u.at(i, k);
}

}  // namespace

SmithForm smith_normal_form(const IntMat& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  SmithForm f{m, IntMat::identity(rows), IntMat::identity(cols), 0};
  IntMat& a = f.s;
  IntMat& u = f.u;
  IntMat& v = f.v;

  std::size_t t = 0;
  const std::size_t lim = std::min(rows, cols);
  while (t < lim) {
    // pick the nonzero entry of smallest magnitude in the trailing block
    std::size_t pi = t, pj = t;
    Int best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        const Int& x = a.at(i, j);
        if (x == 0) continue;
        if (best == 0 || abs_int(x) < best) {
          best = abs_int(x);
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;
    swap_rows(a, u, t, pi);
    swap_cols(a, v, t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a.at(i, t) == 0) continue;
        Int q = a.at(i, t) / a.at(t, t);
        add_row(a, u, i, t, -q);
        if (a.at(i, t) != 0) {  // remainder smaller than the pivot
          swap_rows(a, u, t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a.at(t, j) == 0) continue;
        Int q = a.at(t, j) / a.at(t, t);
        add_col(a, v, j, t, -q);
        if (a.at(t, j) != 0) {
          swap_cols(a, v, t, j);
          clean = false;
        }
      }
      if (clean) {
        // pivot must divide the whole trailing block
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < cols && clean; ++j)
            if (a.at(i, j) % a.at(t, t) != 0) {
              add_row(a, u, t, i, 1);
              clean = false;
            }
      }
    }
    if (a.at(t, t) < 0) negate_row(a, u, t);
    ++t;
  }
  f.rank = t;
  return f;
}

AbelianGroup cokernel(const IntMat& m) {
  SmithForm f = smith_normal_form(m);
  AbelianGroup g;
  g.free_rank = m.rows() - f.rank;
  for (std::size_t i = 0; i < f.rank; ++i)
    if (f.s.at(i, i) > 1) g.invariant_factors.push_back(f.s.at(i, i));
  return g;
}

std::vector<Int> CokernelMap::class_of(const IVec& w) const {
  IVec raw = proj.mul_vec(w);
  std::vector<Int> out(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (i < group.invariant_factors.size()) {
      Int d = group.invariant_factors[i];
      Int r = raw[i] % d;
      if (r < 0) r += d;
      out[i] = r;
    } else {
      out[i] = raw[i];
    }
  }
  return out;
}

CokernelMap cokernel_map(const IntMat& m) {
  SmithForm f = smith_normal_form(m);
  CokernelMap cm;
  cm.group.free_rank = m.rows() - f.rank;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < f.rank; ++i)
    if (f.s.at(i, i) > 1) {
      cm.group.invariant_factors.push_back(f.s.at(i, i));
      keep.push_back(i);
    }
  for (std::size_t i = f.rank; i < m.rows(); ++i) keep.push_back(i);
  cm.proj = IntMat(keep.size(), m.rows());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) cm.proj.at(i, j) = f.u.at(keep[i], j);
  return cm;
}

namespace {

void subsets_rec(std::size_t n, std::size_t k, std::size_t start,
                 std::vector<std::size_t>& cur,
                 const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (cur.size() == k) {
    fn(cur);
    return;
  }
  for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
    cur.push_back(i);
    subsets_rec(n, k, i + 1, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> cur;
  subsets_rec(n, k, 0, cur, fn);
}

Int gcd_of_minors(const IntMat& m, std::size_t size) {
  if (size > m.rows() || size > m.cols()) return 0;
  if (size == 0) return 1;
  Int g = 0;
  for_each_subset(m.rows(), size, [&](const std::vector<std::size_t>& ris) {
    for_each_subset(m.cols(), size, [&](const std::vector<std::size_t>& cis) {
      g = gcd_int(g, det(m.submatrix(ris, cis)));
    });
  });
  return g;
}

std::vector<IVec> kernel_basis(const IntMat& m) {
  SmithForm f = smith_normal_form(m);
  std::vector<IVec> out;
  for (std::size_t j = f.rank; j < m.cols(); ++j) out.push_back(f.v.col(j));
  return out;
}

std::optional<QVec> solve_q(const IntMat& m, const IVec& b) {
  SmithForm f = smith_normal_form(m);
  IVec ub = f.u.mul_vec(b);
  QVec y(m.cols(), Rat(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < f.rank) {
      if (i < m.cols()) y[i] = make_rat(ub[i], f.s.at(i, i));
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  QVec x(m.cols(), Rat(0));
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) x[i] += Rat(f.v.at(i, j)) * y[j];
  return x;
}

std::optional<IVec> solve_z(const IntMat& m, const IVec& b) {
  SmithForm f = smith_normal_form(m);
  IVec ub = f.u.mul_vec(b);
  IVec y(m.cols(), Int(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < f.rank) {
      if (ub[i] % f.s.at(i, i) != 0) return std::nullopt;
      if (i < m.cols()) y[i] = ub[i] / f.s.at(i, i);
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return f.v.mul_vec(y);
}

// ---------------------------------------------------------------------------
// exact linear-inequality feasibility (Fourier-Motzkin), sizes <= ~12 vars

namespace {

struct LinIneq {
  QVec a;  // a . x >= c
  Rat c;
};

std::optional<QVec> fm_feasible(std::vector<LinIneq> cons, std::size_t nvars) {
  if (nvars == 0) {
    for (const auto& in : cons)
      if (in.c > 0) return std::nullopt;
    return QVec{};
  }
  const std::size_t k = nvars - 1;
  std::vector<LinIneq> lower, upper, zero;
  for (auto& in : cons) {
    if (in.a[k] > 0)
      lower.push_back(in);
    else if (in.a[k] < 0)
      upper.push_back(in);
    else
      zero.push_back(in);
  }
  std::vector<LinIneq> next = zero;
  for (auto& in : next) in.a.resize(k);
  for (const auto& lo : lower)
    for (const auto& up : upper) {
      // (c_lo - a_lo.x')/a_lo[k] <= x_k <= (c_up - a_up.x')/a_up[k]
      LinIneq comb;
      comb.a.resize(k);
      for (std::size_t i = 0; i < k; ++i)
        comb.a[i] = lo.a[i] * (-up.a[k]) + up.a[i] * lo.a[k];
      comb.c = lo.c * (-up.a[k]) + up.c * lo.a[k];
      comb.a.resize(k);
      {
        LinIneq red;
        red.a.assign(comb.a.begin(), comb.a.end());
        red.c = comb.c;
        next.push_back(red);
      }
    }
  auto sub = fm_feasible(next, k);
  if (!sub) return std::nullopt;
  QVec x = *sub;
  x.resize(nvars, Rat(0));
  bool has_lo = false, has_up = false;
  Rat best_lo = 0, best_up = 0;
  for (const auto& lo : lower) {
    Rat bound = lo.c;
    for (std::size_t i = 0; i < k; ++i) bound -= lo.a[i] * x[i];
    bound /= lo.a[k];
    if (!has_lo || bound > best_lo) best_lo = bound;
    has_lo = true;
  }
  for (const auto& up : upper) {
    Rat bound = up.c;
    for (std::size_t i = 0; i < k; ++i) bound -= up.a[i] * x[i];
    bound /= up.a[k];
    if (!has_up || bound < best_up) best_up = bound;
    has_up = true;
  }
  if (has_lo && has_up)
    x[k] = (best_lo + best_up) / 2;
  else if (has_lo)
    x[k] = best_lo;
  else if (has_up)
    x[k] = best_up;
  else
    x[k] = 0;
  return x;
}

}  // namespace

std::optional<QVec> positive_functional(const IntMat& d) {
  const std::size_t r = d.rows(), m = d.cols();
  std::vector<LinIneq> cons;
  for (std::size_t j = 0; j < m; ++j) {
    LinIneq in;
    in.a = to_qvec(d.col(j));
    in.c = 1;
    if (vec_is_zero(d.col(j))) return std::nullopt;
    cons.push_back(in);
  }
  return fm_feasible(cons, r);
}

namespace {

void enumerate_rec(const IntMat& d, const QVec& lam, IVec& target, IVec& cur,
                   std::size_t j, std::vector<IVec>& out) {
  const std::size_t m = d.cols();
  if (j == m) {
    if (vec_is_zero(target)) out.push_back(cur);
    return;
  }
  // lam . target bounds the remaining total weight
  Rat budget = 0;
  for (std::size_t i = 0; i < target.size(); ++i) budget += lam[i] * Rat(target[i]);
  if (budget < 0) return;
  Rat wj = 0;
  for (std::size_t i = 0; i < target.size(); ++i) wj += lam[i] * Rat(d.at(i, j));
  Int hi = rat_floor(budget / wj);
  if (hi < 0) hi = 0;
  for (Int e = hi; e >= 0; --e) {
    cur[j] = e;
    IVec save = target;
    for (std::size_t i = 0; i < target.size(); ++i) target[i] -= e * d.at(i, j);
    enumerate_rec(d, lam, target, cur, j + 1, out);
    target = save;
  }
  cur[j] = 0;
}

}  // namespace

std::vector<IVec> enumerate_nonneg_solutions(const IntMat& d, const IVec& target) {
  if (target.size() != d.rows())
    throw std::invalid_argument("enumerate_nonneg_solutions: target size");
  auto lam = positive_functional(d);
  if (!lam)
    throw NonConvexCone(
        "columns do not span a strictly convex cone; solution set is infinite");
  std::vector<IVec> out;
  IVec t = target, cur(d.cols(), Int(0));
  enumerate_rec(d, *lam, t, cur, 0, out);
  // descending lexicographic, leading exponent most significant
  std::sort(out.begin(), out.end(), [](const IVec& a, const IVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  });
  return out;
}

}  // namespace orbifano
