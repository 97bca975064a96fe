#include "orbifano/singularity.hpp"

#include <algorithm>

namespace orbifano {

namespace {

Int mod_pos(const Int& x, const Int& m) {
  Int r = x % m;
  if (r < 0) r += m;
  return r;
}

// multiplicative inverse mod r; requires gcd(a, r) = 1
Int inv_mod(const Int& a, const Int& r) {
  Int t = 0, nt = 1, rr = r, nr = mod_pos(a, r);
  while (nr != 0) {
    Int q = rr / nr;
    Int tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = rr - q * nr;
    rr = nr;
    nr = tmp;
  }
  return mod_pos(t, r);
}

bool is_primitive2(const IVec& u) {
  return u.size() == 2 && gcd_int(u[0], u[1]) == 1;
}

Int det2(const IVec& u, const IVec& v) { return u[0] * v[1] - u[1] * v[0]; }

}  // namespace

CyclicQuotient CyclicQuotient::make(const Int& r, const Int& a) {
  if (r < 1) throw std::invalid_argument("CyclicQuotient: r must be >= 1");
  if (r == 1) return CyclicQuotient{1, 0};
  Int am = mod_pos(a, r);
  if (am == 0 || gcd_int(am, r) != 1)
    throw std::invalid_argument("CyclicQuotient: need gcd(a, r) = 1, a != 0 mod r");
  Int ai = inv_mod(am, r);
  return CyclicQuotient{r, std::min(am, ai)};
}

std::string CyclicQuotient::str() const {
  if (is_smooth()) return "smooth";
  if (is_du_val()) return "A" + Int(r - 1).str();
  return "1/" + r.str() + "(1," + a.str() + ")";
}

void Basket::add(const CyclicQuotient& s) {
  if (s.is_smooth()) return;
  auto it = std::upper_bound(items.begin(), items.end(), s);
  items.insert(it, s);
}

void Basket::add(const CyclicQuotient& s, const Int& count) {
  for (Int i = 0; i < count; ++i) add(s);
}

Int Basket::count_of(const CyclicQuotient& s) const {
  return Int(std::count(items.begin(), items.end(), s));
}

std::string Basket::str() const {
  if (items.empty()) return "{}";
  std::string out = "{";
  std::size_t i = 0;
  bool first = true;
  while (i < items.size()) {
    std::size_t j = i;
    while (j < items.size() && items[j] == items[i]) ++j;
    if (!first) out += ", ";
    first = false;
    if (j - i > 1) out += std::to_string(j - i) + " x ";
    out += items[i].str();
    i = j;
  }
  return out + "}";
}

CyclicQuotient cone_singularity(const IVec& u, const IVec& v) {
  if (!is_primitive2(u) || !is_primitive2(v))
    throw std::invalid_argument("cone_singularity: generators must be primitive in Z^2");
  Int d = det2(u, v);
  if (d == 0) throw DegenerateCone("cone_singularity: parallel generators");
  // change basis so u = (0,1); then v = (r, s) after a sign fix and a = -s mod r
  Int x, y;  // x*u0 + y*u1 = 1
  {
    Int a0 = u[0], b0 = u[1];
    // extended gcd
    Int s0 = 1, s1 = 0, t0 = 0, t1 = 1, r0 = a0, r1 = b0;
    while (r1 != 0) {
      Int q = r0 / r1;
      Int tmp = r0 - q * r1;
      r0 = r1;
      r1 = tmp;
      tmp = s0 - q * s1;
      s0 = s1;
      s1 = tmp;
      tmp = t0 - q * t1;
      t0 = t1;
      t1 = tmp;
    }
    if (r0 < 0) {
      s0 = -s0;
      t0 = -t0;
    }
    x = s0;
    y = t0;
  }
  // U = [(-u1, u0), (x, y)] sends u to (0, 1)
  Int p = -u[1] * v[0] + u[0] * v[1];
  Int q = x * v[0] + y * v[1];
  if (p < 0) p = -p;  // reflect the first coordinate
  // now the cone is <(0,1), (p, -a)> with a = -q mod p
  Int r = p;
  if (r == 1) return CyclicQuotient::smooth();
  return CyclicQuotient::make(r, mod_pos(-q, r));
}

CyclicQuotient quotient_from_weights(const Int& r, const Int& w1, const Int& w2) {
  if (r < 1) throw std::invalid_argument("quotient_from_weights: r >= 1");
  if (r == 1) return CyclicQuotient::smooth();
  // N' = Z^2 + Z*(w1/r, w2/r); express the positive quadrant in a basis of N'
  IntMat gens{{0, 0}, {0, 0}, {0, 0}};
  gens.at(0, 0) = r;
  gens.at(1, 1) = r;
  gens.at(2, 0) = mod_pos(w1, r);
  gens.at(2, 1) = mod_pos(w2, r);
  // Hermite form of the row lattice (2 x 2 upper triangular h)
  SmithForm f = smith_normal_form(gens.transpose());
  // row lattice of gens = column lattice of gens^T = U^{-1} * S * (...)
  // easier: basis vectors b such that b spans {x : x = gens^T * y}; use the
  // image basis from SNF: columns of U^{-1} scaled by diagonal. U * A * V = S
  // => A = U^{-1} S V^{-1}, image(A) = U^{-1} * image(S) = span of s_ii * (U^{-1} e_i).
  // Compute U^{-1} via adjugate (2x2 unimodular).
  const IntMat& u = f.u;
  Int du = u.at(0, 0) * u.at(1, 1) - u.at(0, 1) * u.at(1, 0);  // +-1
  IntMat uinv(2, 2);
  uinv.at(0, 0) = u.at(1, 1) * du;
  uinv.at(0, 1) = -u.at(0, 1) * du;
  uinv.at(1, 0) = -u.at(1, 0) * du;
  uinv.at(1, 1) = u.at(0, 0) * du;
  // lattice Lam = r * N', basis rows:
  IVec b1 = {uinv.at(0, 0) * f.s.at(0, 0), uinv.at(1, 0) * f.s.at(0, 0)};
  IVec b2 = {uinv.at(0, 1) * f.s.at(1, 1), uinv.at(1, 1) * f.s.at(1, 1)};
  // primitive generator of ray e_i inside N' = Lam / r: smallest t > 0 with
  // t * e_i in N', i.e. (t*r) * e_i in Lam; then express in basis (b1, b2).
  IntMat basis = IntMat::from_cols({b1, b2});
  // x in N' <=> r*x in Lam; the primitive generator of the ray through e is
  // (t/r)*e for the smallest t >= 1 with t*e in Lam, and its coordinates in
  // the basis of N' equal those of t*e in the basis of Lam.
  auto ray_in_basis = [&](const IVec& e) -> IVec {
    for (Int t = 1; t <= r; ++t) {
      auto sol = solve_z(basis, vec_scale(e, t));
      if (sol) return *sol;
    }
    throw std::logic_error("quotient_from_weights: no primitive ray generator");
  };
  IVec p1 = ray_in_basis({1, 0});
  IVec p2 = ray_in_basis({0, 1});
  return cone_singularity(p1, p2);
}

std::vector<Int> hj_expansion(const CyclicQuotient& s) {
  if (s.r == 1) throw SmoothPoint("hj_expansion: smooth point");
  std::vector<Int> out;
  Int r = s.r, a = s.a;
  while (a != 0) {
    Int b = rat_ceil(make_rat(r, a));
    out.push_back(b);
    Int na = b * a - r;
    r = a;
    a = na;
  }
  return out;
}

bool is_class_T(const CyclicQuotient& s) {
  if (s.is_smooth()) return true;
  return (s.a + 1) * (s.a + 1) % s.r == 0;
}

ConeContent singularity_content_of_cone(const IVec& u, const IVec& v) {
  if (!is_primitive2(u) || !is_primitive2(v))
    throw std::invalid_argument("singularity_content_of_cone: non-primitive generator");
  if (det2(u, v) == 0) throw DegenerateCone("singularity_content_of_cone: degenerate");
  IVec delta = vec_sub(v, u);
  Int w = gcd_int(delta[0], delta[1]);  // lattice width of the edge [u, v]
  // primitive normal of the supporting line, oriented away from the origin
  IVec normal = {-delta[1], delta[0]};
  normal = vec_primitive(normal);
  Int ell = normal[0] * u[0] + normal[1] * u[1];
  if (ell < 0) {
    normal = vec_neg(normal);
    ell = -ell;
  }
  ConeContent out;
  out.n = w / ell;
  Int rem = w % ell;
  if (rem != 0) {
    IVec step = {delta[0] / w, delta[1] / w};
    IVec mid = vec_add(u, vec_scale(step, rem));
    out.residue = cone_singularity(u, mid);
  }
  return out;
}

}  // namespace orbifano
