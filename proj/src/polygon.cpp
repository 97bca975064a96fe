#include "orbifano/polygon.hpp"

#include "orbifano/intersection.hpp"

#include <algorithm>

namespace orbifano {

namespace {

Int cross(const IVec& a, const IVec& b) { return a[0] * b[1] - a[1] * b[0]; }

std::string vertex_str(const IVec& v) {
  return "(" + v[0].str() + "," + v[1].str() + ")";
}

}  // namespace

FanoPolygon FanoPolygon::make(std::vector<IVec> vertices) {
  if (vertices.size() < 3) throw NotConvex("polygon needs at least 3 vertices");
  for (const auto& v : vertices) {
    if (v.size() != 2) throw PolygonError("vertices must lie in Z^2");
    if (gcd_int(v[0], v[1]) != 1) throw NonPrimitiveVertex(vertex_str(v));
  }
  // orient counterclockwise by signed area
  Int area2 = 0;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) area2 += cross(vertices[i], vertices[(i + 1) % n]);
  if (area2 < 0) std::reverse(vertices.begin(), vertices.end());
  // convexity, no three consecutive vertices collinear
  for (std::size_t i = 0; i < n; ++i) {
    IVec a = vertices[i], b = vertices[(i + 1) % n], c = vertices[(i + 2) % n];
    Int turn = cross(vec_sub(b, a), vec_sub(c, b));
    if (turn < 0) throw NotConvex("reflex turn at " + vertex_str(b));
    if (turn == 0) throw NotConvex("collinear vertices at " + vertex_str(b));
  }
  // origin strictly interior: every edge has the origin strictly on its left
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(vertices[i], vertices[(i + 1) % n]) <= 0)
      throw OriginNotInterior("edge from " + vertex_str(vertices[i]));
  }
  // rotate so the lexicographically smallest vertex comes first
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (vertices[i] < vertices[best]) best = i;
  std::rotate(vertices.begin(), vertices.begin() + best, vertices.end());
  FanoPolygon p;
  p.vertices = std::move(vertices);
  return p;
}

std::string FanoPolygon::str() const {
  std::string out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += ",";
    out += vertex_str(vertices[i]);
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Fan2::cones() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < rays.size(); ++i)
    out.push_back({i, (i + 1) % rays.size()});
  return out;
}

Fan2 face_fan(const FanoPolygon& p) {
  Fan2 f;
  f.rays = p.vertices;
  return f;
}

SingularityContent singularity_content(const FanoPolygon& p) {
  SingularityContent out;
  const std::size_t n = p.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    auto c = singularity_content_of_cone(p.vertices[i], p.vertices[(i + 1) % n]);
    out.n += c.n;
    if (c.residue) out.basket.add(*c.residue);
  }
  return out;
}

Rat toric_degree(const Fan2& f) {
  const std::size_t m = f.rays.size();
  IntMat rays = IntMat::from_rows(f.rays);
  std::vector<std::vector<std::size_t>> cones;
  for (auto [i, j] : f.cones()) cones.push_back({std::min(i, j), std::max(i, j)});
  GradedRingContext ctx(rays, cones);
  QVec k(m, Rat(1));  // -K as the sum of all ray divisors
  return ctx.top({k, k});
}

Int ray_lattice_index(const Fan2& f) {
  IntMat rays = IntMat::from_rows(f.rays).transpose();  // 2 x m
  SmithForm s = smith_normal_form(rays);
  if (s.rank != 2) throw PolygonError("ray_lattice_index: rays do not span");
  return s.s.at(0, 0) * s.s.at(1, 1);
}

namespace {

IntMat dual_ray_matrix(const Fan2& f) {
  // m x 2 matrix whose image is the lattice of principal divisors
  return IntMat::from_rows(f.rays);
}

}  // namespace

AbelianGroup class_group(const Fan2& f) { return cokernel(dual_ray_matrix(f)); }

Int fano_index(const Fan2& f) {
  IntMat m = dual_ray_matrix(f);
  SmithForm s = smith_normal_form(m);
  IVec one(f.rays.size(), Int(1));
  IVec u1 = s.u.mul_vec(one);
  // -K is f-divisible iff each coordinate is: free coords need f | c_i,
  // torsion coords need gcd(f, d_i) | c_i
  Int g = 0;
  for (std::size_t i = s.rank; i < f.rays.size(); ++i) g = gcd_int(g, u1[i]);
  if (g == 0) throw PolygonError("fano_index: anticanonical class is torsion");
  for (Int f0 = g; f0 >= 1; --f0) {
    if (g % f0 != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i < s.rank; ++i) {
      Int d = s.s.at(i, i);
      if (d > 1 && u1[i] % gcd_int(f0, d) != 0) ok = false;
    }
    if (ok) return f0;
  }
  return 1;
}

MatchResult match_family(const FanoPolygon& p, const std::vector<FamilyKey>& families,
                         const std::vector<AmbiguityEntry>& resolutions) {
  auto content = singularity_content(p);
  Int k = Int(content.basket.size());
  for (const auto& s : content.basket.items)
    if (!(s == one_third_1_1()))
      throw PolygonError("match_family: basket is not pure 1/3(1,1)");
  Rat d = Rat(12) - Rat(content.n) - make_rat(5 * k, 3);
  std::vector<const FamilyKey*> hits;
  for (const auto& fam : families)
    if (fam.k == k && fam.d == d) hits.push_back(&fam);
  if (hits.empty())
    throw NoFamily("no family with k = " + k.str() + ", d = " + to_string(d));
  if (hits.size() == 1) return {hits[0]->name, k, d};
  for (const auto& res : resolutions)
    if (res.polygon == p) return {res.name, k, d};
  throw NoFamily("ambiguous (k, d) = (" + k.str() + ", " + to_string(d) +
                 ") and the polygon is not a recorded degeneration");
}

}  // namespace orbifano
