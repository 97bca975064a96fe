#pragma once

#include "orbifano/lattice.hpp"

#include <string>
#include <vector>

namespace orbifano {

struct OnWall : std::runtime_error {
  explicit OnWall(const std::string& w) : std::runtime_error(w) {}
};
struct NotWellFormed : std::runtime_error {
  explicit NotWellFormed(const std::string& w) : std::runtime_error(w) {}
};

// GIT presentation of a toric variety: r x m integer matrix whose columns
// span a strictly convex full-dimensional cone.
struct WeightMatrix {
  IntMat d;
  std::vector<std::string> labels;  // column labels, default x0..x{m-1}

  std::size_t rank() const { return d.rows(); }
  std::size_t coords() const { return d.cols(); }
  static WeightMatrix make(const IntMat& d, std::vector<std::string> labels = {});
  // -K_F = class of the sum of all coordinate divisors
  IVec anticanonical() const;
};

// exact cone predicates ------------------------------------------------------

// x in cone(gens)?  Caratheodory over linearly independent subsets.
bool cone_contains(const std::vector<IVec>& gens, const IVec& x);

// Full-dimensional polyhedral cone given by generators; facet description and
// extreme rays computed exactly.
struct Cone {
  std::vector<IVec> rays;     // primitive extreme rays, canonically sorted
  std::vector<IVec> normals;  // inward facet normals (primitive)
  bool contains(const IVec& x) const;
  bool contains_interior(const IVec& x) const;
  bool same_cone_as(const Cone& o) const;
};

// the cone spanned by the given generators (must be full-dimensional in its
// span = all of Z^r for our uses)
Cone cone_from_generators(const std::vector<IVec>& gens);

// standard / well-formed ------------------------------------------------------

// gcd of all r x r minors is 1
bool is_standard(const IntMat& d);
// d standard, and d with any one column removed standard
bool is_wellformed(const IntMat& d);

struct WellformResult {
  IntMat d;                      // well-formed presentation (rows = row rank)
  std::vector<QVec> transform;   // new class = transform * old class
  IVec transform_class(const IVec& old_class) const;  // must land in Z
};
WellformResult wellform(const IntMat& d);

// chambers, fans, charts ------------------------------------------------------

// The chamber of the secondary fan containing omega; throws OnWall when omega
// lies on a codimension-one cone spanned by columns.
Cone chamber_of(const IntMat& d, const IVec& omega);
inline Cone nef_cone(const IntMat& d, const IVec& omega) { return chamber_of(d, omega); }

// Minimal monomial generators of the irrelevant ideal as pivot index sets.
std::vector<std::vector<std::size_t>> irrelevant_ideal(const IntMat& d, const IVec& omega);

struct SimplicialFan {
  std::size_t m = 0;                                // number of rays
  std::size_t dim = 0;                              // m - r
  std::vector<std::vector<std::size_t>> max_cones;  // index sets of size dim
  IntMat rays;                                      // m x dim geometric realization
};

// Fan of the GIT quotient at omega. Requires d well-formed; realization from
// an integer kernel basis of d (rays = rows). Completeness is verified.
SimplicialFan fan_from_chamber(const IntMat& d, const IVec& omega);

struct Chart {
  std::vector<std::size_t> pivots;     // size r
  AbelianGroup stabilizer;
  std::vector<std::size_t> nonpivots;
  // class of each non-pivot coordinate in the stabilizer (cokernel coords)
  std::vector<std::vector<Int>> residual_weights;

  bool cyclic() const { return stabilizer.is_cyclic(); }
  // for a cyclic stabilizer of order n: the weights as integers mod n,
  // scaled by the unit that makes the tuple lexicographically least
  std::pair<Int, IVec> cyclic_weights() const;
};

std::vector<Chart> charts(const IntMat& d, const IVec& omega);

}  // namespace orbifano
