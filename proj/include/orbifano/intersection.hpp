#pragma once

#include "orbifano/singularity.hpp"
#include "orbifano/toric_git.hpp"

#include <map>
#include <optional>
#include <vector>

namespace orbifano {

struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& w) : std::runtime_error(w) {}
};

// index of the sublattice generated by the rays of a maximal cone; equals the
// stabilizer order of the matching chart
Int cone_multiplicity(const IntMat& cone_rays);

// Chow-ring evaluation data for a complete simplicial fan. Evaluations
// memoize monomial reductions, so share one context per thread; distinct
// contexts are independent.
class GradedRingContext {
 public:
  GradedRingContext(IntMat rays, std::vector<std::vector<std::size_t>> max_cones);
  static GradedRingContext from_fan(const SimplicialFan& fan) {
    return GradedRingContext(fan.rays, fan.max_cones);
  }

  std::size_t ray_count() const { return rays_.rows(); }
  std::size_t dim() const { return rays_.cols(); }
  const IntMat& rays() const { return rays_; }
  const std::vector<std::vector<std::size_t>>& max_cones() const { return cones_; }
  Int multiplicity(std::size_t cone_index) const { return mult_[cone_index]; }

  // top intersection number of dim() divisor classes given as rational
  // combinations of the ray divisors; multilinear and symmetric
  Rat top(const std::vector<QVec>& classes) const;

  // independent evaluation that sets up the full degree-d linear system; used
  // to cross-check the recursive reduction
  Rat top_by_linear_system(const std::vector<QVec>& classes) const;

  bool is_face(const std::vector<std::size_t>& support) const;

 private:
  IntMat rays_;
  std::vector<std::vector<std::size_t>> cones_;
  std::vector<Int> mult_;
  mutable std::map<std::vector<Int>, std::optional<Rat>> memo_;

  Rat evaluate(const std::vector<Int>& mono) const;
};

// Direct surface-case formulas from adjacent-cone determinants; ships for the
// degree-2 cross-check in tests and for polygon degrees.
Rat surface_top_intersection(const IntMat& rays,
                             const std::vector<std::vector<std::size_t>>& cones,
                             const QVec& class_a, const QVec& class_b);

// K_X^2 of the complete intersection cut out by the bundles inside the GIT
// quotient at omega. The classes live in Z^r; dim F - #bundles must be 2.
Rat ci_degree(const WeightMatrix& w, const IVec& omega, const std::vector<IVec>& bundles);

// solve D x = c over Q to express a class as ray coefficients
QVec class_as_ray_coefficients(const IntMat& d, const IVec& c);

}  // namespace orbifano
