#pragma once

#include "orbifano/matrix.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace orbifano {

struct NonConvexCone : std::runtime_error {
  explicit NonConvexCone(const std::string& what) : std::runtime_error(what) {}
};

// Finitely generated abelian group in canonical form: Z^free_rank (+) sum of
// Z/d_i with 1 < d_1 | d_2 | ... | d_s.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Int> invariant_factors;

  bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
  bool is_finite() const { return free_rank == 0; }
  Int order() const {
    if (free_rank > 0) return 0;
    Int n = 1;
    for (const Int& d : invariant_factors) n *= d;
    return n;
  }
  bool is_cyclic() const { return free_rank == 0 && invariant_factors.size() <= 1; }
  bool operator==(const AbelianGroup& o) const {
    return free_rank == o.free_rank && invariant_factors == o.invariant_factors;
  }
};

struct SmithForm {
  IntMat s;  // diagonal, divisibility chain on the nonzero part
  IntMat u;  // unimodular, rows() x rows()
  IntMat v;  // unimodular, cols() x cols()
  std::size_t rank = 0;
};

// U * m * V = S with U, V unimodular and S diagonal with d_1 | d_2 | ...
SmithForm smith_normal_form(const IntMat& m);

// Z^rows / image(m), canonical form.
AbelianGroup cokernel(const IntMat& m);

// Describes Z^n/image(B) together with the projection map, so element classes
// can be computed. Torsion coordinates come first, then free coordinates.
struct CokernelMap {
  AbelianGroup group;
  // row i of `proj` sends w to the i-th coordinate of its class; the first
  // group.invariant_factors.size() rows are taken modulo the matching factor.
  IntMat proj;
  std::vector<Int> class_of(const IVec& w) const;
};
CokernelMap cokernel_map(const IntMat& m);

// gcd of all size x size minors; 0 if all vanish (or size exceeds dims).
Int gcd_of_minors(const IntMat& m, std::size_t size);

// Integer basis of {v : m v = 0}, as columns.
std::vector<IVec> kernel_basis(const IntMat& m);

// Solve m x = b over Q / over Z; empty optional when inconsistent.
std::optional<QVec> solve_q(const IntMat& m, const IVec& b);
std::optional<IVec> solve_z(const IntMat& m, const IVec& b);

// Strict convexity of the cone spanned by the columns: a rational functional
// lam with lam . D_i >= 1 for every column, if one exists.
std::optional<QVec> positive_functional(const IntMat& d);

// All v >= 0 with D v = target, in descending lexicographic order (leading
// exponent most significant). Requires the columns of D to span a strictly
// convex cone; throws NonConvexCone otherwise.
std::vector<IVec> enumerate_nonneg_solutions(const IntMat& d, const IVec& target);

// Visits all k-subsets of {0..n-1} in increasing order.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn);

}  // namespace orbifano
