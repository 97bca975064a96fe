#pragma once

#include "orbifano/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbifano {

struct DegenerateCone : std::runtime_error {
  explicit DegenerateCone(const std::string& w) : std::runtime_error(w) {}
};
struct SmoothPoint : std::runtime_error {
  explicit SmoothPoint(const std::string& w) : std::runtime_error(w) {}
};

// Surface cyclic quotient singularity 1/r(1,a) in normal form. r = 1 encodes
// a smooth point. The pair (r,a) and (r, a^{-1} mod r) present the same
// singularity; we canonicalize to the smaller of the two.
struct CyclicQuotient {
  Int r = 1;
  Int a = 0;  // 0 when smooth

  static CyclicQuotient smooth() { return CyclicQuotient{}; }
  static CyclicQuotient make(const Int& r, const Int& a);

  bool is_smooth() const { return r == 1; }
  // A_n = 1/(n+1)(1, n)
  bool is_du_val() const { return r >= 2 && a == r - 1; }
  std::string str() const;

  bool operator==(const CyclicQuotient& o) const { return r == o.r && a == o.a; }
  bool operator<(const CyclicQuotient& o) const {
    if (r != o.r) return r < o.r;
    return a < o.a;
  }
};

inline CyclicQuotient one_third_1_1() { return CyclicQuotient::make(3, 1); }
inline CyclicQuotient a1_point() { return CyclicQuotient::make(2, 1); }
inline CyclicQuotient a2_point() { return CyclicQuotient::make(3, 2); }

// Multiset of singularities in canonical sorted order; smooth entries dropped.
struct Basket {
  std::vector<CyclicQuotient> items;

  void add(const CyclicQuotient& s);
  void add(const CyclicQuotient& s, const Int& count);
  std::size_t size() const { return items.size(); }
  Int count_of(const CyclicQuotient& s) const;
  std::string str() const;
  bool operator==(const Basket& o) const { return items == o.items; }
};

// Quotient type of the two-dimensional cone spanned by primitive u, v.
CyclicQuotient cone_singularity(const IVec& u, const IVec& v);

// Quotient type of C^2 / mu_r acting with weights (w1, w2); non-faithful and
// quasi-reflection actions are normalized away via the lattice.
CyclicQuotient quotient_from_weights(const Int& r, const Int& w1, const Int& w2);

// Hirzebruch-Jung continued fraction of r/a; the negatives of the
// self-intersections of the exceptional curves of the minimal resolution.
std::vector<Int> hj_expansion(const CyclicQuotient& s);

// True iff the singularity admits a qG-smoothing: r | (a+1)^2 in normal form.
bool is_class_T(const CyclicQuotient& s);

struct ConeContent {
  Int n = 0;  // number of primitive T-cones in the decomposition
  std::optional<CyclicQuotient> residue;  // absent when fully T-decomposable
};

// Lattice height/width decomposition of the cone over [u, v].
ConeContent singularity_content_of_cone(const IVec& u, const IVec& v);

}  // namespace orbifano
