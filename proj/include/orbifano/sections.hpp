#pragma once

#include "orbifano/intersection.hpp"
#include "orbifano/singularity.hpp"
#include "orbifano/toric_git.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orbifano {

struct NotAntisymmetric : std::runtime_error {
  explicit NotAntisymmetric(const std::string& w) : std::runtime_error(w) {}
};

// monomial = exponent vector over a fixed coordinate set
using Monomial = IVec;

// polynomial with rational coefficients in canonical (map) order
struct MonomialPoly {
  std::map<Monomial, Rat> terms;

  static MonomialPoly zero() { return {}; }
  static MonomialPoly monomial(const Monomial& m, const Rat& c = 1);
  bool is_zero() const { return terms.empty(); }
  std::size_t term_count() const { return terms.size(); }

  MonomialPoly operator+(const MonomialPoly& o) const;
  MonomialPoly operator-(const MonomialPoly& o) const;
  MonomialPoly operator*(const MonomialPoly& o) const;
  bool operator==(const MonomialPoly& o) const { return terms == o.terms; }

  // parse "x0^2 x1 - 3 x2^4" style text over the given variable names
  static MonomialPoly parse(const std::string& text,
                            const std::vector<std::string>& vars);
  std::string str(const std::vector<std::string>& vars) const;
};

// all monomials of the given class, in descending lexicographic order
std::vector<Monomial> monomial_basis(const WeightMatrix& w, const IVec& cls);

// monomials not involving any of the killed coordinates
std::vector<Monomial> restricted_basis(const std::vector<Monomial>& basis,
                                       const std::vector<std::size_t>& kill);

// Pfaffian of the 4x4 antisymmetric submatrix obtained by deleting row and
// column `removed` from a 5x5 antisymmetric matrix
MonomialPoly pfaffian4(const std::vector<std::vector<MonomialPoly>>& a,
                       std::size_t removed);

// the common class of all monomials of p, or absent when mixed
std::optional<IVec> check_homogeneity(const MonomialPoly& p, const WeightMatrix& w);

// class equality check for ray presentations: v - w in the image of the dual
// ray map (rays given as rows of an m x d matrix)
bool same_class_mod_rays(const IntMat& rays, const Monomial& v, const Monomial& w);

// true iff the relation maps to zero under coordinate -> monomial subst
bool check_substitution_identity(const std::vector<MonomialPoly>& substitution,
                                 const MonomialPoly& relation);

// ---------------------------------------------------------------------------
// induced-singularity analysis for complete intersections

enum class FindingKind {
  OriginPoint,       // chart origin lies on X; induced quotient reported
  StratumPoints,     // X meets a positive-dimensional singular stratum
  StratumDisjoint,   // X proven disjoint from the stratum
  CannotReduce,      // no general-member linear terms to eliminate
  NotWellFormedLocus,  // X contains a positive-dimensional singular stratum
  Inconclusive,
};

struct SingularityFinding {
  FindingKind kind;
  std::vector<std::size_t> chart_pivots;   // OriginPoint
  std::vector<std::size_t> stratum_kill;   // Stratum* kinds: vanishing coords
  CyclicQuotient type;                     // point kinds
  Int count = 0;                           // number of points
  std::string note;
};

struct CiSingularityReport {
  std::vector<SingularityFinding> findings;
  Basket basket() const;
  bool clean() const;  // no CannotReduce / NotWellFormedLocus / Inconclusive
};

// For each singular chart or stratum of the GIT quotient, decide whether the
// general complete intersection of the bundles passes through it and report
// the induced quotient singularities.
CiSingularityReport ci_singularity_report(const WeightMatrix& w, const IVec& omega,
                                          const std::vector<IVec>& bundles);

}  // namespace orbifano
