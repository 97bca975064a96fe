#pragma once

#include "orbifano/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbifano {

struct BadCongruence : std::runtime_error {
  explicit BadCongruence(const std::string& w) : std::runtime_error(w) {}
};

struct FamilyInvariants {
  Int k;
  Rat d;       // anticanonical degree
  Int h0;      // of the anticanonical bundle
  Int r;       // Picard rank of the minimal resolution
  Int n;       // Euler number of the nonsingular locus
  Rat c2hat;   // orbifold second Chern class
  Int moduli;  // dimension of the family
};

// closed-form invariants from (k, d); requires d > 0 and d = k/3 mod 1
FamilyInvariants invariants_of(const Int& k, const Rat& d);

// first `terms` coefficients of the anticanonical Poincare series
std::vector<Int> poincare_series(const Int& k, const Rat& d, std::size_t terms);

struct DefectBounds {
  Int sigma_min;
  Int sigma_max;
};
DefectBounds defect_bounds(const Int& k, const Rat& d);

enum class CandidateVerdict { Occurs, ExcludedByBounds, ExcludedByCover, Undecided };
std::string verdict_name(CandidateVerdict v);

struct CandidateStatus {
  Int k;
  Rat d;
  Int sigma_min = 0;
  Int sigma_max = 0;
  CandidateVerdict verdict;
  std::string note;
};

// The numerical sieve: enumerate all (k >= 1, d) with d = k/3 mod 1,
// 0 < d <= 12 - 4k/3, h0 >= 0 and r > k, then iterate the covering-space
// exclusion for candidates forced to be defective.
std::vector<CandidateStatus> candidate_sieve();

struct FamilyName {
  std::string name;
  Int k;
  Rat d;
  char series;    // 'X', 'B' or 'S'
  Int fano_index;
  bool operator==(const FamilyName& o) const { return name == o.name; }
};

// The cascade: blow-ups of the root families regenerate the full name set.
std::vector<FamilyName> cascade();

}  // namespace orbifano
