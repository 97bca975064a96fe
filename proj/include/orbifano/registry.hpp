#pragma once

#include "orbifano/invariants.hpp"
#include "orbifano/mmp.hpp"
#include "orbifano/polygon.hpp"
#include "orbifano/sections.hpp"
#include "orbifano/toric_git.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace orbifano {

struct SchemaError : std::runtime_error {
  explicit SchemaError(const std::string& w) : std::runtime_error(w) {}
};

enum class ConstructionType {
  CompleteIntersection,  // weight matrix + bundles + nef generators
  WeightedGrassmannian,  // textual record
  Pfaffian,              // antisymmetric matrix model on a toric 5-fold
  NonSimplicial,         // ray presentation with monomial identities
  Quotient,              // finite quotient record
};

struct Construction {
  ConstructionType type = ConstructionType::CompleteIntersection;
  std::string description;
  // CompleteIntersection / Quotient-with-weights / Pfaffian
  IntMat weights;
  bool has_weights = false;
  std::vector<IVec> bundles;
  std::vector<IVec> nef_generators;
  IVec omega;  // recorded stability condition when not -K - Lambda
  std::vector<std::string> vars;
  // Pfaffian data: upper-triangular entries a_{ij} (i<j) row by row, the 5
  // recorded equations, and the twisting line bundle
  std::vector<std::string> matrix_upper;
  std::vector<std::string> equations;
  IVec line_bundle;
  // NonSimplicial data
  IntMat rays;
  bool has_rays = false;
  std::vector<std::string> x_monomials;     // global even-degree coordinates
  std::vector<std::string> z_monomials;     // global odd-degree coordinates
  std::vector<std::string> chart_vars;      // octahedral chart coordinates
  std::vector<std::string> chart_z;         // cube generators in chart coords
  std::vector<std::array<int, 4>> cube_relations;  // z_a z_b = z_c z_d (1-based)
  int polygon_id = 0;  // Quotient: companion polygon row
};

struct FamilyRecord {
  std::string name;
  char series = 'X';
  Int k;
  Rat d;
  Int h0, r, moduli, fano_index;
  std::string pi1;  // "0" or "Z/3"
  Construction construction;
  bool typical() const {
    return construction.type == ConstructionType::CompleteIntersection;
  }
};

struct PolygonRecord {
  int id = 0;
  FanoPolygon polygon;
  Int n, k;
  std::string deforms_to;
};

struct BinomialRecord {
  int polygon_id = 0;
  std::string family;
  std::vector<std::string> source_vars, target_vars, substitution;
  std::string relation;
};

struct MMPRootRecord {
  std::string family;
  std::vector<std::pair<std::vector<Contraction>, std::string>> expected;
  std::vector<CuratedPrune> prunes;
};

struct Registry {
  std::vector<FamilyRecord> families;
  std::vector<PolygonRecord> polygons;
  std::vector<BinomialRecord> binomials;
  std::vector<MMPRootRecord> mmp_roots;

  const FamilyRecord* find_family(const std::string& name) const;
  const PolygonRecord* find_polygon(int id) const;
  std::vector<FamilyKey> family_keys() const;
  std::vector<AmbiguityEntry> ambiguity_entries() const;
  MMPState root_state(const FamilyRecord& f) const;
};

// embedded table data
const char* embedded_registry_json();

Registry load_registry();  // from the embedded data
Registry load_registry_json(const std::string& json_text);
Registry load_registry_file(const std::string& path);

// verification ---------------------------------------------------------------

struct CheckResult {
  std::string id;
  std::string citation;
  std::string status;  // "pass" | "fail" | "skipped-with-citation"
  std::string expected;
  std::string computed;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::size_t failures() const;
  bool all_passed() const { return failures() == 0; }
  std::string summary() const;
  std::string to_json() const;
};

// suite: all | tables | polygons | constructions | mmp | identities | candidates
VerificationReport verify_all(const Registry& reg, const std::string& suite = "all");

// rendering -------------------------------------------------------------------

std::string render_polygon_svg(const FanoPolygon& p);

}  // namespace orbifano
