#pragma once

#include "orbifano/singularity.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbifano {

struct NotApplicable : std::runtime_error {
  explicit NotApplicable(const std::string& w) : std::runtime_error(w) {}
};

enum class Contraction { E1, E2, E3, E4, E5, E6 };
std::string contraction_name(Contraction t);
std::optional<Contraction> contraction_from_name(const std::string& s);

// Basket of a del Pezzo surface with 1/3(1,1), A2 and A1 points, together
// with the Picard rank and canonical square of its minimal resolution.
struct MMPState {
  Int k = 0;      // 1/3(1,1) points
  Int n2 = 0;     // A2 points
  Int n1 = 0;     // A1 points
  Int rho_y = 0;  // Picard rank of the minimal resolution
  Int k2y = 0;    // K^2 of the minimal resolution

  Int rho_x() const { return rho_y - k - n1 - 2 * n2; }
  Rat kx2() const { return Rat(k2y) + make_rat(k, 3); }
  void validate() const;  // k+2n2+n1 <= 6, Noether, positivity
  std::string str() const;
  bool operator==(const MMPState& o) const {
    return k == o.k && n2 == o.n2 && n1 == o.n1 && rho_y == o.rho_y && k2y == o.k2y;
  }
};

bool applicable(const MMPState& s, Contraction t);
MMPState apply(const MMPState& s, Contraction t);

// singularity type created at the image point, if any
std::optional<CyclicQuotient> created_by(Contraction t);

// Divisorial contractions legal as the next directed step after `last`:
// applicability, the priority rule (an earlier-listed type may follow a
// later-listed one only when it consumes a singularity the last step
// created), and the bar on an A2 contraction right after a type-E6 step.
std::vector<Contraction> directed_available(const MMPState& s,
                                            std::optional<Contraction> last);

// terminal states --------------------------------------------------------

enum class DSurface { D1, D2, D3, D4, D5 };
std::string d_surface_name(DSurface d);
// the unique rank-one match for the state, if any
std::optional<DSurface> match_d_surface(const MMPState& s);

struct ConicBundleEnd {
  Int c1_fibres = 0;  // fibres carrying two A1 points
  Int c2_fibres = 0;  // fibres carrying a 1/3(1,1) and an A2 point
};
// conic-bundle end: the basket must split into whole special fibres with
// rho(X) = 2
std::optional<ConicBundleEnd> match_conic_bundle(const MMPState& s);

// trees --------------------------------------------------------------------

struct MMPTerminal {
  enum Kind { ConicBundle, RankOne } kind;
  ConicBundleEnd fibres;  // ConicBundle
  DSurface d = DSurface::D1;  // RankOne
  std::string str() const;
};

struct MMPTree {
  MMPState state;
  std::optional<Contraction> edge;  // label from the parent
  std::vector<MMPTree> children;
  std::vector<MMPTerminal> terminals;
  bool dead_end = false;  // no children and no terminals
  std::string pruned_citation;  // curated mode: removed subtree, if recorded

  // all root-to-terminal contraction sequences
  std::vector<std::pair<std::vector<Contraction>, MMPTerminal>> terminal_paths() const;
  std::size_t count_dead_ends() const;
  std::string render(int indent = 0) const;
};

enum class TreeMode { Raw, Curated };

struct CuratedPrune {
  std::vector<Contraction> path;  // prefix to remove
  std::string citation;
};

MMPTree enumerate_tree(const MMPState& root, TreeMode mode,
                       const std::vector<CuratedPrune>& prunes = {});

}  // namespace orbifano
