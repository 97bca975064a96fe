#pragma once

#include "orbifano/singularity.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbifano {

struct PolygonError : std::runtime_error {
  explicit PolygonError(const std::string& w) : std::runtime_error(w) {}
};
struct NotConvex : PolygonError {
  explicit NotConvex(const std::string& w) : PolygonError(w) {}
};
struct OriginNotInterior : PolygonError {
  explicit OriginNotInterior(const std::string& w) : PolygonError(w) {}
};
struct NonPrimitiveVertex : PolygonError {
  explicit NonPrimitiveVertex(const std::string& w) : PolygonError(w) {}
};
struct NoFamily : std::runtime_error {
  explicit NoFamily(const std::string& w) : std::runtime_error(w) {}
};

// Convex lattice polygon with primitive vertices and the origin strictly
// inside. Vertices are canonicalized counterclockwise starting from the
// lexicographically smallest vertex.
struct FanoPolygon {
  std::vector<IVec> vertices;

  static FanoPolygon make(std::vector<IVec> vertices);  // validates
  std::size_t size() const { return vertices.size(); }
  std::string str() const;
  bool operator==(const FanoPolygon& o) const { return vertices == o.vertices; }
};

// Complete fan in Z^2: rays in counterclockwise cyclic order, maximal cones
// are consecutive pairs.
struct Fan2 {
  std::vector<IVec> rays;
  std::vector<std::pair<std::size_t, std::size_t>> cones() const;
};

struct SingularityContent {
  Int n = 0;  // primitive T-cones over the whole polygon
  Basket basket;
  bool operator==(const SingularityContent& o) const {
    return n == o.n && basket == o.basket;
  }
};

Fan2 face_fan(const FanoPolygon& p);
SingularityContent singularity_content(const FanoPolygon& p);

// K^2 of the toric surface of the fan, via exact intersection theory.
Rat toric_degree(const Fan2& f);

// index in Z^2 of the subgroup generated by the rays
Int ray_lattice_index(const Fan2& f);

// divisor class group = cokernel of the dual ray map, and the largest f with
// the anticanonical class f-divisible in it
AbelianGroup class_group(const Fan2& f);
Int fano_index(const Fan2& f);

// A row of the family table as needed for matching polygons.
struct FamilyKey {
  std::string name;
  Int k;
  Rat d;
};

// Resolution data for the (k,d)-ambiguous rows: canonical polygon -> name.
struct AmbiguityEntry {
  FanoPolygon polygon;
  std::string name;
};

struct MatchResult {
  std::string name;
  Int k;
  Rat d;
};

// Match a pure-1/3(1,1) polygon to its family by (k, 12 - n - 5k/3); the
// ambiguous pairs are resolved through the supplied table.
MatchResult match_family(const FanoPolygon& p, const std::vector<FamilyKey>& families,
                         const std::vector<AmbiguityEntry>& resolutions);

}  // namespace orbifano
