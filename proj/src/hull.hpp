#ifndef PLURIND_HULL_HPP
#define PLURIND_HULL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "expvec.hpp"

namespace plurind {

// Facet inequality <a, x> <= b. Normals are canonicalized to primitive
// integer vectors with deterministic sign.
struct FacetIneq {
  QVec normal;
  Rational offset;
};

// Exact rational convex polytope, ambient dimension n <= 4.
//
// `vertices` are exactly the extreme points, sorted lexicographically.
// `volume` is the n-dimensional Euclidean volume (0 when the point set is
// affinely degenerate). `facets` is the irredundant facet list, only
// populated when the polytope is full-dimensional.
struct RatPolytope {
  int n = 0;
  int dim = 0;  // affine dimension
  std::vector<QVec> vertices;
  Rational volume;
  std::vector<FacetIneq> facets;

  bool full_dimensional() const { return dim == n; }

  // Exact membership test (works in the degenerate case too).
  bool contains(const QVec& point) const;
};

// Extreme points of conv(points) with exact volume, deterministic output.
// Dimension-specific paths for affine dimension 0/1/2, incremental
// beneath-beyond with exact orientation predicates for 3/4.
RatPolytope hull(std::vector<QVec> points);

// Exact determinant of a small square rational matrix (fraction Gaussian
// elimination; d <= 4 in practice).
Rational rational_det(std::vector<QVec> mat);

// Rank of a set of rational vectors.
int rational_rank(std::vector<QVec> rows);

}  // namespace plurind

#endif
