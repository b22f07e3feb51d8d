// Copyright 2026 The ehrtomo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

#include "ehrtomo/rational.hpp"

namespace ehrtomo {

struct Facet {
  /// Primitive integer outward normal; the hull satisfies normal.x <= offset.
  RationalVector normal;
  Rational offset;
  /// Indices into Hull::vertices. In 3-D the polygon is listed counter-
  /// clockwise seen from outside, in 2-D the edge runs counter-clockwise
  /// around the polygon, in 1-D it is the single endpoint.
  std::vector<std::size_t> vertices;
};

/// A full-dimensional convex polytope in R^d, d <= 3, with exact data.
/// Vertices are extreme points only, sorted lexicographically.
struct Hull {
  std::size_t dim = 0;
  std::vector<RationalVector> vertices;
  std::vector<Facet> facets;

  bool contains(const RationalVector& x) const;
  std::vector<RationalVector> facet_points(const Facet& f) const;
};

/// Exact convex hull of a point set in R^d, d in {1,2,3}. Collinear and
/// coplanar points are merged into facets. Throws DegenerateInput when the
/// affine hull of the points is not all of R^d.
Hull convex_hull(const std::vector<RationalVector>& points);

/// Dimension of the affine hull of `points` (-1 for an empty set).
int affine_rank(const std::vector<RationalVector>& points);

/// Exact d-volume by fan triangulation from a vertex.
Rational polytope_volume(const Hull& hull);

/// Outward normal scaled by the (d-1)-volume of the facet. In 1-D the facet
/// "area" is one.
RationalVector facet_area_vector(const Hull& hull, const Facet& f);

/// Exact vertex set of {x : A x <= b} for d <= 3, by solving all d-subsets of
/// constraints. Requires a bounded, full-dimensional system.
std::vector<RationalVector> enumerate_vertices(const RationalMatrix& A, const RationalVector& b);

/// Solves the square system M x = r exactly; returns false when singular.
bool solve_exact(RationalMatrix M, RationalVector r, RationalVector& x);

}  // namespace ehrtomo
