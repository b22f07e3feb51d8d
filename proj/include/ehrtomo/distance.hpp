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

#include <vector>

#include "ehrtomo/hull.hpp"
#include "ehrtomo/rational.hpp"

namespace ehrtomo {

struct NearestPoint {
  FloatVector point;
  double distance = 0;
};

/// Point of conv(vertices) closest to the origin, by GJK with a brute-force
/// Johnson sub-step. Any dimension; the simplex never exceeds d+1 points.
NearestPoint min_norm_point(const std::vector<FloatVector>& vertices);

struct ExactNearest {
  RationalVector point;
  Rational distance_sq;
};

/// Exact nearest point of a hull to `p` by enumerating faces. Returns p with
/// distance zero when p lies inside.
ExactNearest nearest_point_exact(const Hull& hull, const RationalVector& p);

/// Exact squared distance from the origin to the convex hull of a single
/// face: one point, a segment, or a planar convex polygon given in cyclic
/// order.
Rational face_min_norm_sq(const std::vector<RationalVector>& face);

}  // namespace ehrtomo
