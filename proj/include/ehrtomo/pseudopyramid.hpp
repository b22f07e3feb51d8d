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

#include <cstdint>
#include <optional>

#include "ehrtomo/bodies.hpp"

namespace ehrtomo {

/// ppyr K = union of lambda K over 0 <= lambda <= 1. For convex K this is
/// conv(K u {0}): any convex combination t x + (1 - t) 0 is the point tx of
/// tK, and conversely lambda K is a set of such combinations.
Hull ppyr_polytope(const BodySpec& K);

/// x in ppyr K iff the ray through x leaves K no earlier than |x|.
bool ppyr_contains(const BodySpec& K, const FloatVector& x, double tol = 1e-12);
bool ppyr_contains(const RayCaster& K, const FloatVector& x, double tol = 1e-12);

struct MonteCarloParams {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct MonteCarloEstimate {
  double estimate = 0;
  double standard_error = 0;  // binomial
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
};

/// Exact volume of conv(K u {0}); K must have an exact hull (d <= 3).
Rational ppyr_volume_exact(const BodySpec& K);

/// Hit fraction over a box enclosing K and the origin, times its volume.
/// The box is aligned with the direction from the origin to K's vertex
/// centroid (ball center), so a far-away K does not leave it mostly empty.
MonteCarloEstimate ppyr_volume_montecarlo(const BodySpec& K, const MonteCarloParams& params);

struct Radii {
  Rational outer_sq;
  Rational inner_sq;
  double outer = 0;
  double inner = 0;
  /// The origin is interior, so no facet passes through it and the radial
  /// picture degenerates; inner is then reported equal to outer.
  bool empty_front_shell = false;
};

/// Outer radius: farthest vertex. Inner radius: nearest point of the front
/// shell, i.e. of the facets whose planes miss the origin (decided exactly).
Radii radii(const Hull& ppyr);

struct PseudopyramidRecord {
  BodySpec base;
  std::optional<Hull> hull;
  std::optional<Rational> volume_exact;
  Rational outer_radius_sq;
  Rational inner_radius_sq;
  bool empty_front_shell = false;
};

/// Builds the record for a polytope with d <= 3.
PseudopyramidRecord make_pseudopyramid(const BodySpec& K);

}  // namespace ehrtomo
