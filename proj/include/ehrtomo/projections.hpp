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
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ehrtomo/bodies.hpp"

namespace ehrtomo {

/// Unit direction, optionally tied to a primitive integer vector w with
/// v = w / |w|.
struct DirectionSample {
  FloatVector v;
  std::optional<RationalVector> primitive;

  static DirectionSample from_float(const FloatVector& v);
  /// Any nonzero rational vector; it is reduced to its primitive form.
  static DirectionSample from_rational(const RationalVector& w);
};

/// Reflection x -> x - 2 (u.x / u.u) u sending v to the last axis. It is its
/// own inverse.
class Householder {
 public:
  explicit Householder(const FloatVector& v);
  FloatVector apply(const FloatVector& x) const;

 private:
  FloatVector u_;
  double uu_ = 0;
};

/// Brightness V_K(v): (d-1)-volume of the orthogonal shadow of K on v-perp.
/// Polytopes (d = 2, 3) project their vertices and measure the hull; the
/// computation is exact when v is a coordinate axis. Balls use the closed
/// form kappa_{d-1} r^{d-1}.
double brightness_hull(const BodySpec& K, const DirectionSample& v);

/// Cauchy's formula: half of sum_F |v . n_F| area(F), from exact facet data.
double brightness_facet_sum(const BodySpec& K, const DirectionSample& v);

enum class SphereMethod { Exact2d, Quadrature3d, MonteCarlo };

struct SphereAreaOptions {
  /// Unset: default_sphere_method(d).
  std::optional<SphereMethod> method;
  double tol = 1e-10;  // quadrature target
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct SphereAreaResult {
  double value = 0;
  double error_estimate = 0;  // standard error for Monte-Carlo
  SphereMethod method = SphereMethod::Exact2d;
};

/// Default method for a dimension: exact angles in 2-D, quadrature in 3-D,
/// Monte-Carlo beyond.
SphereMethod default_sphere_method(std::size_t d);

/// (d-1)-area of the radial projection S(K) of K onto the unit sphere.
/// The origin must lie strictly outside K (OriginInside otherwise).
///
/// The 3-D quadrature integrates the area element in geodesic polar
/// coordinates about an interior direction of K: the radial integral is
/// done in closed form, 1 - cos(alpha(theta)), with alpha(theta) the angular
/// extent found by bisection on ray hits, and the angular integral is
/// adaptive Simpson with its Richardson correction.
SphereAreaResult spherical_area(const BodySpec& K, const SphereAreaOptions& opts = {});

/// Surface area of the unit sphere in R^d.
double unit_sphere_area(std::size_t d);
/// Volume of the unit ball in R^n.
double unit_ball_volume(std::size_t n);

/// A convex set in the hyperplane v-perp, expressed in the rotated frame
/// where v is the last axis.
struct ShadowRegion {
  std::size_t dim = 0;
  std::function<bool(const FloatVector&)> membership;
  double bounding_radius = 0;
  /// Hull vertices of the orthogonal shadow of a polytope (2-D: interval
  /// end points in order; 3-D: counter-clockwise polygon). Empty otherwise.
  std::vector<FloatVector> vertices;

  bool contains(const FloatVector& y) const { return membership(y); }
};

struct ShadowPair {
  ShadowRegion kprime;  // orthogonal shadow of K
  ShadowRegion kmu;     // shadow of mu S(K + mu v) on v-perp
};

/// Requires mu > N = bounding_radius(K); throws MuTooSmall otherwise.
ShadowPair shadow_regions(const BodySpec& K, const DirectionSample& v, double mu);

/// For each point p of K returns (x0, x1): x0 drops the last rotated
/// coordinate of p + mu v; x1 = mu x0 / |p + mu v| is the image in K_mu.
std::vector<std::pair<FloatVector, FloatVector>> shadow_images(const BodySpec& K, const DirectionSample& v,
                                                               double mu, const std::vector<FloatVector>& points);

/// Hausdorff distance between K' and K_mu measured from the images of
/// `samples` points spread over the boundary of a polytope K (d = 2, 3).
double sampled_shadow_hausdorff(const BodySpec& K, const DirectionSample& v, double mu, std::size_t samples);

/// The chart phi(y) = (y, sqrt(mu^2 - |y|^2)) of the radius-mu sphere over
/// the last-axis hemisphere, and the closed form of d phi_d / d y_j.
FloatVector chart_point(const FloatVector& y, double mu);
double chart_partial(const FloatVector& y, double mu, std::size_t j);
/// N / sqrt(mu^2 - N^2): bound on |d phi_d / d y_j| over |y| <= N.
double chart_partial_bound(double N, double mu);

/// Hausdorff distance. Polytopes (d <= 3): the directed distance from a
/// convex set to another is a convex function maximized at a vertex, so each
/// side is the largest exact vertex-to-hull distance. Two balls reduce to
/// |c1 - c2| + |r1 - r2|.
double hausdorff_distance(const BodySpec& K, const BodySpec& H);
/// Exact squared distance for polytopes.
Rational hausdorff_distance_sq(const BodySpec& K, const BodySpec& H);

}  // namespace ehrtomo
