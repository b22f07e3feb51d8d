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

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "ehrtomo/hull.hpp"
#include "ehrtomo/rational.hpp"

namespace ehrtomo {

/// {x : A x <= b}.
struct HPolytope {
  RationalMatrix A;
  RationalVector b;
};

/// conv(vertices). The list may contain non-extreme points.
struct VPolytope {
  std::vector<RationalVector> vertices;
};

struct Ball {
  RationalVector center;
  Rational radius;
};

/// Certified K subset of B_N(0), stored squared so it stays rational.
struct BoundingRadius {
  Rational radius_sq;
  double value() const;
};

struct BoundingBox {
  RationalVector lo;
  RationalVector hi;
};

/// A closed convex body: dilation * shape + translation. Translation and
/// dilation are kept as modifiers so counting s(K + w) stays exact.
///
/// Construction validates that the set is bounded with nonempty interior,
/// and computes the exact hull of the base polytope when d <= 3. Instances
/// are immutable; copies share the cached hull.
class BodySpec {
 public:
  using Shape = std::variant<HPolytope, VPolytope, Ball>;

  static BodySpec hpolytope(RationalMatrix A, RationalVector b);
  static BodySpec vpolytope(std::vector<RationalVector> vertices);
  static BodySpec ball(RationalVector center, Rational radius);
  /// Axis-parallel box [lo, hi] as an H-polytope.
  static BodySpec box(const RationalVector& lo, const RationalVector& hi);
  /// Attaches modifiers to an existing shape (used by the JSON reader).
  static BodySpec with_modifiers(const BodySpec& base, RationalVector translation, Rational dilation);

  std::size_t dim() const { return dim_; }
  const Shape& shape() const { return shape_; }
  const RationalVector& translation() const { return translation_; }
  const Rational& dilation() const { return dilation_; }

  bool is_polytope() const { return !std::holds_alternative<Ball>(shape_); }
  bool is_ball() const { return std::holds_alternative<Ball>(shape_); }
  /// Polytope with d <= 3, so the exact hull/facet machinery applies.
  bool has_hull() const { return base_hull_ != nullptr; }

  /// Exact hull of the transformed body. Requires has_hull().
  Hull hull() const;
  /// Transformed extreme points (d <= 3) or transformed generator list.
  std::vector<RationalVector> vertices() const;
  /// Transformed inequality system A x <= b. H-polytopes in any d, or any
  /// polytope with a hull.
  HPolytope halfspaces() const;
  /// Transformed center and radius. Requires is_ball().
  Ball ball_data() const;

  /// Maps a point of the transformed body back to the base shape.
  RationalVector to_base(const RationalVector& x) const;

  friend bool operator==(const BodySpec& a, const BodySpec& b);

 private:
  BodySpec() = default;

  Shape shape_;
  std::size_t dim_ = 0;
  RationalVector translation_;
  Rational dilation_ = 1;
  std::shared_ptr<const Hull> base_hull_;
};

/// Exact membership, boundary included.
bool contains(const BodySpec& body, const RationalVector& x);

BodySpec translate(const BodySpec& body, const RationalVector& w);
/// s * body; the translation is scaled too, so dilate(translate(K, w), s)
/// is sK + sw.
BodySpec dilate(const BodySpec& body, const Rational& s);

BoundingRadius bounding_radius(const BodySpec& body);
/// Exact rational box enclosing the body.
BoundingBox bounding_box(const BodySpec& body);

bool is_symmetric(const BodySpec& body);

/// Precomputed floating-point ray tests against a body.
class RayCaster {
 public:
  explicit RayCaster(const BodySpec& body);

  /// sup{u >= 0 : u * dir in body}, or nullopt when the ray misses.
  std::optional<double> exit_parameter(const FloatVector& dir) const;
  std::size_t dim() const { return dim_; }

 private:
  enum class Kind { Halfspaces, Ball, Generators };
  Kind kind_;
  std::size_t dim_;
  std::vector<FloatVector> rows_;
  FloatVector rhs_;
  FloatVector center_;
  double radius_ = 0;
  std::vector<RationalVector> generators_;
};

/// Farthest point of the ray from the origin along the unit vector `dir`
/// that still lies in the body. nullopt is the "miss" sentinel.
std::optional<double> ray_exit_parameter(const BodySpec& body, const FloatVector& dir,
                                         double tol = 1e-12);

}  // namespace ehrtomo
