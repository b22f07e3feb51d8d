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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "ehrtomo/distance.hpp"
#include "ehrtomo/error.hpp"
#include "ehrtomo/hull.hpp"
#include "ehrtomo/lp.hpp"
#include "test_util.hpp"

using namespace ehrtomo;
using namespace ehrtomo::testing;

namespace {

std::vector<RationalVector> sorted(std::vector<RationalVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Shoelace area of a convex polygon given in any order.
Rational shoelace(std::vector<RationalVector> pts) {
  double cx = 0, cy = 0;
  for (const auto& p : pts) {
    cx += p[0].get_d();
    cy += p[1].get_d();
  }
  cx /= pts.size();
  cy /= pts.size();
  std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
    return std::atan2(a[1].get_d() - cy, a[0].get_d() - cx) < std::atan2(b[1].get_d() - cy, b[0].get_d() - cx);
  });
  Rational twice = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto& a = pts[i];
    const auto& b = pts[(i + 1) % pts.size()];
    twice += a[0] * b[1] - a[1] * b[0];
  }
  return twice / 2;
}

// Minimum of |x|^2 over vertices, edges and facet planes, keeping only feet
// that land in the body.
double face_oracle_sq(const Hull& h) {
  if (h.contains(zeros(h.dim))) return 0;
  std::vector<FloatVector> v;
  for (const auto& p : h.vertices) v.push_back(to_float(p));
  double best = 1e300;
  auto inside = [&](const FloatVector& x) {
    for (const auto& f : h.facets)
      if (dot(to_float(f.normal), x) > f.offset.get_d() + 1e-9) return false;
    return true;
  };
  for (const auto& a : v) best = std::min(best, dot(a, a));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      FloatVector e(v[i].size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = v[j][k] - v[i][k];
      const double t = -dot(v[i], e) / dot(e, e);
      if (t <= 0 || t >= 1) continue;
      FloatVector p(e.size());
      for (std::size_t k = 0; k < e.size(); ++k) p[k] = v[i][k] + t * e[k];
      if (inside(p)) best = std::min(best, dot(p, p));
    }
  for (const auto& f : h.facets) {
    const FloatVector n = to_float(f.normal);
    const double c = f.offset.get_d() / dot(n, n);
    FloatVector p(n.size());
    for (std::size_t k = 0; k < n.size(); ++k) p[k] = c * n[k];
    if (inside(p)) best = std::min(best, dot(p, p));
  }
  return best;
}

}  // namespace

TEST(Rational, Parse) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational(" -7 "), Rational(-7));
  EXPECT_THROW(parse_rational("1.5"), Error);
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_EQ(parse_rational_vector("1,-2/4,3"), rv({"1", "-1/2", "3"}));
}

TEST(Rational, ExactConversions) {
  EXPECT_EQ(to_rational(0.5), Rational(1, 2));
  EXPECT_EQ(to_rational(0.1).get_d(), 0.1);
  EXPECT_EQ(floor_int(q("-1/2")), -1);
  EXPECT_EQ(ceil_int(q("-1/2")), 0);
  EXPECT_EQ(floor_int(q("7/2")), 3);
  EXPECT_EQ(sqrt_upper(Rational(4)), 2);
  EXPECT_EQ(sqrt_upper(Rational(121)), 11);
  const Rational s = sqrt_upper(Rational(2));
  EXPECT_GE(s * s, 2);
  EXPECT_LT(s.get_d() - std::sqrt(2.0), 1e-12);
  EXPECT_EQ(primitive_direction(iv({4, -6})), iv({2, -3}));
}

TEST(Hull, SquareWithInteriorPoint) {
  const Hull h = convex_hull({iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1}), rv({"1/2", "1/2"})});
  EXPECT_EQ(sorted(h.vertices), sorted({iv({0, 0}), iv({1, 0}), iv({1, 1}), iv({0, 1})}));
  EXPECT_EQ(h.facets.size(), 4u);
  EXPECT_EQ(polytope_volume(h), 1);
}

TEST(Hull, CollinearPointAbsorbed) {
  const Hull h = convex_hull({iv({0, 0}), iv({4, 0}), iv({5, 0}), iv({5, 1}), iv({4, 1})});
  EXPECT_EQ(sorted(h.vertices), sorted({iv({0, 0}), iv({5, 0}), iv({5, 1}), iv({4, 1})}));
  EXPECT_EQ(h.facets.size(), 4u);
  EXPECT_EQ(polytope_volume(h), 3);
}

TEST(Hull, Simplex3) {
  const Hull h = convex_hull({iv({0, 0, 0}), iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})});
  EXPECT_EQ(h.vertices.size(), 4u);
  EXPECT_EQ(h.facets.size(), 4u);
  EXPECT_EQ(polytope_volume(h), Rational(1, 6));
}

TEST(Hull, CubeFacetsMergeCoplanarTriangles) {
  std::vector<RationalVector> pts;
  for (int x = 0; x <= 2; ++x)
    for (int y = 0; y <= 2; ++y)
      for (int z = 0; z <= 2; ++z) pts.push_back(iv({x, y, z}));
  const Hull h = convex_hull(pts);
  EXPECT_EQ(h.vertices.size(), 8u);
  EXPECT_EQ(h.facets.size(), 6u);
  EXPECT_EQ(polytope_volume(h), 8);
  for (const auto& f : h.facets) {
    EXPECT_EQ(f.vertices.size(), 4u);
    EXPECT_EQ(norm_sq(f.normal), 1);
  }
}

TEST(Hull, DegenerateInputRejected) {
  EXPECT_THROW(convex_hull({iv({0, 0}), iv({1, 1}), iv({2, 2})}), Error);
  EXPECT_THROW(convex_hull({iv({0, 0, 0}), iv({1, 0, 0}), iv({0, 1, 0}), iv({1, 1, 0})}), Error);
  EXPECT_EQ(affine_rank({iv({0, 0}), iv({1, 1}), iv({2, 2})}), 1);
}

TEST(Hull, FacetNormalsArePrimitive) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const Hull h = random_polytope(rng, 3, 9).hull();
    for (const auto& f : h.facets) {
      EXPECT_EQ(primitive_direction(f.normal), f.normal);
      for (const auto& p : h.facet_points(f)) EXPECT_EQ(dot(f.normal, p), f.offset);
      for (const auto& p : h.vertices) EXPECT_LE(dot(f.normal, p), f.offset);
    }
  }
}

TEST(Hull, Idempotence) {
  std::mt19937_64 rng(11);
  for (std::size_t d : {2u, 3u}) {
    for (int t = 0; t < 25; ++t) {
      const Hull h = random_polytope(rng, d, 12).hull();
      const Hull again = convex_hull(h.vertices);
      EXPECT_EQ(sorted(h.vertices), sorted(again.vertices));
      EXPECT_EQ(h.facets.size(), again.facets.size());
    }
  }
}

TEST(Hull, VolumeMatchesShoelace) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const Hull h = random_polytope(rng, 2, 10).hull();
    EXPECT_EQ(polytope_volume(h), shoelace(h.vertices));
  }
}

TEST(Hull, VolumeAdditivityUnderHyperplaneSplit) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    const std::size_t d = t % 2 ? 3 : 2;
    const BodySpec K = random_polytope(rng, d, 10);
    HPolytope H = K.halfspaces();
    RationalVector a(d);
    for (auto& x : a) x = uniform_int(rng, -3, 3);
    if (is_zero(a)) a[0] = 1;
    const Rational c = random_rational(rng, 1, 3);
    HPolytope lo = H, hi = H;
    lo.A.push_back(a);
    lo.b.push_back(c);
    hi.A.push_back(negate(a));
    hi.b.push_back(-c);
    const Rational total = polytope_volume(K.hull());
    Rational parts = 0;
    for (const HPolytope* P : {&lo, &hi}) {
      const auto verts = enumerate_vertices(P->A, P->b);
      if (affine_rank(verts) == static_cast<int>(d)) parts += polytope_volume(convex_hull(verts));
    }
    EXPECT_EQ(parts, total);
  }
}

TEST(Hull, EnumerateVerticesOfSquare) {
  const auto verts = enumerate_vertices({iv({1, 0}), iv({-1, 0}), iv({0, 1}), iv({0, -1})}, iv({1, 1, 1, 1}));
  EXPECT_EQ(sorted(verts), sorted({iv({-1, -1}), iv({-1, 1}), iv({1, -1}), iv({1, 1})}));
}

TEST(Hull, FacetAreaVectorsSumToZero) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    const Hull h = random_polytope(rng, 3, 10).hull();
    RationalVector s = zeros(3);
    for (const auto& f : h.facets) s = add(s, facet_area_vector(h, f));
    EXPECT_TRUE(is_zero(s));
  }
}

TEST(Lp, OptimalInfeasibleUnbounded) {
  // max x + y subject to x + s1 = 1, y + s2 = 2.
  auto r = lp::maximize({iv({1, 0, 1, 0}), iv({0, 1, 0, 1})}, iv({1, 2}), iv({1, 1, 0, 0}));
  ASSERT_EQ(r.status, lp::Status::Optimal);
  EXPECT_EQ(r.value, 3);
  r = lp::maximize({iv({1, 1})}, iv({-1}), iv({1, 0}));
  EXPECT_EQ(r.status, lp::Status::Infeasible);
  r = lp::maximize({iv({1, -1})}, iv({0}), iv({1, 0}));
  EXPECT_EQ(r.status, lp::Status::Unbounded);
  r = lp::maximize_free({iv({1, 0}), iv({-1, 0}), iv({0, 1}), iv({0, -1})}, iv({2, 3, 5, 7}), iv({-1, -1}));
  ASSERT_EQ(r.status, lp::Status::Optimal);
  EXPECT_EQ(r.value, 10);
}

TEST(Lp, MembershipExamples) {
  const std::vector<RationalVector> sq = {iv({0, 0}), iv({1, 0}), iv({0, 1}), iv({1, 1})};
  EXPECT_TRUE(lp_membership(rv({"1/2", "1/2"}), sq));
  EXPECT_FALSE(lp_membership(iv({2, 0}), sq));
  EXPECT_TRUE(lp_membership(iv({1, 1}), {iv({0, 0}), iv({2, 0}), iv({0, 2})}));
}

TEST(Lp, MembershipAgreesWithFacets) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    const std::size_t d = t % 2 ? 3 : 2;
    const BodySpec K = random_polytope(rng, d, d == 2 ? 7 : 8, 2, 1);
    const Hull h = K.hull();
    const BoundingBox box = bounding_box(K);
    const auto verts = K.vertices();
    // All half-integer grid points of the bounding box.
    std::vector<RationalVector> grid{RationalVector()};
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<RationalVector> next;
      for (const auto& g : grid)
        for (Rational x = box.lo[i]; x <= box.hi[i]; x += Rational(1, 2)) {
          auto p = g;
          p.push_back(x);
          next.push_back(p);
        }
      grid = std::move(next);
    }
    for (const auto& p : grid) EXPECT_EQ(lp_membership(p, verts), h.contains(p));
  }
}

TEST(MinNorm, Examples) {
  auto r = min_norm_point({{2, 1}, {2, 2}});
  EXPECT_NEAR(r.distance, std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(r.point[0], 2, 1e-12);
  EXPECT_NEAR(r.point[1], 1, 1e-12);
  r = min_norm_point({{5, 0}, {5, 1}});
  EXPECT_NEAR(r.distance, 5, 1e-12);
  EXPECT_NEAR(r.point[1], 0, 1e-12);
  r = min_norm_point({{-1, -1}, {2, -1}, {0, 3}});
  EXPECT_NEAR(r.distance, 0, 1e-12);
  EXPECT_EQ(face_min_norm_sq({iv({2, 1}), iv({2, 2})}), 5);
}

TEST(MinNorm, MatchesFaceOracle) {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = t % 2 ? 3 : 2;
    const BodySpec K = random_polytope(rng, d, d + 2, 4, 2);
    const auto verts = K.vertices();
    std::vector<FloatVector> fv;
    for (const auto& v : verts) fv.push_back(to_float(v));
    const NearestPoint gjk = min_norm_point(fv);
    const ExactNearest exact = nearest_point_exact(K.hull(), zeros(d));
    EXPECT_NEAR(gjk.distance * gjk.distance, exact.distance_sq.get_d(), 1e-9);
    EXPECT_NEAR(gjk.distance * gjk.distance, face_oracle_sq(K.hull()), 1e-9);
  }
}
