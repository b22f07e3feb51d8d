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

#include "ehrtomo/error.hpp"
#include "ehrtomo/projections.hpp"
#include "ehrtomo/pseudopyramid.hpp"
#include "test_util.hpp"

using namespace ehrtomo;
using namespace ehrtomo::testing;

namespace {

std::vector<RationalVector> sorted(std::vector<RationalVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Area of conv(disk((D,0), r) and the origin): kite plus the disk beyond the tangent chord.
double disk_ppyr_area(double D, double r) { return r * std::sqrt(D * D - r * r) + r * r * (M_PI - std::acos(r / D)); }

// Same area by midpoint quadrature over x of the vertical extent of the region.
double disk_ppyr_area_quadrature(double D, double r, int n) {
  const double t = std::sqrt(D * D - r * r);
  const double tx = t * t / D, ty = t * r / D;  // tangent point
  double area = 0;
  const double h = (D + r) / n;
  for (int i = 0; i < n; ++i) {
    const double x = (i + 0.5) * h;
    double top;
    if (x <= tx) {
      top = ty * x / tx;
    } else {
      top = std::sqrt(std::max(0.0, r * r - (x - D) * (x - D)));
    }
    area += 2 * top * h;
  }
  return area;
}

}  // namespace

TEST(Pseudopyramid, PolytopeExamples) {
  EXPECT_EQ(sorted(ppyr_polytope(translate(unit_square(), iv({4, 0}))).vertices),
            sorted({iv({0, 0}), iv({5, 0}), iv({5, 1}), iv({4, 1})}));
  EXPECT_EQ(sorted(ppyr_polytope(sym_square()).vertices), sorted(sym_square().vertices()));
  EXPECT_EQ(sorted(ppyr_polytope(BodySpec::box(iv({1, 1}), rv({"5/2", "5/2"}))).vertices),
            sorted({iv({0, 0}), rv({"1", "5/2"}), rv({"5/2", "5/2"}), rv({"5/2", "1"})}));
  EXPECT_EQ(ppyr_polytope(unit_cube()).vertices.size(), 8u);
}

TEST(Pseudopyramid, ContainsExamples) {
  const BodySpec K = BodySpec::box(iv({4, 0}), iv({5, 1}));
  EXPECT_TRUE(ppyr_contains(K, {2, 0.25}));
  EXPECT_TRUE(ppyr_contains(K, {0, 0}));
  EXPECT_FALSE(ppyr_contains(K, {2, 2}));
  EXPECT_FALSE(ppyr_contains(K, {5.5, 0.5}));
  EXPECT_TRUE(ppyr_contains(BodySpec::ball(iv({10, 0}), 1), {5, 0.4}));
  EXPECT_FALSE(ppyr_contains(BodySpec::ball(iv({10, 0}), 1), {5, 0.6}));
  EXPECT_THROW(ppyr_contains(K, {2, 0.25}, 1e-13), Error);
}

TEST(Pseudopyramid, ExactVolumeExamples) {
  EXPECT_EQ(ppyr_volume_exact(translate(unit_square(), iv({4, 0}))), 3);
  EXPECT_EQ(ppyr_volume_exact(unit_square()), 1);
  for (int mu : {1, 2, 4, 8, 16})
    EXPECT_EQ(ppyr_volume_exact(translate(unit_square(), iv({mu, 0}))), 1 + frac(mu, 2));
  // Cube pushed along x: box plus the pyramid over the near face.
  EXPECT_EQ(ppyr_volume_exact(translate(unit_cube(), iv({3, 0, 0}))), 1 + frac(3, 3));
}

TEST(Pseudopyramid, MonteCarloBallMatchesClosedForm) {
  const double closed = disk_ppyr_area(10, 1);
  EXPECT_NEAR(closed, disk_ppyr_area_quadrature(10, 1, 2000000), 1e-6);
  const MonteCarloEstimate e = ppyr_volume_montecarlo(BodySpec::ball(iv({10, 0}), 1), {1'000'000, 5, 1});
  EXPECT_EQ(e.samples, 1'000'000u);
  EXPECT_GT(e.standard_error, 0);
  EXPECT_LE(std::abs(e.estimate - closed), 3 * e.standard_error);
}

TEST(Pseudopyramid, MonteCarloPolytopeAndDeterminism) {
  const BodySpec K = translate(unit_square(), iv({4, 0}));
  const MonteCarloEstimate a = ppyr_volume_montecarlo(K, {300'000, 9, 1});
  const MonteCarloEstimate b = ppyr_volume_montecarlo(K, {300'000, 9, 3});
  EXPECT_EQ(a.hits, b.hits);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_LE(std::abs(a.estimate - 3), 4 * a.standard_error);
  const MonteCarloEstimate c = ppyr_volume_montecarlo(K, {300'000, 10, 1});
  EXPECT_NE(a.hits, c.hits);
}

TEST(Pseudopyramid, RadiiExamples) {
  Radii r = radii(ppyr_polytope(BodySpec::vpolytope({iv({2, 1}), iv({2, 2}), iv({1, 2})})));
  EXPECT_EQ(r.inner_sq, 5);
  EXPECT_EQ(r.outer_sq, 8);
  EXPECT_FALSE(r.empty_front_shell);
  r = radii(ppyr_polytope(translate(unit_square(), iv({4, 0}))));
  EXPECT_EQ(r.inner_sq, 17);
  EXPECT_EQ(r.outer_sq, 26);
  EXPECT_DOUBLE_EQ(r.outer, std::sqrt(26.0));
  r = radii(ppyr_polytope(sym_square()));
  EXPECT_TRUE(r.empty_front_shell);
  EXPECT_EQ(r.inner_sq, r.outer_sq);
  const PseudopyramidRecord rec = make_pseudopyramid(translate(unit_square(), iv({4, 0})));
  EXPECT_EQ(*rec.volume_exact, 3);
  EXPECT_EQ(rec.inner_radius_sq, 17);
  EXPECT_EQ(rec.outer_radius_sq, 26);
}

TEST(Pseudopyramid, InnerRadiusMatchesFrontShellSampling) {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 20; ++t) {
    const BodySpec K = origin_exterior_polytope(rng, 2);
    const Hull p = ppyr_polytope(K);
    const Radii r = radii(p);
    double best = 1e300;
    for (const auto& f : p.facets) {
      if (f.offset == 0) continue;
      const auto pts = p.facet_points(f);
      const FloatVector a = to_float(pts[0]), b = to_float(pts[1]);
      for (int k = 0; k <= 20000; ++k) {
        const double s = k / 20000.0;
        const double x = a[0] + s * (b[0] - a[0]), y = a[1] + s * (b[1] - a[1]);
        best = std::min(best, x * x + y * y);
      }
    }
    EXPECT_LE(r.inner_sq.get_d(), best + 1e-12);
    EXPECT_NEAR(std::sqrt(best), r.inner, 1e-3);
  }
}

TEST(Pseudopyramid, HullEqualsUnion) {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> u(-1, 1);
  int tested = 0;
  for (int t = 0; t < 20; ++t) {
    const std::size_t d = 2 + t % 2;
    const BodySpec K = origin_exterior_polytope(rng, d);
    const Hull p = ppyr_polytope(K);
    const BoundingBox box = bounding_box(K);
    for (int k = 0; k < 200; ++k) {
      FloatVector x(d);
      for (std::size_t i = 0; i < d; ++i) {
        const double lo = std::min(0.0, box.lo[i].get_d()) - 0.5, hi = std::max(0.0, box.hi[i].get_d()) + 0.5;
        x[i] = lo + (hi - lo) * (u(rng) + 1) / 2;
      }
      double slack = 1e300;
      for (const auto& f : p.facets) {
        const FloatVector n = to_float(f.normal);
        slack = std::min(slack, std::abs(dot(n, x) - f.offset.get_d()) / norm(n));
      }
      if (slack < 1e-9) continue;
      ++tested;
      EXPECT_EQ(ppyr_contains(K, x), p.contains(to_rational(x)));
    }
  }
  EXPECT_GT(tested, 3900);
}

TEST(Pseudopyramid, RadialSandwich) {
  std::mt19937_64 rng(79);
  for (int t = 0; t < 30; ++t) {
    const std::size_t d = 2 + t % 2;
    const BodySpec K = origin_exterior_polytope(rng, d);
    const Hull p = ppyr_polytope(K);
    const Radii r = radii(p);
    const double vol = polytope_volume(p).get_d();
    const double area = spherical_area(K).value;
    EXPECT_LE(vol / std::pow(r.outer, d), area / d * (1 + 1e-6));
    EXPECT_LE(area / d, vol / std::pow(r.inner, d) * (1 + 1e-6));
  }
}

TEST(Pseudopyramid, RadiiBoundsUnderTranslation) {
  std::mt19937_64 rng(83);
  for (int t = 0; t < 12; ++t) {
    const std::size_t d = 2 + t % 2;
    const BodySpec K = random_polytope(rng, d, 7, 2, 2);
    const double N = bounding_radius(K).value();
    RationalVector w(d);
    for (auto& c : w) c = uniform_int(rng, -2, 2);
    if (is_zero(w)) w[0] = 1;
    w = primitive_direction(w);
    const double wn = norm(to_float(w));
    for (double mu : {8.0, 16.0, 32.0}) {
      const Rational k = to_rational(mu / wn);
      const double mu_exact = k.get_d() * wn;
      const Radii r = radii(ppyr_polytope(translate(K, scale(k, w))));
      EXPECT_LE(r.outer, mu_exact + N + 1e-9);
      EXPECT_GE(r.inner, mu_exact - N - 1e-9);
    }
  }
}

TEST(Pseudopyramid, VolumeScaling) {
  std::mt19937_64 rng(89);
  for (int t = 0; t < 20; ++t) {
    const std::size_t d = 2 + t % 2;
    const BodySpec K = origin_exterior_polytope(rng, d);
    const Rational s = frac(uniform_int(rng, 1, 20), uniform_int(rng, 1, 7));
    Rational sd = 1;
    for (std::size_t i = 0; i < d; ++i) sd *= s;
    EXPECT_EQ(ppyr_volume_exact(dilate(K, s)), sd * ppyr_volume_exact(K));
  }
}
