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

#include "ehrtomo/distance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ehrtomo/error.hpp"

namespace ehrtomo {

namespace {

// Minimum-norm point of the affine hull of `pts` restricted to the simplex,
// found by checking every sub-simplex. Returns barycentric weights.
struct SubResult {
  FloatVector point;
  double norm_sq = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> support;
};

bool affine_projection(const std::vector<FloatVector>& pts, const std::vector<std::size_t>& idx,
                       std::vector<double>& w) {
  // Minimize |sum w_i p_i| subject to sum w_i = 1 via the Gram system on
  // differences to the first point.
  const std::size_t k = idx.size();
  w.assign(k, 0.0);
  if (k == 1) {
    w[0] = 1.0;
    return true;
  }
  const FloatVector& p0 = pts[idx[0]];
  const std::size_t d = p0.size();
  std::vector<FloatVector> e(k - 1, FloatVector(d));
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t c = 0; c < d; ++c) e[i - 1][c] = pts[idx[i]][c] - p0[c];
  const std::size_t m = k - 1;
  std::vector<std::vector<double>> G(m, std::vector<double>(m + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) G[i][j] = dot(e[i], e[j]);
    G[i][m] = -dot(e[i], p0);
  }
  double scale = 0;
  for (std::size_t i = 0; i < m; ++i) scale = std::max(scale, G[i][i]);
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < m; ++r)
      if (std::abs(G[r][col]) > std::abs(G[piv][col])) piv = r;
    if (std::abs(G[piv][col]) <= 1e-14 * std::max(scale, 1e-300)) return false;
    std::swap(G[piv], G[col]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col) continue;
      const double f = G[r][col] / G[col][col];
      for (std::size_t c = col; c <= m; ++c) G[r][c] -= f * G[col][c];
    }
  }
  double rest = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    w[i + 1] = G[i][m] / G[i][i];
    rest -= w[i + 1];
  }
  w[0] = rest;
  return true;
}

SubResult closest_in_simplex(const std::vector<FloatVector>& simplex) {
  const std::size_t k = simplex.size();
  const std::size_t d = simplex[0].size();
  SubResult best;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    std::vector<double> w;
    if (!affine_projection(simplex, idx, w)) continue;
    if (std::any_of(w.begin(), w.end(), [](double x) { return x < -1e-12; })) continue;
    FloatVector p(d, 0.0);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t c = 0; c < d; ++c) p[c] += std::max(w[i], 0.0) * simplex[idx[i]][c];
    const double nn = dot(p, p);
    if (nn < best.norm_sq) {
      best.norm_sq = nn;
      best.point = std::move(p);
      best.support = idx;
    }
  }
  return best;
}

RationalVector cross3(const RationalVector& a, const RationalVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

ExactNearest nearest_on_segment(const RationalVector& a, const RationalVector& b,
                                const RationalVector& p) {
  const RationalVector ab = sub(b, a);
  const Rational len = norm_sq(ab);
  Rational t = len == 0 ? Rational(0) : Rational(dot(sub(p, a), ab) / len);
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  RationalVector q = add(a, scale(t, ab));
  Rational dsq = norm_sq(sub(p, q));
  return {std::move(q), std::move(dsq)};
}

// Ordered planar polygon in R^3.
ExactNearest nearest_on_polygon(const std::vector<RationalVector>& poly, const RationalVector& p) {
  const std::size_t k = poly.size();
  ExactNearest best = nearest_on_segment(poly[0], poly[1 % k], p);
  for (std::size_t i = 1; i < k; ++i) {
    ExactNearest c = nearest_on_segment(poly[i], poly[(i + 1) % k], p);
    if (c.distance_sq < best.distance_sq) best = std::move(c);
  }
  if (k < 3) return best;
  const RationalVector n = cross3(sub(poly[1], poly[0]), sub(poly[2], poly[0]));
  const Rational nn = norm_sq(n);
  if (nn == 0) return best;
  const RationalVector q = sub(p, scale(dot(n, sub(p, poly[0])) / nn, n));
  for (std::size_t i = 0; i < k; ++i) {
    const RationalVector& a = poly[i];
    const RationalVector& b = poly[(i + 1) % k];
    if (dot(n, cross3(sub(b, a), sub(q, a))) < 0) return best;
  }
  Rational dsq = norm_sq(sub(p, q));
  if (dsq < best.distance_sq) best = {q, dsq};
  return best;
}

}  // namespace

NearestPoint min_norm_point(const std::vector<FloatVector>& vertices) {
  if (vertices.empty()) throw Error(ErrorCode::InvalidArgument, "empty vertex list");
  const std::size_t d = vertices[0].size();
  auto support = [&](const FloatVector& dir) {
    std::size_t best = 0;
    double bv = dot(vertices[0], dir);
    for (std::size_t i = 1; i < vertices.size(); ++i) {
      const double v = dot(vertices[i], dir);
      if (v < bv) {
        bv = v;
        best = i;
      }
    }
    return best;
  };
  std::vector<FloatVector> simplex{vertices[0]};
  FloatVector v = vertices[0];
  for (int iter = 0; iter < 1000; ++iter) {
    const double vv = dot(v, v);
    if (vv == 0) break;
    const FloatVector& w = vertices[support(v)];
    if (vv - dot(v, w) <= 1e-14 * std::max(vv, 1.0)) break;
    if (std::find(simplex.begin(), simplex.end(), w) != simplex.end()) break;
    simplex.push_back(w);
    SubResult sub = closest_in_simplex(simplex);
    if (sub.support.empty()) break;
    if (sub.norm_sq >= vv) break;
    std::vector<FloatVector> reduced;
    for (std::size_t i : sub.support) reduced.push_back(simplex[i]);
    simplex = std::move(reduced);
    v = std::move(sub.point);
    if (simplex.size() > d) {
      // Origin inside a full simplex.
      if (sub.norm_sq <= 1e-28) break;
    }
  }
  return {v, norm(v)};
}

ExactNearest nearest_point_exact(const Hull& hull, const RationalVector& p) {
  if (p.size() != hull.dim) throw Error(ErrorCode::DimensionMismatch, "point dimension");
  if (hull.contains(p)) return {p, Rational(0)};
  ExactNearest best{hull.vertices[0], norm_sq(sub(hull.vertices[0], p))};
  for (const auto& f : hull.facets) {
    const std::vector<RationalVector> face = hull.facet_points(f);
    ExactNearest c = face.size() == 1   ? ExactNearest{face[0], norm_sq(sub(face[0], p))}
                     : face.size() == 2 ? nearest_on_segment(face[0], face[1], p)
                                        : nearest_on_polygon(face, p);
    if (c.distance_sq < best.distance_sq) best = std::move(c);
  }
  return best;
}

Rational face_min_norm_sq(const std::vector<RationalVector>& face) {
  if (face.empty()) throw Error(ErrorCode::InvalidArgument, "empty face");
  const RationalVector origin = zeros(face[0].size());
  if (face.size() == 1) return norm_sq(face[0]);
  if (face.size() == 2) return nearest_on_segment(face[0], face[1], origin).distance_sq;
  if (face[0].size() != 3) throw Error(ErrorCode::InvalidArgument, "polygon faces need d = 3");
  return nearest_on_polygon(face, origin).distance_sq;
}

}  // namespace ehrtomo
