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

#include "ehrtomo/hull.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "ehrtomo/error.hpp"

namespace ehrtomo {

namespace {

using Vec = RationalVector;

bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Vec> sorted_unique(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

Vec cross3(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational cross2(const Vec& o, const Vec& a, const Vec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Strictly convex CCW polygon (Andrew's monotone chain); input sorted, unique.
std::vector<std::size_t> chain_2d(const std::vector<Vec>& pts) {
  const std::size_t n = pts.size();
  if (n < 3) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(i);
    return out;
  }
  std::vector<std::size_t> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross2(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= 0) --k;
    h[k++] = i;
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross2(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= 0) --k;
    h[k++] = i;
  }
  h.resize(k - 1);
  return h;
}

Hull hull_1d(const std::vector<Vec>& pts) {
  Hull h;
  h.dim = 1;
  h.vertices = {pts.front(), pts.back()};
  h.facets.push_back({{Rational(-1)}, Rational(-pts.front()[0]), {0}});
  h.facets.push_back({{Rational(1)}, pts.back()[0], {1}});
  return h;
}

Hull hull_2d(const std::vector<Vec>& pts) {
  const std::vector<std::size_t> ring = chain_2d(pts);
  if (ring.size() < 3) throw Error(ErrorCode::DegenerateInput, "points are collinear");
  std::vector<Vec> verts;
  for (std::size_t i : ring) verts.push_back(pts[i]);
  // Ring starts at the lexicographic minimum, so vertices are sorted only
  // by chain order; re-sort and remap for the canonical vertex order.
  std::vector<Vec> sorted = verts;
  std::sort(sorted.begin(), sorted.end(), lex_less);
  auto index_of = [&](const Vec& p) {
    return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), p, lex_less) -
                                    sorted.begin());
  };
  Hull h;
  h.dim = 2;
  h.vertices = sorted;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const Vec& a = verts[i];
    const Vec& b = verts[(i + 1) % verts.size()];
    Vec n = primitive_direction({b[1] - a[1], a[0] - b[0]});
    Rational off = dot(n, a);
    h.facets.push_back({std::move(n), std::move(off), {index_of(a), index_of(b)}});
  }
  return h;
}

struct Tri {
  std::array<std::size_t, 3> v;
  bool alive = true;
};

Vec tri_normal(const std::vector<Vec>& p, const Tri& t) {
  return cross3(sub(p[t.v[1]], p[t.v[0]]), sub(p[t.v[2]], p[t.v[0]]));
}

bool in_closed_triangle(const std::vector<Vec>& p, const Tri& t, const Vec& n, const Vec& x) {
  for (int e = 0; e < 3; ++e) {
    const Vec& a = p[t.v[e]];
    const Vec& b = p[t.v[(e + 1) % 3]];
    if (dot(n, cross3(sub(b, a), sub(x, a))) < 0) return false;
  }
  return true;
}

Hull hull_3d(const std::vector<Vec>& pts) {
  const std::size_t n = pts.size();
  // Initial tetrahedron.
  std::size_t i1 = 1;
  std::size_t i2 = n, i3 = n;
  for (std::size_t i = 2; i < n && i2 == n; ++i)
    if (!is_zero(cross3(sub(pts[i1], pts[0]), sub(pts[i], pts[0])))) i2 = i;
  if (i2 == n) throw Error(ErrorCode::DegenerateInput, "points are collinear");
  const Vec base_n = cross3(sub(pts[i1], pts[0]), sub(pts[i2], pts[0]));
  for (std::size_t i = 2; i < n && i3 == n; ++i)
    if (dot(base_n, sub(pts[i], pts[0])) != 0) i3 = i;
  if (i3 == n) throw Error(ErrorCode::DegenerateInput, "points are coplanar");

  std::vector<Tri> tris;
  {
    std::array<std::size_t, 4> s{0, i1, i2, i3};
    const std::array<std::array<int, 3>, 4> faces{{{0, 1, 2}, {0, 3, 1}, {1, 3, 2}, {0, 2, 3}}};
    for (const auto& f : faces) {
      Tri t{{s[f[0]], s[f[1]], s[f[2]]}};
      int other = 6 - f[0] - f[1] - f[2];
      if (dot(tri_normal(pts, t), sub(pts[s[other]], pts[t.v[0]])) > 0) std::swap(t.v[1], t.v[2]);
      tris.push_back(t);
    }
  }

  std::vector<char> inserted(n, 0);
  inserted[0] = inserted[i1] = inserted[i2] = inserted[i3] = 1;
  for (std::size_t pi = 0; pi < n; ++pi) {
    if (inserted[pi]) continue;
    const Vec& p = pts[pi];
    std::vector<char> visible(tris.size(), 0);
    bool strict = false;
    for (std::size_t t = 0; t < tris.size(); ++t) {
      if (!tris[t].alive) continue;
      const Vec nrm = tri_normal(pts, tris[t]);
      const Rational side = dot(nrm, sub(p, pts[tris[t].v[0]]));
      if (side > 0) {
        visible[t] = 1;
        strict = true;
      } else if (side == 0 && !in_closed_triangle(pts, tris[t], nrm, p)) {
        visible[t] = 1;
      }
    }
    if (!strict) continue;  // inside or on the boundary
    std::set<std::pair<std::size_t, std::size_t>> visible_edges;
    for (std::size_t t = 0; t < tris.size(); ++t)
      if (visible[t])
        for (int e = 0; e < 3; ++e) visible_edges.insert({tris[t].v[e], tris[t].v[(e + 1) % 3]});
    std::vector<Tri> added;
    for (const auto& [a, b] : visible_edges)
      if (!visible_edges.count({b, a})) added.push_back(Tri{{a, b, pi}});
    for (std::size_t t = 0; t < tris.size(); ++t)
      if (visible[t]) tris[t].alive = false;
    tris.insert(tris.end(), added.begin(), added.end());
    inserted[pi] = 1;
  }

  // Merge coplanar triangles into polygonal facets.
  std::map<std::pair<Vec, Rational>, std::set<std::size_t>,
           bool (*)(const std::pair<Vec, Rational>&, const std::pair<Vec, Rational>&)>
      planes([](const std::pair<Vec, Rational>& x, const std::pair<Vec, Rational>& y) {
        if (x.first != y.first) return lex_less(x.first, y.first);
        return x.second < y.second;
      });
  for (const auto& t : tris) {
    if (!t.alive) continue;
    Vec nrm = primitive_direction(tri_normal(pts, t));
    Rational off = dot(nrm, pts[t.v[0]]);
    auto& s = planes[{std::move(nrm), std::move(off)}];
    s.insert(t.v.begin(), t.v.end());
  }
  // Points lying in a facet plane but skipped as interior may still belong
  // to the facet polygon; only extreme points survive the 2-D chain anyway.
  struct RawFacet {
    Vec normal;
    Rational offset;
    std::vector<Vec> ring;
  };
  std::vector<RawFacet> raw;
  std::vector<Vec> all_vertices;
  for (const auto& [key, idx] : planes) {
    const Vec& nrm = key.first;
    std::size_t k = 0;
    for (std::size_t c = 1; c < 3; ++c)
      if (abs(nrm[c]) > abs(nrm[k])) k = c;
    const std::size_t ci = (k + 1) % 3, cj = (k + 2) % 3;
    std::vector<Vec> proj;
    std::map<Vec, Vec, bool (*)(const Vec&, const Vec&)> back(lex_less);
    for (std::size_t i : idx) {
      Vec q{pts[i][ci], pts[i][cj]};
      back[q] = pts[i];
      proj.push_back(std::move(q));
    }
    proj = sorted_unique(std::move(proj));
    std::vector<std::size_t> ring = chain_2d(proj);
    if (nrm[k] < 0) std::reverse(ring.begin(), ring.end());
    RawFacet f{nrm, key.second, {}};
    for (std::size_t r : ring) {
      f.ring.push_back(back[proj[r]]);
      all_vertices.push_back(back[proj[r]]);
    }
    raw.push_back(std::move(f));
  }
  Hull h;
  h.dim = 3;
  h.vertices = sorted_unique(std::move(all_vertices));
  for (auto& f : raw) {
    Facet out{std::move(f.normal), std::move(f.offset), {}};
    for (const auto& p : f.ring)
      out.vertices.push_back(static_cast<std::size_t>(
          std::lower_bound(h.vertices.begin(), h.vertices.end(), p, lex_less) - h.vertices.begin()));
    h.facets.push_back(std::move(out));
  }
  return h;
}

}  // namespace

bool Hull::contains(const RationalVector& x) const {
  if (x.size() != dim) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from hull");
  for (const auto& f : facets)
    if (dot(f.normal, x) > f.offset) return false;
  return true;
}

std::vector<RationalVector> Hull::facet_points(const Facet& f) const {
  std::vector<RationalVector> out;
  out.reserve(f.vertices.size());
  for (std::size_t i : f.vertices) out.push_back(vertices[i]);
  return out;
}

int affine_rank(const std::vector<RationalVector>& points) {
  if (points.empty()) return -1;
  RationalMatrix rows;
  for (std::size_t i = 1; i < points.size(); ++i) rows.push_back(sub(points[i], points[0]));
  const std::size_t d = points[0].size();
  int rank = 0;
  for (std::size_t col = 0; col < d && static_cast<std::size_t>(rank) < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || rows[r][col] == 0) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < d; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

Hull convex_hull(const std::vector<RationalVector>& points) {
  if (points.empty()) throw Error(ErrorCode::DegenerateInput, "no points");
  const std::size_t d = points[0].size();
  for (const auto& p : points)
    if (p.size() != d) throw Error(ErrorCode::DimensionMismatch, "mixed point dimensions");
  if (d < 1 || d > 3)
    throw Error(ErrorCode::InvalidArgument, "exact hulls are limited to dimensions 1..3");
  const std::vector<Vec> pts = sorted_unique(points);
  if (affine_rank(pts) < static_cast<int>(d))
    throw Error(ErrorCode::DegenerateInput, "points are not full-dimensional");
  switch (d) {
    case 1: return hull_1d(pts);
    case 2: return hull_2d(pts);
    default: return hull_3d(pts);
  }
}

Rational polytope_volume(const Hull& hull) {
  if (hull.dim == 1) return hull.vertices[1][0] - hull.vertices[0][0];
  Rational acc = 0;
  const Vec& o = hull.vertices.front();
  for (const auto& f : hull.facets) {
    if (hull.dim == 2) {
      acc += cross2(o, hull.vertices[f.vertices[0]], hull.vertices[f.vertices[1]]);
      continue;
    }
    const Vec& a = hull.vertices[f.vertices[0]];
    for (std::size_t i = 1; i + 1 < f.vertices.size(); ++i) {
      const Vec& b = hull.vertices[f.vertices[i]];
      const Vec& c = hull.vertices[f.vertices[i + 1]];
      acc += dot(sub(a, o), cross3(sub(b, o), sub(c, o)));
    }
  }
  const Rational vol = hull.dim == 2 ? Rational(acc / 2) : Rational(acc / 6);
  if (vol <= 0) throw Error(ErrorCode::DegenerateInput, "hull has no volume");
  return vol;
}

RationalVector facet_area_vector(const Hull& hull, const Facet& f) {
  switch (hull.dim) {
    case 1: return f.normal;
    case 2: {
      const Vec& a = hull.vertices[f.vertices[0]];
      const Vec& b = hull.vertices[f.vertices[1]];
      return {b[1] - a[1], a[0] - b[0]};
    }
    default: {
      Vec acc = zeros(3);
      const std::size_t k = f.vertices.size();
      for (std::size_t i = 0; i < k; ++i)
        acc = add(acc, cross3(hull.vertices[f.vertices[i]], hull.vertices[f.vertices[(i + 1) % k]]));
      return scale(Rational(1, 2), acc);
    }
  }
}

bool solve_exact(RationalMatrix M, RationalVector r, RationalVector& x) {
  const std::size_t n = M.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && M[piv][col] == 0) ++piv;
    if (piv == n) return false;
    std::swap(M[piv], M[col]);
    std::swap(r[piv], r[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || M[row][col] == 0) continue;
      const Rational f = M[row][col] / M[col][col];
      for (std::size_t c = col; c < n; ++c) M[row][c] -= f * M[col][c];
      r[row] -= f * r[col];
    }
  }
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = r[i] / M[i][i];
  return true;
}

std::vector<RationalVector> enumerate_vertices(const RationalMatrix& A, const RationalVector& b) {
  if (A.empty()) throw Error(ErrorCode::InvalidBody, "no constraints");
  const std::size_t d = A[0].size();
  const std::size_t m = A.size();
  if (d < 1 || d > 3) throw Error(ErrorCode::InvalidArgument, "vertex enumeration needs d <= 3");
  std::vector<Vec> found;
  std::vector<std::size_t> pick(d);
  // Iterate over all d-subsets in lexicographic order.
  for (std::size_t i = 0; i < d; ++i) pick[i] = i;
  if (m < d) return found;
  while (true) {
    RationalMatrix M;
    RationalVector r;
    for (std::size_t i : pick) {
      M.push_back(A[i]);
      r.push_back(b[i]);
    }
    Vec x;
    if (solve_exact(M, r, x)) {
      bool feasible = true;
      for (std::size_t i = 0; i < m && feasible; ++i) feasible = dot(A[i], x) <= b[i];
      if (feasible) found.push_back(std::move(x));
    }
    std::size_t k = d;
    while (k > 0 && pick[k - 1] == m - d + k - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t j = k; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return sorted_unique(std::move(found));
}

}  // namespace ehrtomo
