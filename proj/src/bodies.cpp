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

#include "ehrtomo/bodies.hpp"

#include <algorithm>
#include <cmath>

#include "ehrtomo/error.hpp"
#include "ehrtomo/lp.hpp"

namespace ehrtomo {

namespace {

void require_dim(const RationalVector& x, std::size_t d, const char* what) {
  if (x.size() != d) throw Error(ErrorCode::DimensionMismatch, what);
}

void validate_hpolytope(const HPolytope& h, std::size_t d) {
  for (std::size_t k = 0; k < d; ++k) {
    for (int sign : {1, -1}) {
      RationalVector c = zeros(d);
      c[k] = sign;
      const lp::Result r = lp::maximize_free(h.A, h.b, c);
      if (r.status == lp::Status::Infeasible) throw Error(ErrorCode::InvalidBody, "H-polytope is empty");
      if (r.status == lp::Status::Unbounded) throw Error(ErrorCode::InvalidBody, "H-polytope is unbounded");
    }
  }
  // Interior point: maximize t subject to A y + t <= b, t <= 1.
  RationalMatrix G;
  RationalVector rhs = h.b;
  for (const auto& row : h.A) {
    RationalVector g = row;
    g.push_back(1);
    G.push_back(std::move(g));
  }
  RationalVector cap = zeros(d + 1);
  cap[d] = 1;
  G.push_back(cap);
  rhs.push_back(1);
  const lp::Result r = lp::maximize_free(G, rhs, cap);
  if (r.status != lp::Status::Optimal || r.value <= 0)
    throw Error(ErrorCode::InvalidBody, "H-polytope has empty interior");
}

Hull transform_hull(const Hull& base, const Rational& s, const RationalVector& t) {
  Hull h = base;
  for (auto& v : h.vertices) v = add(scale(s, v), t);
  for (auto& f : h.facets) f.offset = s * f.offset + dot(f.normal, t);
  return h;
}

bool sorted_equal(std::vector<RationalVector> a, std::vector<RationalVector> b) {
  auto less = [](const RationalVector& x, const RationalVector& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

}  // namespace

double BoundingRadius::value() const { return std::sqrt(radius_sq.get_d()); }

BodySpec BodySpec::hpolytope(RationalMatrix A, RationalVector b) {
  if (A.empty() || A[0].empty()) throw Error(ErrorCode::InvalidBody, "H-polytope needs constraints");
  const std::size_t d = A[0].size();
  for (const auto& row : A) require_dim(row, d, "H-polytope row width");
  if (b.size() != A.size()) throw Error(ErrorCode::DimensionMismatch, "H-polytope rhs length");
  BodySpec body;
  HPolytope h{std::move(A), std::move(b)};
  validate_hpolytope(h, d);
  if (d <= 3) body.base_hull_ = std::make_shared<const Hull>(convex_hull(enumerate_vertices(h.A, h.b)));
  body.shape_ = std::move(h);
  body.dim_ = d;
  body.translation_ = zeros(d);
  return body;
}

BodySpec BodySpec::vpolytope(std::vector<RationalVector> vertices) {
  if (vertices.empty() || vertices[0].empty()) throw Error(ErrorCode::InvalidBody, "V-polytope needs vertices");
  const std::size_t d = vertices[0].size();
  for (const auto& v : vertices) require_dim(v, d, "V-polytope vertex dimension");
  if (affine_rank(vertices) != static_cast<int>(d))
    throw Error(ErrorCode::InvalidBody, "V-polytope is not full-dimensional");
  BodySpec body;
  if (d <= 3) body.base_hull_ = std::make_shared<const Hull>(convex_hull(vertices));
  body.shape_ = VPolytope{std::move(vertices)};
  body.dim_ = d;
  body.translation_ = zeros(d);
  return body;
}

BodySpec BodySpec::ball(RationalVector center, Rational radius) {
  if (center.empty()) throw Error(ErrorCode::InvalidBody, "ball needs a center");
  if (radius <= 0) throw Error(ErrorCode::InvalidBody, "ball radius must be positive");
  BodySpec body;
  body.dim_ = center.size();
  body.translation_ = zeros(body.dim_);
  body.shape_ = Ball{std::move(center), std::move(radius)};
  return body;
}

BodySpec BodySpec::box(const RationalVector& lo, const RationalVector& hi) {
  require_dim(hi, lo.size(), "box corner dimension");
  const std::size_t d = lo.size();
  RationalMatrix A;
  RationalVector b;
  for (std::size_t k = 0; k < d; ++k) {
    RationalVector e = zeros(d);
    e[k] = 1;
    A.push_back(e);
    b.push_back(hi[k]);
    e[k] = -1;
    A.push_back(e);
    b.push_back(-lo[k]);
  }
  return hpolytope(std::move(A), std::move(b));
}

BodySpec BodySpec::with_modifiers(const BodySpec& base, RationalVector translation, Rational dilation) {
  require_dim(translation, base.dim_, "translation dimension");
  if (dilation <= 0) throw Error(ErrorCode::NonpositiveDilation, "dilation must be positive");
  BodySpec out = base;
  out.translation_ = std::move(translation);
  out.dilation_ = std::move(dilation);
  return out;
}

Hull BodySpec::hull() const {
  if (!base_hull_) throw Error(ErrorCode::InvalidArgument, "exact hull needs a polytope with d <= 3");
  return transform_hull(*base_hull_, dilation_, translation_);
}

std::vector<RationalVector> BodySpec::vertices() const {
  if (base_hull_) return hull().vertices;
  if (const auto* v = std::get_if<VPolytope>(&shape_)) {
    std::vector<RationalVector> out;
    for (const auto& p : v->vertices) out.push_back(add(scale(dilation_, p), translation_));
    return out;
  }
  throw Error(ErrorCode::InvalidArgument, "vertices are unavailable for this body");
}

HPolytope BodySpec::halfspaces() const {
  if (const auto* h = std::get_if<HPolytope>(&shape_)) {
    HPolytope out{h->A, {}};
    for (std::size_t i = 0; i < h->A.size(); ++i)
      out.b.push_back(dilation_ * h->b[i] + dot(h->A[i], translation_));
    return out;
  }
  if (base_hull_) {
    HPolytope out;
    for (const auto& f : hull().facets) {
      out.A.push_back(f.normal);
      out.b.push_back(f.offset);
    }
    return out;
  }
  throw Error(ErrorCode::InvalidArgument, "halfspaces are unavailable for this body");
}

Ball BodySpec::ball_data() const {
  const auto* b = std::get_if<Ball>(&shape_);
  if (!b) throw Error(ErrorCode::InvalidArgument, "body is not a ball");
  return {add(scale(dilation_, b->center), translation_), dilation_ * b->radius};
}

RationalVector BodySpec::to_base(const RationalVector& x) const {
  return scale(1 / dilation_, sub(x, translation_));
}

bool operator==(const BodySpec& a, const BodySpec& b) {
  if (a.dim_ != b.dim_ || a.translation_ != b.translation_ || a.dilation_ != b.dilation_) return false;
  if (a.shape_.index() != b.shape_.index()) return false;
  return std::visit(
      [&](const auto& sa) {
        using T = std::decay_t<decltype(sa)>;
        const T& sb = std::get<T>(b.shape_);
        if constexpr (std::is_same_v<T, HPolytope>) return sa.A == sb.A && sa.b == sb.b;
        else if constexpr (std::is_same_v<T, VPolytope>) return sa.vertices == sb.vertices;
        else return sa.center == sb.center && sa.radius == sb.radius;
      },
      a.shape_);
}

bool contains(const BodySpec& body, const RationalVector& x) {
  require_dim(x, body.dim(), "point dimension differs from body");
  if (body.is_ball()) {
    const Ball b = body.ball_data();
    return norm_sq(sub(x, b.center)) <= b.radius * b.radius;
  }
  const RationalVector y = body.to_base(x);
  if (const auto* h = std::get_if<HPolytope>(&body.shape())) {
    for (std::size_t i = 0; i < h->A.size(); ++i)
      if (dot(h->A[i], y) > h->b[i]) return false;
    return true;
  }
  const auto& v = std::get<VPolytope>(body.shape());
  return lp_membership(y, v.vertices);
}

BodySpec translate(const BodySpec& body, const RationalVector& w) {
  require_dim(w, body.dim(), "translation dimension");
  return BodySpec::with_modifiers(body, add(body.translation(), w), body.dilation());
}

BodySpec dilate(const BodySpec& body, const Rational& s) {
  if (s <= 0) throw Error(ErrorCode::NonpositiveDilation, "dilation must be positive");
  return BodySpec::with_modifiers(body, scale(s, body.translation()), s * body.dilation());
}

BoundingRadius bounding_radius(const BodySpec& body) {
  if (body.is_ball()) {
    const Ball b = body.ball_data();
    const Rational r = sqrt_upper(norm_sq(b.center)) + b.radius;
    return {r * r};
  }
  if (!body.has_hull() && std::holds_alternative<HPolytope>(body.shape())) {
    // Box corners certify the bound without vertex enumeration.
    const BoundingBox box = bounding_box(body);
    Rational acc = 0;
    for (std::size_t k = 0; k < body.dim(); ++k) {
      const Rational m = std::max(abs(box.lo[k]), abs(box.hi[k]));
      acc += m * m;
    }
    return {acc};
  }
  Rational best = 0;
  for (const auto& v : body.vertices()) best = std::max(best, norm_sq(v));
  return {best};
}

BoundingBox bounding_box(const BodySpec& body) {
  const std::size_t d = body.dim();
  BoundingBox box{zeros(d), zeros(d)};
  if (body.is_ball()) {
    const Ball b = body.ball_data();
    for (std::size_t k = 0; k < d; ++k) {
      box.lo[k] = b.center[k] - b.radius;
      box.hi[k] = b.center[k] + b.radius;
    }
    return box;
  }
  if (!body.has_hull() && std::holds_alternative<HPolytope>(body.shape())) {
    const HPolytope h = body.halfspaces();
    for (std::size_t k = 0; k < d; ++k) {
      RationalVector c = zeros(d);
      c[k] = 1;
      box.hi[k] = lp::maximize_free(h.A, h.b, c).value;
      c[k] = -1;
      box.lo[k] = -lp::maximize_free(h.A, h.b, c).value;
    }
    return box;
  }
  const auto verts = body.vertices();
  box.lo = box.hi = verts.front();
  for (const auto& v : verts)
    for (std::size_t k = 0; k < d; ++k) {
      box.lo[k] = std::min(box.lo[k], v[k]);
      box.hi[k] = std::max(box.hi[k], v[k]);
    }
  return box;
}

bool is_symmetric(const BodySpec& body) {
  if (body.is_ball()) return is_zero(body.ball_data().center);
  if (body.has_hull()) {
    const Hull h = body.hull();
    if (std::holds_alternative<VPolytope>(body.shape())) {
      std::vector<RationalVector> neg;
      for (const auto& v : h.vertices) neg.push_back(negate(v));
      return sorted_equal(h.vertices, neg);
    }
    // Facets are normalized to primitive integer normals, so set equality
    // of {(n, b)} and {(-n, b)} is decided by sorting.
    std::vector<RationalVector> facets, mirrored;
    for (const auto& f : h.facets) {
      RationalVector key = f.normal;
      key.push_back(f.offset);
      facets.push_back(key);
      RationalVector neg = negate(f.normal);
      neg.push_back(f.offset);
      mirrored.push_back(std::move(neg));
    }
    return sorted_equal(facets, mirrored);
  }
  if (std::holds_alternative<VPolytope>(body.shape())) {
    const auto verts = body.vertices();
    for (const auto& v : verts)
      if (!lp_membership(negate(v), verts)) return false;
    return true;
  }
  // General-d H-polytope: every mirrored constraint must be implied.
  const HPolytope h = body.halfspaces();
  for (std::size_t i = 0; i < h.A.size(); ++i) {
    const lp::Result r = lp::maximize_free(h.A, h.b, negate(h.A[i]));
    if (r.value > h.b[i]) return false;
  }
  return true;
}

RayCaster::RayCaster(const BodySpec& body) : dim_(body.dim()) {
  if (body.is_ball()) {
    kind_ = Kind::Ball;
    const Ball b = body.ball_data();
    center_ = to_float(b.center);
    radius_ = b.radius.get_d();
    return;
  }
  if (body.has_hull() || std::holds_alternative<HPolytope>(body.shape())) {
    kind_ = Kind::Halfspaces;
    const HPolytope h = body.halfspaces();
    for (std::size_t i = 0; i < h.A.size(); ++i) {
      rows_.push_back(to_float(h.A[i]));
      rhs_.push_back(h.b[i].get_d());
    }
    return;
  }
  kind_ = Kind::Generators;
  generators_ = body.vertices();
}

std::optional<double> RayCaster::exit_parameter(const FloatVector& dir) const {
  if (dir.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "direction dimension");
  switch (kind_) {
    case Kind::Ball: {
      const double b = dot(dir, center_);
      const double disc = b * b - dot(center_, center_) + radius_ * radius_;
      if (disc < 0) return std::nullopt;
      const double u = b + std::sqrt(disc);
      if (u < 0) return std::nullopt;
      return u;
    }
    case Kind::Halfspaces: {
      double lo = 0, hi = HUGE_VAL;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const double a = dot(rows_[i], dir);
        if (a > 0) hi = std::min(hi, rhs_[i] / a);
        else if (a < 0) lo = std::max(lo, rhs_[i] / a);
        else if (rhs_[i] < 0) return std::nullopt;
      }
      if (lo > hi) return std::nullopt;
      return hi;
    }
    case Kind::Generators: {
      // maximize u subject to sum l_i g_i - u dir = 0, sum l_i = 1.
      const std::size_t n = generators_.size();
      const RationalVector rd = to_rational(dir);
      RationalMatrix A(dim_ + 1, RationalVector(n + 1, Rational(0)));
      RationalVector b(dim_ + 1, Rational(0));
      for (std::size_t k = 0; k < dim_; ++k) {
        for (std::size_t i = 0; i < n; ++i) A[k][i] = generators_[i][k];
        A[k][n] = -rd[k];
      }
      for (std::size_t i = 0; i < n; ++i) A[dim_][i] = 1;
      b[dim_] = 1;
      RationalVector c(n + 1, Rational(0));
      c[n] = 1;
      const lp::Result r = lp::maximize(A, b, c);
      if (r.status != lp::Status::Optimal) return std::nullopt;
      return r.value.get_d();
    }
  }
  return std::nullopt;
}

std::optional<double> ray_exit_parameter(const BodySpec& body, const FloatVector& dir, double tol) {
  if (tol < 1e-14) throw Error(ErrorCode::ToleranceTooSmall, "ray tolerance below 1e-14");
  if (std::abs(norm(dir) - 1.0) > 1e-12) throw Error(ErrorCode::InvalidArgument, "direction is not a unit vector");
  return RayCaster(body).exit_parameter(dir);
}

}  // namespace ehrtomo
