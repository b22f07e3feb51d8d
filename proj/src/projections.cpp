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

#include "ehrtomo/projections.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ehrtomo/distance.hpp"
#include "ehrtomo/error.hpp"
#include "ehrtomo/parallel.hpp"
#include "ehrtomo/sampling.hpp"

namespace ehrtomo {

namespace {

constexpr double kPi = std::numbers::pi;

double cross2(const FloatVector& o, const FloatVector& a, const FloatVector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Counter-clockwise hull of 2-D points, collinear points dropped.
std::vector<FloatVector> float_hull_2d(std::vector<FloatVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<FloatVector> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

double polygon_area(const std::vector<FloatVector>& ring) {
  double acc = 0;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const auto& a = ring[i];
    const auto& b = ring[(i + 1) % ring.size()];
    acc += a[0] * b[1] - a[1] * b[0];
  }
  return 0.5 * std::abs(acc);
}

bool in_polygon(const std::vector<FloatVector>& ring, const FloatVector& y) {
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (cross2(ring[i], ring[(i + 1) % ring.size()], y) < 0) return false;
  return true;
}

double point_segment_distance(const FloatVector& p, const FloatVector& a, const FloatVector& b) {
  const double dx = b[0] - a[0], dy = b[1] - a[1];
  const double len = dx * dx + dy * dy;
  double t = len > 0 ? ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p[0] - a[0] - t * dx, p[1] - a[1] - t * dy);
}

double point_polygon_distance(const std::vector<FloatVector>& ring, const FloatVector& p) {
  if (ring.size() >= 3 && in_polygon(ring, p)) return 0;
  double best = HUGE_VAL;
  for (std::size_t i = 0; i < ring.size(); ++i)
    best = std::min(best, point_segment_distance(p, ring[i], ring[(i + 1) % ring.size()]));
  return best;
}

double polygon_hausdorff(const std::vector<FloatVector>& a, const std::vector<FloatVector>& b) {
  double best = 0;
  for (const auto& p : a) best = std::max(best, point_polygon_distance(b, p));
  for (const auto& p : b) best = std::max(best, point_polygon_distance(a, p));
  return best;
}

bool axis_of(const FloatVector& v, std::size_t& axis) {
  std::size_t nonzero = 0;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) {
      axis = k;
      ++nonzero;
    }
  return nonzero == 1 && std::abs(v[axis]) == 1.0;
}

void require_polytope_23(const BodySpec& K) {
  if (!K.has_hull() || K.dim() < 2 || K.dim() > 3)
    throw Error(ErrorCode::InvalidArgument, "needs a polytope in dimension 2 or 3");
}

void require_unit(const DirectionSample& v, std::size_t d) {
  if (v.v.size() != d) throw Error(ErrorCode::DimensionMismatch, "direction dimension");
  if (std::abs(norm(v.v) - 1.0) > 1e-12) throw Error(ErrorCode::InvalidArgument, "direction is not a unit vector");
}

FloatVector interior_direction(const BodySpec& K) {
  FloatVector c;
  if (K.is_ball()) {
    c = to_float(K.ball_data().center);
  } else {
    const auto verts = K.vertices();
    RationalVector acc = zeros(K.dim());
    for (const auto& v : verts) acc = add(acc, v);
    c = to_float(scale(Rational(1, static_cast<unsigned long>(verts.size())), acc));
  }
  const double n = norm(c);
  for (auto& x : c) x /= n;
  return c;
}

// Two unit vectors completing `pole` to an orthonormal basis of R^3.
std::pair<FloatVector, FloatVector> complete_basis(const FloatVector& pole) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(pole[i]) < std::abs(pole[k])) k = i;
  FloatVector e(3, 0.0);
  e[k] = 1;
  const double p = dot(e, pole);
  FloatVector a(3);
  for (int i = 0; i < 3; ++i) a[i] = e[i] - p * pole[i];
  const double na = norm(a);
  for (auto& x : a) x /= na;
  FloatVector b{pole[1] * a[2] - pole[2] * a[1], pole[2] * a[0] - pole[0] * a[2], pole[0] * a[1] - pole[1] * a[0]};
  return {a, b};
}

struct Simpson {
  const std::function<double(double)>& f;
  double error = 0;
  bool converged = true;

  double step(double a, double b, double fa, double fm, double fb, double whole, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6 * (fa + 4 * flm + fm);
    const double right = (b - m) / 6 * (fm + 4 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15 * eps || b - a < 1e-13) {
      if (std::abs(delta) > 15 * eps) converged = false;
      error += std::abs(delta) / 15;
      return left + right + delta / 15;
    }
    if (depth <= 0) {
      converged = false;
      error += std::abs(delta) / 15;
      return left + right + delta / 15;
    }
    return step(a, m, fa, flm, fm, left, eps / 2, depth - 1) + step(m, b, fm, frm, fb, right, eps / 2, depth - 1);
  }
};

SphereAreaResult sphere_quadrature_3d(const BodySpec& K, const SphereAreaOptions& opts) {
  const RayCaster caster(K);
  const FloatVector pole = interior_direction(K);
  const auto [e1, e2] = complete_basis(pole);
  auto hits = [&](double alpha, double theta) {
    const double s = std::sin(alpha), c = std::cos(alpha);
    const double ct = std::cos(theta), st = std::sin(theta);
    FloatVector dir(3);
    for (int i = 0; i < 3; ++i) dir[i] = c * pole[i] + s * (ct * e1[i] + st * e2[i]);
    return caster.exit_parameter(dir).has_value();
  };
  // 1 - cos(alpha) = 2 sin^2(alpha / 2), the radial integral of sin(alpha).
  const std::function<double(double)> f = [&](double theta) {
    double lo = 0, hi = kPi;
    for (int it = 0; it < 64 && hi - lo > 1e-16; ++it) {
      const double mid = 0.5 * (lo + hi);
      (hits(mid, theta) ? lo : hi) = mid;
    }
    const double half = 0.5 * (lo + hi) / 2;
    return 2 * std::sin(half) * std::sin(half);
  };
  Simpson simpson{f};
  const int panels = 32;
  double total = 0;
  const double h = 2 * kPi / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = p * h, b = a + h;
    const double fa = f(a), fm = f(0.5 * (a + b)), fb = f(b);
    const double whole = h / 6 * (fa + 4 * fm + fb);
    total += simpson.step(a, b, fa, fm, fb, whole, opts.tol / panels, 40);
  }
  if (!simpson.converged || simpson.error > 10 * opts.tol)
    throw Error(ErrorCode::NonConvergence, "spherical quadrature did not reach tolerance");
  return {total, simpson.error, SphereMethod::Quadrature3d};
}

SphereAreaResult sphere_exact_2d(const BodySpec& K) {
  if (K.is_ball()) {
    const Ball b = K.ball_data();
    const double D = std::sqrt(norm_sq(b.center).get_d());
    return {2 * std::asin(b.radius.get_d() / D), 0, SphereMethod::Exact2d};
  }
  const FloatVector pole = interior_direction(K);
  double lo = HUGE_VAL, hi = -HUGE_VAL;
  for (const auto& v : K.vertices()) {
    const FloatVector p = to_float(v);
    const double a = std::atan2(pole[0] * p[1] - pole[1] * p[0], pole[0] * p[0] + pole[1] * p[1]);
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  return {hi - lo, 0, SphereMethod::Exact2d};
}

SphereAreaResult sphere_montecarlo(const BodySpec& K, const SphereAreaOptions& opts) {
  if (opts.samples == 0) throw Error(ErrorCode::InvalidArgument, "need at least one sample");
  const std::size_t d = K.dim();
  const RayCaster caster(K);
  const std::uint64_t chunks = (opts.samples + kMonteCarloChunk - 1) / kMonteCarloChunk;
  std::vector<std::uint64_t> hits(chunks, 0);
  parallel_for(chunks, opts.threads, [&](std::size_t c) {
    SampleStream rng(chunk_seed(opts.seed, c));
    const std::uint64_t begin = c * kMonteCarloChunk;
    const std::uint64_t end = std::min<std::uint64_t>(opts.samples, begin + kMonteCarloChunk);
    FloatVector dir(d);
    std::uint64_t h = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      double nn = 0;
      do {
        nn = 0;
        for (std::size_t k = 0; k < d; ++k) {
          dir[k] = rng.normal();
          nn += dir[k] * dir[k];
        }
      } while (nn == 0);
      const double inv = 1 / std::sqrt(nn);
      for (auto& x : dir) x *= inv;
      if (caster.exit_parameter(dir)) ++h;
    }
    hits[c] = h;
  });
  std::uint64_t total = 0;
  for (auto h : hits) total += h;
  const double n = static_cast<double>(opts.samples);
  const double p = static_cast<double>(total) / n;
  const double area = unit_sphere_area(d);
  return {p * area, area * std::sqrt(p * (1 - p) / n), SphereMethod::MonteCarlo};
}

}  // namespace

DirectionSample DirectionSample::from_float(const FloatVector& v) {
  const double n = norm(v);
  if (!(n > 0) || !std::isfinite(n)) throw Error(ErrorCode::InvalidArgument, "direction must be nonzero");
  DirectionSample out;
  out.v = v;
  for (auto& x : out.v) x /= n;
  return out;
}

DirectionSample DirectionSample::from_rational(const RationalVector& w) {
  if (is_zero(w)) throw Error(ErrorCode::InvalidArgument, "direction must be nonzero");
  DirectionSample out = from_float(to_float(w));
  out.primitive = primitive_direction(w);
  // Recompute from the primitive vector for the best rounding.
  out.v = from_float(to_float(*out.primitive)).v;
  return out;
}

Householder::Householder(const FloatVector& v) : u_(v) {
  u_.back() -= 1.0;
  uu_ = dot(u_, u_);
}

FloatVector Householder::apply(const FloatVector& x) const {
  if (uu_ < 1e-300) return x;
  const double f = 2 * dot(u_, x) / uu_;
  FloatVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - f * u_[i];
  return out;
}

double unit_ball_volume(std::size_t n) {
  return std::pow(kPi, n / 2.0) / std::tgamma(n / 2.0 + 1);
}

double unit_sphere_area(std::size_t d) {
  return 2 * std::pow(kPi, d / 2.0) / std::tgamma(d / 2.0);
}

double brightness_hull(const BodySpec& K, const DirectionSample& v) {
  require_unit(v, K.dim());
  if (K.is_ball()) {
    const double r = K.ball_data().radius.get_d();
    return unit_ball_volume(K.dim() - 1) * std::pow(r, static_cast<double>(K.dim() - 1));
  }
  require_polytope_23(K);
  const auto verts = K.vertices();
  std::size_t axis = 0;
  if (axis_of(v.v, axis)) {
    std::vector<RationalVector> proj;
    for (const auto& p : verts) {
      RationalVector q;
      for (std::size_t k = 0; k < p.size(); ++k)
        if (k != axis) q.push_back(p[k]);
      proj.push_back(std::move(q));
    }
    return polytope_volume(convex_hull(proj)).get_d();
  }
  const Householder rot(v.v);
  std::vector<FloatVector> proj;
  for (const auto& p : verts) {
    FloatVector x = rot.apply(to_float(p));
    x.pop_back();
    proj.push_back(std::move(x));
  }
  if (K.dim() == 2) {
    double lo = HUGE_VAL, hi = -HUGE_VAL;
    for (const auto& x : proj) {
      lo = std::min(lo, x[0]);
      hi = std::max(hi, x[0]);
    }
    return hi - lo;
  }
  return polygon_area(float_hull_2d(std::move(proj)));
}

double brightness_facet_sum(const BodySpec& K, const DirectionSample& v) {
  require_unit(v, K.dim());
  require_polytope_23(K);
  const Hull h = K.hull();
  double acc = 0;
  for (const auto& f : h.facets) acc += std::abs(dot(v.v, to_float(facet_area_vector(h, f))));
  return 0.5 * acc;
}

SphereMethod default_sphere_method(std::size_t d) {
  if (d == 2) return SphereMethod::Exact2d;
  if (d == 3) return SphereMethod::Quadrature3d;
  return SphereMethod::MonteCarlo;
}

SphereAreaResult spherical_area(const BodySpec& K, const SphereAreaOptions& opts) {
  if (contains(K, zeros(K.dim())))
    throw Error(ErrorCode::OriginInside, "spherical projection needs the origin outside the body");
  switch (opts.method.value_or(default_sphere_method(K.dim()))) {
    case SphereMethod::Exact2d:
      if (K.dim() != 2) throw Error(ErrorCode::InvalidArgument, "exact2d needs d = 2");
      return sphere_exact_2d(K);
    case SphereMethod::Quadrature3d:
      if (K.dim() != 3) throw Error(ErrorCode::InvalidArgument, "quadrature3d needs d = 3");
      return sphere_quadrature_3d(K, opts);
    case SphereMethod::MonteCarlo:
      return sphere_montecarlo(K, opts);
  }
  return {};
}

ShadowPair shadow_regions(const BodySpec& K, const DirectionSample& v, double mu) {
  require_unit(v, K.dim());
  const std::size_t d = K.dim();
  const double N = bounding_radius(K).value();
  if (!(mu > N)) throw Error(ErrorCode::MuTooSmall, "shadow regions need mu > N = " + std::to_string(N));
  const auto rot = std::make_shared<Householder>(v.v);
  ShadowPair out;
  out.kprime.dim = out.kmu.dim = d - 1;
  out.kprime.bounding_radius = N;
  out.kmu.bounding_radius = mu * N / (mu - N);

  if (K.is_ball()) {
    const Ball b = K.ball_data();
    FloatVector c = rot->apply(to_float(b.center));
    c.pop_back();
    const double r = b.radius.get_d();
    out.kprime.membership = [c, r](const FloatVector& y) {
      double acc = 0;
      for (std::size_t i = 0; i < y.size(); ++i) acc += (y[i] - c[i]) * (y[i] - c[i]);
      return acc <= r * r;
    };
  } else {
    std::vector<FloatVector> proj;
    for (const auto& p : K.vertices()) {
      FloatVector x = rot->apply(to_float(p));
      x.pop_back();
      proj.push_back(std::move(x));
    }
    if (d == 2) {
      double lo = HUGE_VAL, hi = -HUGE_VAL;
      for (const auto& x : proj) {
        lo = std::min(lo, x[0]);
        hi = std::max(hi, x[0]);
      }
      out.kprime.vertices = {{lo}, {hi}};
      out.kprime.membership = [lo, hi](const FloatVector& y) { return y[0] >= lo && y[0] <= hi; };
    } else if (d == 3) {
      out.kprime.vertices = float_hull_2d(std::move(proj));
      const auto ring = out.kprime.vertices;
      out.kprime.membership = [ring](const FloatVector& y) { return in_polygon(ring, y); };
    } else {
      throw Error(ErrorCode::InvalidArgument, "shadow regions need d <= 3 for polytopes");
    }
  }

  FloatVector shift(d);
  for (std::size_t i = 0; i < d; ++i) shift[i] = mu * v.v[i];
  const auto caster = std::make_shared<RayCaster>(translate(K, to_rational(shift)));
  out.kmu.membership = [rot, caster, mu](const FloatVector& y) {
    const double yy = dot(y, y);
    if (yy >= mu * mu) return false;
    FloatVector z = y;
    z.push_back(std::sqrt(mu * mu - yy));
    for (auto& x : z) x /= mu;
    return caster->exit_parameter(rot->apply(z)).has_value();
  };
  return out;
}

std::vector<std::pair<FloatVector, FloatVector>> shadow_images(const BodySpec& K, const DirectionSample& v,
                                                               double mu, const std::vector<FloatVector>& points) {
  require_unit(v, K.dim());
  const Householder rot(v.v);
  std::vector<std::pair<FloatVector, FloatVector>> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    FloatVector x(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) x[i] = p[i] + mu * v.v[i];
    const FloatVector r = rot.apply(x);
    const double f = mu / norm(r);
    FloatVector x0(r.begin(), r.end() - 1), x1 = x0;
    for (auto& c : x1) c *= f;
    out.emplace_back(std::move(x0), std::move(x1));
  }
  return out;
}

double sampled_shadow_hausdorff(const BodySpec& K, const DirectionSample& v, double mu, std::size_t samples) {
  require_polytope_23(K);
  const double N = bounding_radius(K).value();
  if (!(mu > N)) throw Error(ErrorCode::MuTooSmall, "shadow regions need mu > N");
  const Hull h = K.hull();
  std::vector<FloatVector> pts;
  // Spread samples over edges (2-D) or facet triangles (3-D).
  if (h.dim == 2) {
    const std::size_t per = std::max<std::size_t>(2, samples / h.facets.size());
    for (const auto& f : h.facets) {
      const FloatVector a = to_float(h.vertices[f.vertices[0]]);
      const FloatVector b = to_float(h.vertices[f.vertices[1]]);
      for (std::size_t i = 0; i < per; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(per - 1);
        pts.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])});
      }
    }
  } else {
    std::size_t tris = 0;
    for (const auto& f : h.facets) tris += f.vertices.size() - 2;
    const std::size_t per = std::max<std::size_t>(3, samples / tris);
    const std::size_t g = std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(2.0 * per)));
    for (const auto& f : h.facets) {
      const FloatVector a = to_float(h.vertices[f.vertices[0]]);
      for (std::size_t k = 1; k + 1 < f.vertices.size(); ++k) {
        const FloatVector b = to_float(h.vertices[f.vertices[k]]);
        const FloatVector c = to_float(h.vertices[f.vertices[k + 1]]);
        for (std::size_t i = 0; i <= g; ++i)
          for (std::size_t j = 0; i + j <= g; ++j) {
            const double s = static_cast<double>(i) / g, t = static_cast<double>(j) / g;
            FloatVector p(3);
            for (int q = 0; q < 3; ++q) p[q] = a[q] + s * (b[q] - a[q]) + t * (c[q] - a[q]);
            pts.push_back(std::move(p));
          }
      }
    }
  }
  const auto images = shadow_images(K, v, mu, pts);
  if (h.dim == 2) {
    double lo0 = HUGE_VAL, hi0 = -HUGE_VAL, lo1 = HUGE_VAL, hi1 = -HUGE_VAL;
    for (const auto& [x0, x1] : images) {
      lo0 = std::min(lo0, x0[0]);
      hi0 = std::max(hi0, x0[0]);
      lo1 = std::min(lo1, x1[0]);
      hi1 = std::max(hi1, x1[0]);
    }
    return std::max(std::abs(lo0 - lo1), std::abs(hi0 - hi1));
  }
  std::vector<FloatVector> a, b;
  for (const auto& [x0, x1] : images) {
    a.push_back(x0);
    b.push_back(x1);
  }
  return polygon_hausdorff(float_hull_2d(std::move(a)), float_hull_2d(std::move(b)));
}

FloatVector chart_point(const FloatVector& y, double mu) {
  FloatVector out = y;
  out.push_back(std::sqrt(mu * mu - dot(y, y)));
  return out;
}

double chart_partial(const FloatVector& y, double mu, std::size_t j) {
  return -y.at(j) / std::sqrt(mu * mu - dot(y, y));
}

double chart_partial_bound(double N, double mu) {
  if (!(mu > N)) throw Error(ErrorCode::MuTooSmall, "derivative bound needs mu > N");
  return N / std::sqrt(mu * mu - N * N);
}

Rational hausdorff_distance_sq(const BodySpec& K, const BodySpec& H) {
  if (K.dim() != H.dim()) throw Error(ErrorCode::DimensionMismatch, "Hausdorff distance needs equal dimensions");
  if (!K.has_hull() || !H.has_hull())
    throw Error(ErrorCode::InvalidArgument, "exact Hausdorff distance needs polytopes with d <= 3");
  const Hull hk = K.hull(), hh = H.hull();
  Rational best = 0;
  for (const auto& v : hk.vertices) best = std::max(best, nearest_point_exact(hh, v).distance_sq);
  for (const auto& v : hh.vertices) best = std::max(best, nearest_point_exact(hk, v).distance_sq);
  return best;
}

double hausdorff_distance(const BodySpec& K, const BodySpec& H) {
  if (K.dim() != H.dim()) throw Error(ErrorCode::DimensionMismatch, "Hausdorff distance needs equal dimensions");
  if (K.is_ball() && H.is_ball()) {
    const Ball a = K.ball_data(), b = H.ball_data();
    return std::sqrt(norm_sq(sub(a.center, b.center)).get_d()) + std::abs(Rational(a.radius - b.radius).get_d());
  }
  return std::sqrt(hausdorff_distance_sq(K, H).get_d());
}

}  // namespace ehrtomo
