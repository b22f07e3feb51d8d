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

#include "ehrtomo/pseudopyramid.hpp"

#include <algorithm>
#include <cmath>

#include "ehrtomo/distance.hpp"
#include "ehrtomo/error.hpp"
#include "ehrtomo/parallel.hpp"
#include "ehrtomo/sampling.hpp"

namespace ehrtomo {

Hull ppyr_polytope(const BodySpec& K) {
  if (!K.has_hull()) throw Error(ErrorCode::InvalidArgument, "ppyr_polytope needs a polytope with d <= 3");
  std::vector<RationalVector> pts = K.vertices();
  pts.push_back(zeros(K.dim()));
  return convex_hull(pts);
}

bool ppyr_contains(const RayCaster& K, const FloatVector& x, double tol) {
  if (tol < 1e-12) throw Error(ErrorCode::ToleranceTooSmall, "ppyr membership tolerance below 1e-12");
  const double r = norm(x);
  if (r == 0) return true;
  FloatVector dir(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) dir[i] = x[i] / r;
  const auto u = K.exit_parameter(dir);
  return u && *u >= r - tol;
}

bool ppyr_contains(const BodySpec& K, const FloatVector& x, double tol) {
  return ppyr_contains(RayCaster(K), x, tol);
}

Rational ppyr_volume_exact(const BodySpec& K) { return polytope_volume(ppyr_polytope(K)); }

namespace {

// Reflection sending the unit vector a to the last axis (identity when
// a already is that axis).
struct Frame {
  FloatVector u;
  double uu = 0;
  FloatVector apply(const FloatVector& x) const {
    if (uu < 1e-300) return x;
    const double f = 2 * dot(u, x) / uu;
    FloatVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] - f * u[i];
    return out;
  }
};

// Sampling box for conv(K and 0) in a frame whose last axis points from
// the origin toward K; falls back to the coordinate box when K has no
// usable point list.
void sampling_box(const BodySpec& K, Frame& frame, FloatVector& lo, FloatVector& width) {
  const std::size_t d = K.dim();
  std::vector<FloatVector> pts;
  double pad = 0;
  if (K.is_ball()) {
    const Ball b = K.ball_data();
    pts.push_back(to_float(b.center));
    pad = b.radius.get_d();
  } else if (K.has_hull() || std::holds_alternative<VPolytope>(K.shape())) {
    for (const auto& v : K.vertices()) pts.push_back(to_float(v));
  }
  if (!pts.empty()) {
    FloatVector c(d, 0.0);
    for (const auto& p : pts)
      for (std::size_t k = 0; k < d; ++k) c[k] += p[k] / static_cast<double>(pts.size());
    const double n = norm(c);
    if (n > 0) {
      frame.u = c;
      for (auto& x : frame.u) x /= n;
      frame.u.back() -= 1;
      frame.uu = dot(frame.u, frame.u);
    }
  }
  FloatVector a(d, 0.0), b(d, 0.0);
  if (pts.empty()) {
    const BoundingBox box = bounding_box(K);
    for (std::size_t k = 0; k < d; ++k) {
      a[k] = std::min(0.0, box.lo[k].get_d());
      b[k] = std::max(0.0, box.hi[k].get_d());
    }
  } else {
    for (const auto& p : pts) {
      const FloatVector q = frame.apply(p);
      for (std::size_t k = 0; k < d; ++k) {
        a[k] = std::min(a[k], q[k] - pad);
        b[k] = std::max(b[k], q[k] + pad);
      }
    }
  }
  lo.assign(d, 0.0);
  width.assign(d, 0.0);
  for (std::size_t k = 0; k < d; ++k) {
    const double slack = 1e-9 * std::max(1.0, b[k] - a[k]);
    lo[k] = a[k] - slack;
    width[k] = b[k] - a[k] + 2 * slack;
  }
}

}  // namespace

MonteCarloEstimate ppyr_volume_montecarlo(const BodySpec& K, const MonteCarloParams& params) {
  if (params.samples == 0) throw Error(ErrorCode::InvalidArgument, "need at least one sample");
  const std::size_t d = K.dim();
  Frame frame;
  FloatVector lo, width;
  sampling_box(K, frame, lo, width);
  double box_volume = 1;
  for (double w : width) box_volume *= w;
  const RayCaster caster(K);
  const std::uint64_t chunks = (params.samples + kMonteCarloChunk - 1) / kMonteCarloChunk;
  std::vector<std::uint64_t> hits(chunks, 0);
  parallel_for(chunks, params.threads, [&](std::size_t c) {
    SampleStream rng(chunk_seed(params.seed, c));
    const std::uint64_t begin = c * kMonteCarloChunk;
    const std::uint64_t end = std::min<std::uint64_t>(params.samples, begin + kMonteCarloChunk);
    FloatVector x(d);
    std::uint64_t h = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      for (std::size_t k = 0; k < d; ++k) x[k] = lo[k] + width[k] * rng.uniform();
      if (ppyr_contains(caster, frame.apply(x))) ++h;
    }
    hits[c] = h;
  });
  MonteCarloEstimate out;
  out.samples = params.samples;
  for (auto h : hits) out.hits += h;
  const double p = static_cast<double>(out.hits) / static_cast<double>(out.samples);
  out.estimate = p * box_volume;
  out.standard_error = box_volume * std::sqrt(p * (1 - p) / static_cast<double>(out.samples));
  return out;
}

Radii radii(const Hull& ppyr) {
  Radii r;
  for (const auto& v : ppyr.vertices) r.outer_sq = std::max(r.outer_sq, norm_sq(v));
  bool through_origin = false;
  bool first = true;
  for (const auto& f : ppyr.facets) {
    if (f.offset == 0) {
      through_origin = true;
      continue;
    }
    const Rational dsq = face_min_norm_sq(ppyr.facet_points(f));
    if (first || dsq < r.inner_sq) r.inner_sq = dsq;
    first = false;
  }
  // No facet through the origin: it must be interior (a ppyr always
  // contains the origin, and a boundary origin lies on some facet plane).
  if (!through_origin) {
    r.empty_front_shell = true;
    r.inner_sq = r.outer_sq;
  }
  r.outer = std::sqrt(r.outer_sq.get_d());
  r.inner = std::sqrt(r.inner_sq.get_d());
  return r;
}

PseudopyramidRecord make_pseudopyramid(const BodySpec& K) {
  PseudopyramidRecord rec{K, ppyr_polytope(K), std::nullopt, 0, 0, false};
  rec.volume_exact = polytope_volume(*rec.hull);
  const Radii r = radii(*rec.hull);
  rec.outer_radius_sq = r.outer_sq;
  rec.inner_radius_sq = r.inner_sq;
  rec.empty_front_shell = r.empty_front_shell;
  return rec;
}

}  // namespace ehrtomo
