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

#include "ehrtomo/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ehrtomo/error.hpp"
#include "ehrtomo/parallel.hpp"
#include "ehrtomo/sampling.hpp"

namespace ehrtomo {

namespace {

void check_schedule(const std::vector<double>& mus, double N) {
  if (mus.empty()) throw Error(ErrorCode::InvalidArgument, "empty mu schedule");
  for (std::size_t i = 0; i < mus.size(); ++i) {
    if (!(mus[i] > N))
      throw Error(ErrorCode::MuTooSmall, "mu = " + std::to_string(mus[i]) + " must exceed N = " + std::to_string(N));
    if (i > 0 && !(mus[i] > mus[i - 1])) throw Error(ErrorCode::InvalidArgument, "mu schedule must be increasing");
  }
}

// Exact translation realizing mu v.
RationalVector translation_for(const DirectionSample& v, double mu) {
  if (v.primitive) {
    const FloatVector w = to_float(*v.primitive);
    return scale(to_rational(mu / norm(w)), *v.primitive);
  }
  FloatVector t(v.v.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = mu * v.v[i];
  return to_rational(t);
}

double power(double x, std::size_t n) { return std::pow(x, static_cast<double>(n)); }

}  // namespace

ConvergenceTable spherical_limit_table(const BodySpec& K, const DirectionSample& v, const std::vector<double>& mus,
                                       const SphereAreaOptions& sphere) {
  const std::size_t d = K.dim();
  ConvergenceTable table;
  table.bounding_radius = bounding_radius(K).value();
  check_schedule(mus, table.bounding_radius);
  const double reference = brightness_hull(K, v);
  for (double mu : mus) {
    const BodySpec moved = translate(K, translation_for(v, mu));
    const SphereAreaResult area = spherical_area(moved, sphere);
    ConvergenceRow row;
    row.mu = mu;
    row.estimate = power(mu, d - 1) * area.value;
    row.estimate_stderr = power(mu, d - 1) * area.error_estimate;
    row.reference = reference;
    row.abs_error = std::abs(row.estimate - reference);
    table.rows.push_back(std::move(row));
  }
  return table;
}

ConvergenceTable ppyr_limit_brightness(const BodySpec& K, const DirectionSample& v, const std::vector<double>& mus,
                                       const PpyrLimitOptions& opts) {
  const std::size_t d = K.dim();
  ConvergenceTable table;
  const double N = bounding_radius(K).value();
  table.bounding_radius = N;
  check_schedule(mus, N);
  const double reference = brightness_hull(K, v);
  for (std::size_t i = 0; i < mus.size(); ++i) {
    const double mu = mus[i];
    const BodySpec moved = translate(K, translation_for(v, mu));
    ConvergenceRow row;
    row.mu = mu;
    double volume = 0, volume_se = 0;
    if (opts.mode == VolumeMode::Exact) {
      row.exact_volume = ppyr_volume_exact(moved);
      volume = row.exact_volume->get_d();
    } else {
      MonteCarloParams mc = opts.montecarlo;
      mc.seed = chunk_seed(opts.montecarlo.seed, i);
      const MonteCarloEstimate est = ppyr_volume_montecarlo(moved, mc);
      volume = est.estimate;
      volume_se = est.standard_error;
    }
    row.estimate = static_cast<double>(d) * volume / mu;
    row.estimate_stderr = static_cast<double>(d) * volume_se / mu;
    row.reference = reference;
    row.abs_error = std::abs(row.estimate - reference);
    if (opts.with_sandwich) {
      const double area = spherical_area(moved, opts.sphere).value;
      const double cone = power(mu, d - 1) * area / static_cast<double>(d);
      const double lower = power((mu - N) / mu, d) * cone;
      const double upper = power((mu + N) / mu, d) * cone;
      const double vm = volume / mu;
      const double slack = opts.sandwich_slack + 4 * volume_se / mu;
      row.sandwich_lower = lower;
      row.sandwich_upper = upper;
      row.volume_over_mu = vm;
      row.sandwich_holds =
          lower - slack * std::max(1.0, std::abs(lower)) <= vm && vm <= upper + slack * std::max(1.0, std::abs(upper));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<DirectionSample> rational_directions(std::size_t d, int h, bool both_signs) {
  if (h < 1) throw Error(ErrorCode::InvalidArgument, "direction height must be at least 1");
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  std::vector<std::vector<long>> found;
  std::vector<long> w(d, -h);
  while (true) {
    long g = 0;
    for (long x : w) g = std::gcd(g, std::abs(x));
    if (g == 1) {
      const auto first = std::find_if(w.begin(), w.end(), [](long x) { return x != 0; });
      if (both_signs || *first > 0) found.push_back(w);
    }
    std::size_t k = d;
    while (k > 0 && w[k - 1] == h) w[--k] = -h;
    if (k == 0) break;
    ++w[k - 1];
  }
  auto key = [](const std::vector<long>& x) {
    long inf = 0, l1 = 0;
    for (long c : x) {
      inf = std::max(inf, std::abs(c));
      l1 += std::abs(c);
    }
    return std::make_pair(inf, l1);
  };
  std::sort(found.begin(), found.end(), [&](const auto& a, const auto& b) {
    if (key(a) != key(b)) return key(a) < key(b);
    return a > b;
  });
  std::vector<DirectionSample> out;
  for (const auto& x : found) {
    RationalVector r;
    for (long c : x) r.push_back(Rational(c));
    out.push_back(DirectionSample::from_rational(r));
  }
  return out;
}

const char* to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::EqualWithinTolerance: return "equal-within-tolerance";
    case VerdictKind::Distinct: return "distinct";
    case VerdictKind::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

struct BrightnessEstimate {
  double raw = 0;
  double extrapolated = 0;
  double error = 0;
};

BrightnessEstimate estimate_brightness(const BodySpec& K, const DirectionSample& v, double mu_max,
                                       const MonteCarloParams& mc) {
  PpyrLimitOptions opts;
  opts.with_sandwich = false;
  opts.mode = K.has_hull() ? VolumeMode::Exact : VolumeMode::MonteCarlo;
  opts.montecarlo = mc;
  const ConvergenceTable t = ppyr_limit_brightness(K, v, {mu_max / 2, mu_max}, opts);
  const ConvergenceRow& half = t.rows[0];
  const ConvergenceRow& full = t.rows[1];
  BrightnessEstimate e;
  e.raw = full.estimate;
  // Error ~ c / mu: twice the mu_max value minus the mu_max / 2 value.
  e.extrapolated = 2 * full.estimate - half.estimate;
  e.error = std::abs(full.estimate - half.estimate) +
            3 * std::sqrt(4 * full.estimate_stderr * full.estimate_stderr + half.estimate_stderr * half.estimate_stderr);
  return e;
}

}  // namespace

CompareVerdict compare_bodies(const BodySpec& A, const BodySpec& B, const CompareOptions& opts) {
  if (A.dim() != B.dim()) throw Error(ErrorCode::DimensionMismatch, "bodies live in different dimensions");
  CompareVerdict verdict;
  const bool sym_a = is_symmetric(A), sym_b = is_symmetric(B);
  if (!sym_a) verdict.warnings.push_back("body A is not symmetric; the reconstruction argument assumes symmetry");
  if (!sym_b) verdict.warnings.push_back("body B is not symmetric; the reconstruction argument assumes symmetry");
  const std::vector<DirectionSample> dirs = rational_directions(A.dim(), opts.height, !(sym_a && sym_b));

  const double NA = bounding_radius(A).value(), NB = bounding_radius(B).value();
  if (!(opts.mu_max / 2 > std::max(NA, NB)))
    throw Error(ErrorCode::MuTooSmall, "mu_max / 2 must exceed both bounding radii");

  verdict.rows.resize(dirs.size());
  parallel_for(dirs.size(), opts.threads, [&](std::size_t i) {
    MonteCarloParams mc = opts.montecarlo;
    mc.threads = 1;
    mc.seed = chunk_seed(opts.montecarlo.seed, 1000 + i);
    const BrightnessEstimate a = estimate_brightness(A, dirs[i], opts.mu_max, mc);
    const BrightnessEstimate b = estimate_brightness(B, dirs[i], opts.mu_max, mc);
    DirectionComparison& row = verdict.rows[i];
    row.direction = dirs[i];
    row.va = a.extrapolated;
    row.vb = b.extrapolated;
    row.va_raw = a.raw;
    row.vb_raw = b.raw;
    row.err_a = a.error;
    row.err_b = b.error;
    row.gap = std::abs(a.extrapolated - b.extrapolated);
    row.tolerance = opts.tol;
  });

  bool all_within = true;
  std::optional<std::size_t> witness;
  for (std::size_t i = 0; i < verdict.rows.size(); ++i) {
    const auto& r = verdict.rows[i];
    verdict.gap = std::max(verdict.gap, r.gap);
    if (r.gap > r.tolerance) all_within = false;
    if (!witness && r.gap > r.tolerance + r.err_a + r.err_b) witness = i;
  }
  if (witness) {
    verdict.kind = VerdictKind::Distinct;
    verdict.witness = verdict.rows[*witness].direction;
    verdict.gap = verdict.rows[*witness].gap;
    verdict.status =
        "brightness estimates differ at the witness direction by more than the tolerance plus the estimated "
        "convergence errors; symmetric bodies with different brightness functions are different";
  } else if (all_within) {
    verdict.kind = VerdictKind::EqualWithinTolerance;
    verdict.status =
        "tolerance-limited: brightness estimates agree on finitely many rational directions at finite mu; "
        "this is not a certificate that the bodies are equal";
  } else {
    verdict.kind = VerdictKind::Inconclusive;
    verdict.status = "some gap exceeds the tolerance but not the tolerance plus the estimated convergence errors";
  }
  return verdict;
}

std::optional<ProbeMismatch> ehrhart_equality_probe(const BodySpec& A, const BodySpec& B, int h,
                                                    const std::vector<Rational>& s_list, const CountOptions& opts) {
  if (A.dim() != B.dim()) throw Error(ErrorCode::DimensionMismatch, "bodies live in different dimensions");
  if (h < 0) throw Error(ErrorCode::InvalidArgument, "probe height must be nonnegative");
  const std::size_t d = A.dim();
  std::vector<long> w(d, -h);
  while (true) {
    RationalVector wr;
    for (long x : w) wr.push_back(Rational(x));
    for (const auto& s : s_list) {
      BigInt ca = count({A, wr, s}, opts);
      BigInt cb = count({B, wr, s}, opts);
      if (ca != cb) return ProbeMismatch{wr, s, std::move(ca), std::move(cb)};
    }
    std::size_t k = d;
    while (k > 0 && w[k - 1] == h) w[--k] = -h;
    if (k == 0) break;
    ++w[k - 1];
  }
  return std::nullopt;
}

std::vector<Rational> default_probe_dilations() {
  std::vector<Rational> out;
  for (int k = 1; k <= 16; ++k) {
    Rational q(k, 4);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

}  // namespace ehrtomo
