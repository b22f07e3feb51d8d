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

#include <optional>
#include <string>
#include <vector>

#include "ehrtomo/lattice.hpp"
#include "ehrtomo/projections.hpp"
#include "ehrtomo/pseudopyramid.hpp"

namespace ehrtomo {

struct ConvergenceRow {
  double mu = 0;
  double estimate = 0;
  double reference = 0;
  double abs_error = 0;
  std::optional<double> bound;
  /// Pseudopyramid tables only: exact vol ppyr(K + mu v) when available,
  /// the Monte-Carlo standard error of the estimate otherwise.
  std::optional<Rational> exact_volume;
  double estimate_stderr = 0;
  /// Pseudopyramid tables only: the sandwich
  ///   ((mu-N)/mu)^d mu^(d-1) area S(K+mu v) / d <= vol ppyr(K+mu v) / mu
  ///     <= ((mu+N)/mu)^d mu^(d-1) area S(K+mu v) / d.
  std::optional<double> sandwich_lower;
  std::optional<double> volume_over_mu;
  std::optional<double> sandwich_upper;
  bool sandwich_holds = true;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  double bounding_radius = 0;  // N
};

/// Rows of mu^(d-1) area S(K + mu v) against V_K(v). Every mu must exceed N.
ConvergenceTable spherical_limit_table(const BodySpec& K, const DirectionSample& v, const std::vector<double>& mus,
                                       const SphereAreaOptions& sphere = {});

enum class VolumeMode { Exact, MonteCarlo };

struct PpyrLimitOptions {
  VolumeMode mode = VolumeMode::Exact;
  MonteCarloParams montecarlo;
  bool with_sandwich = true;
  SphereAreaOptions sphere;  // method is chosen per dimension when unset
  double sandwich_slack = 1e-6;
};

/// Rows of d vol ppyr(K + mu v) / mu against V_K(v). When v carries a
/// primitive vector w the translate is (mu / |w|) w with mu / |w| taken as
/// an exact rational.
ConvergenceTable ppyr_limit_brightness(const BodySpec& K, const DirectionSample& v, const std::vector<double>& mus,
                                       const PpyrLimitOptions& opts = {});

/// Primitive integer vectors with entries in [-h, h], normalized. When
/// `both_signs` is false only the representative whose first nonzero entry
/// is positive is kept. Ordered by max-norm, then l1-norm, then reverse
/// lexicographic order, so (1,0) precedes (0,1).
std::vector<DirectionSample> rational_directions(std::size_t d, int h, bool both_signs = false);

struct DirectionComparison {
  DirectionSample direction;
  double va = 0;  // Richardson-extrapolated brightness estimates
  double vb = 0;
  double va_raw = 0;  // unextrapolated, at mu_max
  double vb_raw = 0;
  double err_a = 0;  // estimated convergence (plus sampling) errors
  double err_b = 0;
  double gap = 0;
  double tolerance = 0;
};

enum class VerdictKind { EqualWithinTolerance, Distinct, Inconclusive };

struct CompareVerdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::optional<DirectionSample> witness;
  /// The witness is the first direction, in rational_directions order,
  /// whose gap exceeds its threshold; gap is then the gap there, and the
  /// largest gap over all directions otherwise.
  double gap = 0;
  std::vector<DirectionComparison> rows;
  std::vector<std::string> warnings;
  std::string status;  // what the verdict does and does not certify
};

const char* to_string(VerdictKind k);

struct CompareOptions {
  int height = 2;
  double mu_max = 64;
  double tol = 0.05;
  MonteCarloParams montecarlo;  // for bodies without exact pseudopyramids
  unsigned threads = 1;
};

/// Replays the proof chain on finite data: for each rational direction,
/// estimate V via d vol ppyr(K + mu v) / mu at mu_max and mu_max / 2 and
/// one Richardson step, then compare. Distinct when some gap exceeds
/// tol + err_a + err_b; equal when every gap is within tol; inconclusive
/// otherwise.
CompareVerdict compare_bodies(const BodySpec& A, const BodySpec& B, const CompareOptions& opts = {});

struct ProbeMismatch {
  RationalVector w;
  Rational s;
  BigInt count_a;
  BigInt count_b;
};

/// First (w, s), w scanned lexicographically over [-h, h]^d and s in list
/// order, where the exact lattice counts of s(A + w) and s(B + w) differ.
std::optional<ProbeMismatch> ehrhart_equality_probe(const BodySpec& A, const BodySpec& B, int h,
                                                    const std::vector<Rational>& s_list,
                                                    const CountOptions& opts = {});

/// {k / 4 : 1 <= k <= 16}.
std::vector<Rational> default_probe_dilations();

}  // namespace ehrtomo
