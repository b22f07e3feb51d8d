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

#include <vector>

#include "ehrtomo/bodies.hpp"

namespace ehrtomo {

/// L_{K+w}(s): lattice points of s * (K + w).
struct CountQuery {
  BodySpec body;
  RationalVector w;  // integer entries
  Rational s;        // > 0
};

struct CountRow {
  Rational s;
  BigInt count;
};

/// Counts for one translate at several dilations, sorted by s.
struct CountProfile {
  RationalVector w;
  std::vector<CountRow> rows;
};

struct CountOptions {
  unsigned threads = 1;
};

/// Exact number of integer points in a body (boundary included). Slabs
/// along the longest box axis are independent work units; within a slab
/// the innermost coordinate range is solved exactly per line.
BigInt count_lattice_points(const BodySpec& body, const CountOptions& opts = {});

BigInt count(const CountQuery& q, const CountOptions& opts = {});

CountProfile count_profile(const BodySpec& body, const RationalVector& w,
                           std::vector<Rational> s_list, const CountOptions& opts = {});

/// L_K(s) / s^d. The error is O(1/s) for convex bodies.
double volume_from_counts(const BodySpec& body, const Rational& s, const CountOptions& opts = {});

}  // namespace ehrtomo
