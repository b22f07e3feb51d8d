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

#include "ehrtomo/rational.hpp"

namespace ehrtomo::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  Rational value;  // objective value when Optimal
  RationalVector x;
};

/// Exact two-phase simplex with Bland's rule:
///   maximize c.x  subject to  A x = b,  x >= 0.
Result maximize(const RationalMatrix& A, const RationalVector& b, const RationalVector& c);

/// maximize c.y subject to G y <= h with y unrestricted in sign.
Result maximize_free(const RationalMatrix& G, const RationalVector& h, const RationalVector& c);

}  // namespace ehrtomo::lp

namespace ehrtomo {

/// True iff x is a convex combination of `vertices`, decided by an exact
/// feasibility LP. Works in any dimension.
bool lp_membership(const RationalVector& x, const std::vector<RationalVector>& vertices);

}  // namespace ehrtomo
