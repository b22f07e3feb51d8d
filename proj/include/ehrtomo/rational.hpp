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

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ehrtomo {

/// Arbitrary precision rational; GMP keeps every arithmetic result in
/// lowest terms with a positive denominator.
using Rational = mpq_class;
using BigInt = mpz_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;
using FloatVector = std::vector<double>;

/// Parses "p", "-p", "p/q" (q != 0). Surrounding blanks are ignored.
Rational parse_rational(std::string_view text);
/// Parses a comma separated list of rationals: "1,-2,3/4".
RationalVector parse_rational_vector(std::string_view text);
/// Parses a comma separated list of doubles: "0.5,1,2".
FloatVector parse_float_vector(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const RationalVector& v, char sep = ',');

/// Exact: every finite double is a dyadic rational.
Rational to_rational(double x);
double to_double(const Rational& q);
FloatVector to_float(const RationalVector& v);
RationalVector to_rational(const FloatVector& v);

BigInt floor_int(const Rational& q);
BigInt ceil_int(const Rational& q);

RationalVector zeros(std::size_t d);
RationalVector add(const RationalVector& a, const RationalVector& b);
RationalVector sub(const RationalVector& a, const RationalVector& b);
RationalVector scale(const Rational& s, const RationalVector& a);
RationalVector negate(const RationalVector& a);
Rational dot(const RationalVector& a, const RationalVector& b);
Rational norm_sq(const RationalVector& a);
bool is_zero(const RationalVector& a);

/// Scales a nonzero vector to the unique primitive integer vector with the
/// same direction.
RationalVector primitive_direction(const RationalVector& a);

/// A rational u >= sqrt(x): the double estimate, nudged upward until the
/// exact check u^2 >= x passes. Perfect squares come back exact.
Rational sqrt_upper(const Rational& x);

double dot(const FloatVector& a, const FloatVector& b);
double norm(const FloatVector& a);

}  // namespace ehrtomo
