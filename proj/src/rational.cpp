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

#include "ehrtomo/rational.hpp"

#include <cmath>
#include <sstream>

#include "ehrtomo/error.hpp"

namespace ehrtomo {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

template <class Fn>
void split_commas(std::string_view text, Fn&& fn) {
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(',', start);
    fn(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const std::size_t slash = s.find('/');
  const std::string_view num = trim(s.substr(0, slash));
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-')
    throw Error(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
  BigInt q = parse_integer(den);
  if (q == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational r(parse_integer(num), q);
  r.canonicalize();
  return r;
}

RationalVector parse_rational_vector(std::string_view text) {
  RationalVector out;
  split_commas(text, [&](std::string_view item) { out.push_back(parse_rational(item)); });
  return out;
}

FloatVector parse_float_vector(std::string_view text) {
  FloatVector out;
  split_commas(text, [&](std::string_view item) {
    const std::string s(trim(item));
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size() || !std::isfinite(x))
      throw Error(ErrorCode::ParseError, "not a number: '" + s + "'");
    out.push_back(x);
  });
  return out;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const RationalVector& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += to_string(v[i]);
  }
  return out;
}

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "non-finite value");
  return Rational(x);
}

double to_double(const Rational& q) { return q.get_d(); }

FloatVector to_float(const RationalVector& v) {
  FloatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_d();
  return out;
}

RationalVector to_rational(const FloatVector& v) {
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_rational(v[i]);
  return out;
}

BigInt floor_int(const Rational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

BigInt ceil_int(const Rational& q) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

RationalVector zeros(std::size_t d) { return RationalVector(d, Rational(0)); }

RationalVector add(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RationalVector sub(const RationalVector& a, const RationalVector& b) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RationalVector scale(const Rational& s, const RationalVector& a) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

RationalVector negate(const RationalVector& a) {
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rational norm_sq(const RationalVector& a) { return dot(a, a); }

bool is_zero(const RationalVector& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

RationalVector primitive_direction(const RationalVector& a) {
  BigInt lcm_den = 1;
  for (const auto& x : a) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<BigInt> ints(a.size());
  BigInt g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Rational scaled = a[i] * lcm_den;
    ints[i] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (g == 0) throw Error(ErrorCode::InvalidArgument, "zero vector has no direction");
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = Rational(BigInt(ints[i] / g));
  return out;
}

Rational sqrt_upper(const Rational& x) {
  if (x <= 0) return 0;
  Rational u = to_rational(std::sqrt(x.get_d()));
  while (u * u < x) u = to_rational(std::nextafter(u.get_d() * (1 + 1e-15), HUGE_VAL));
  return u;
}

double dot(const FloatVector& a, const FloatVector& b) {
  double acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double norm(const FloatVector& a) { return std::sqrt(dot(a, a)); }

}  // namespace ehrtomo
