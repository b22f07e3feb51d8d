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

#include "ehrtomo/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "ehrtomo/error.hpp"
#include "ehrtomo/lp.hpp"
#include "ehrtomo/parallel.hpp"

namespace ehrtomo {

namespace {

// Inclusive integer range; empty when lo > hi.
struct Range {
  BigInt lo, hi;
  bool empty() const { return lo > hi; }
};

BigInt isqrt(const BigInt& n) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Integers n with (n - c)^2 <= rem, rem >= 0.
Range ball_line(const Rational& c, const Rational& rem) {
  // floor(sqrt(P/Q)) is within one of isqrt(P*Q)/Q.
  const BigInt pq = rem.get_num() * rem.get_den();
  const Rational root_est(isqrt(pq), rem.get_den());
  auto inside = [&](const BigInt& n) {
    const Rational t = Rational(n) - c;
    return t * t <= rem;
  };
  Range r{ceil_int(c - root_est), floor_int(c + root_est)};
  while (inside(r.hi + 1)) ++r.hi;
  while (r.hi >= r.lo && !inside(r.hi)) --r.hi;
  while (inside(r.lo - 1)) --r.lo;
  while (r.lo <= r.hi && !inside(r.lo)) ++r.lo;
  if (!inside(r.lo)) {
    // The estimate may have undershot an interval that is present.
    const BigInt f = floor_int(c);
    if (inside(f)) r = {f, f};
    else if (inside(f + 1)) r = {f + 1, f + 1};
    else return {1, 0};
    while (inside(r.hi + 1)) ++r.hi;
    while (inside(r.lo - 1)) --r.lo;
  }
  return r;
}

class LineCounter {
 public:
  LineCounter(const BodySpec& body, std::size_t inner) : inner_(inner), d_(body.dim()) {
    if (body.is_ball()) {
      kind_ = Kind::Ball;
      const Ball b = body.ball_data();
      center_ = b.center;
      radius_sq_ = b.radius * b.radius;
    } else if (body.has_hull() || std::holds_alternative<HPolytope>(body.shape())) {
      kind_ = Kind::Halfspaces;
      const HPolytope h = body.halfspaces();
      A_ = h.A;
      b_ = h.b;
    } else {
      kind_ = Kind::Generators;
      generators_ = body.vertices();
    }
  }

  // Count along the inner axis; x holds the fixed coordinates.
  BigInt count(RationalVector& x, const Range& box) const {
    switch (kind_) {
      case Kind::Ball: {
        Rational rem = radius_sq_;
        for (std::size_t j = 0; j < d_; ++j) {
          if (j == inner_) continue;
          const Rational t = x[j] - center_[j];
          rem -= t * t;
        }
        if (rem < 0) return 0;
        Range r = ball_line(center_[inner_], rem);
        r.lo = std::max(r.lo, box.lo);
        r.hi = std::min(r.hi, box.hi);
        return r.empty() ? BigInt(0) : BigInt(r.hi - r.lo + 1);
      }
      case Kind::Halfspaces: {
        Range r = box;
        for (std::size_t i = 0; i < A_.size() && !r.empty(); ++i) {
          Rational rest = b_[i];
          for (std::size_t j = 0; j < d_; ++j)
            if (j != inner_ && A_[i][j] != 0) rest -= A_[i][j] * x[j];
          const Rational& a = A_[i][inner_];
          if (a > 0) r.hi = std::min(r.hi, floor_int(rest / a));
          else if (a < 0) r.lo = std::max(r.lo, ceil_int(rest / a));
          else if (rest < 0) return 0;
        }
        return r.empty() ? BigInt(0) : BigInt(r.hi - r.lo + 1);
      }
      case Kind::Generators: {
        // The fiber of the hull over x is an interval; two LPs find its ends.
        const std::size_t n = generators_.size();
        RationalMatrix A;
        RationalVector b, c(n);
        for (std::size_t j = 0; j < d_; ++j) {
          if (j == inner_) continue;
          RationalVector row(n);
          for (std::size_t i = 0; i < n; ++i) row[i] = generators_[i][j];
          A.push_back(std::move(row));
          b.push_back(x[j]);
        }
        A.push_back(RationalVector(n, Rational(1)));
        b.push_back(1);
        for (std::size_t i = 0; i < n; ++i) c[i] = generators_[i][inner_];
        const lp::Result hi = lp::maximize(A, b, c);
        if (hi.status != lp::Status::Optimal) return 0;
        const lp::Result lo = lp::maximize(A, b, negate(c));
        Range r{std::max(box.lo, ceil_int(-lo.value)), std::min(box.hi, floor_int(hi.value))};
        return r.empty() ? BigInt(0) : BigInt(r.hi - r.lo + 1);
      }
    }
    return 0;
  }

 private:
  enum class Kind { Ball, Halfspaces, Generators };
  Kind kind_;
  std::size_t inner_;
  std::size_t d_;
  RationalVector center_;
  Rational radius_sq_;
  RationalMatrix A_;
  RationalVector b_;
  std::vector<RationalVector> generators_;
};

}  // namespace

BigInt count_lattice_points(const BodySpec& body, const CountOptions& opts) {
  const std::size_t d = body.dim();
  const BoundingBox box = bounding_box(body);
  std::vector<Range> ranges(d);
  for (std::size_t k = 0; k < d; ++k) {
    ranges[k] = {ceil_int(box.lo[k]), floor_int(box.hi[k])};
    if (ranges[k].empty()) return 0;
  }
  // Longest axis outermost; the last axis in `order` is solved per line.
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ranges[a].hi - ranges[a].lo > ranges[b].hi - ranges[b].lo;
  });
  const std::size_t inner = order.back();
  const LineCounter lines(body, inner);
  if (d == 1) {
    RationalVector x = zeros(1);
    return lines.count(x, ranges[inner]);
  }

  const std::size_t outer = order.front();
  const BigInt slab_count_big = ranges[outer].hi - ranges[outer].lo + 1;
  if (!slab_count_big.fits_ulong_p()) throw Error(ErrorCode::InvalidArgument, "lattice box too large");
  const std::size_t slabs = slab_count_big.get_ui();
  std::vector<std::size_t> middle(order.begin() + 1, order.end() - 1);

  std::vector<BigInt> per_slab(slabs);
  parallel_for(slabs, opts.threads, [&](std::size_t s) {
    RationalVector x = zeros(d);
    x[outer] = Rational(BigInt(ranges[outer].lo + s));
    std::vector<BigInt> odo(middle.size());
    for (std::size_t m = 0; m < middle.size(); ++m) {
      odo[m] = ranges[middle[m]].lo;
      x[middle[m]] = Rational(odo[m]);
    }
    BigInt total = 0;
    while (true) {
      total += lines.count(x, ranges[inner]);
      std::size_t m = 0;
      for (; m < middle.size(); ++m) {
        if (odo[m] < ranges[middle[m]].hi) {
          ++odo[m];
          x[middle[m]] = Rational(odo[m]);
          break;
        }
        odo[m] = ranges[middle[m]].lo;
        x[middle[m]] = Rational(odo[m]);
      }
      if (m == middle.size()) break;
    }
    per_slab[s] = total;
  });
  BigInt sum = 0;
  for (const auto& c : per_slab) sum += c;
  return sum;
}

BigInt count(const CountQuery& q, const CountOptions& opts) {
  if (q.s <= 0) throw Error(ErrorCode::NonpositiveDilation, "dilation s must be positive");
  if (q.w.size() != q.body.dim()) throw Error(ErrorCode::DimensionMismatch, "translation dimension");
  for (const auto& x : q.w)
    if (x.get_den() != 1) throw Error(ErrorCode::InvalidArgument, "translation w must be an integer vector");
  return count_lattice_points(dilate(translate(q.body, q.w), q.s), opts);
}

CountProfile count_profile(const BodySpec& body, const RationalVector& w, std::vector<Rational> s_list,
                           const CountOptions& opts) {
  if (s_list.empty()) throw Error(ErrorCode::InvalidArgument, "empty dilation list");
  std::sort(s_list.begin(), s_list.end());
  CountProfile p{w, {}};
  for (const auto& s : s_list) p.rows.push_back({s, count({body, w, s}, opts)});
  return p;
}

double volume_from_counts(const BodySpec& body, const Rational& s, const CountOptions& opts) {
  if (s < 1) throw Error(ErrorCode::InvalidArgument, "volume_from_counts needs s >= 1");
  const BigInt n = count({body, zeros(body.dim()), s}, opts);
  Rational denom = 1;
  for (std::size_t k = 0; k < body.dim(); ++k) denom *= s;
  return Rational(Rational(n) / denom).get_d();
}

}  // namespace ehrtomo
