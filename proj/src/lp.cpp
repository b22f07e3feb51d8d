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

#include "ehrtomo/lp.hpp"

#include <limits>

#include "ehrtomo/error.hpp"

namespace ehrtomo::lp {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Tableau {
  std::vector<RationalVector> rows;  // each row: coefficients then rhs
  RationalVector obj;                // reduced costs then objective value
  std::vector<std::size_t> basis;
  std::size_t cols = 0;  // number of variable columns

  void pivot(std::size_t r, std::size_t c) {
    RationalVector& pr = rows[r];
    const Rational inv = 1 / pr[c];
    for (auto& e : pr) e *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j <= cols; ++j)
        if (pr[j] != 0) rows[i][j] -= f * pr[j];
    }
    if (obj[c] != 0) {
      const Rational f = obj[c];
      for (std::size_t j = 0; j <= cols; ++j)
        if (pr[j] != 0) obj[j] -= f * pr[j];
    }
    basis[r] = c;
  }

  // Returns false when the objective is unbounded.
  bool run(std::size_t allowed_cols) {
    while (true) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < allowed_cols; ++j)
        if (obj[j] < 0) {
          enter = j;
          break;
        }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        const Rational ratio = rows[i][cols] / rows[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

Result maximize(const RationalMatrix& A, const RationalVector& b, const RationalVector& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  for (const auto& row : A)
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "LP matrix width");
  if (b.size() != m) throw Error(ErrorCode::DimensionMismatch, "LP rhs length");

  Tableau t;
  t.cols = n + m;
  t.rows.assign(m, RationalVector(t.cols + 1, Rational(0)));
  t.basis.resize(m);
  t.obj.assign(t.cols + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = flip ? Rational(-A[i][j]) : A[i][j];
    t.rows[i][n + i] = 1;
    t.rows[i][t.cols] = flip ? Rational(-b[i]) : b[i];
    t.basis[i] = n + i;
  }
  // Phase 1: maximize -sum(artificials).
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= t.cols; ++j)
      if (j < n || j == t.cols) t.obj[j] -= t.rows[i][j];
  t.run(n);
  Result res;
  if (t.obj[t.cols] != 0) {
    res.status = Status::Infeasible;
    return res;
  }
  // Drive remaining artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = kNone;
    for (std::size_t j = 0; j < n; ++j)
      if (t.rows[i][j] != 0) {
        col = j;
        break;
      }
    if (col == kNone) {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    t.pivot(i, col);
    ++i;
  }
  // Phase 2.
  t.obj.assign(t.cols + 1, Rational(0));
  for (std::size_t j = 0; j < n; ++j) t.obj[j] = -c[j];
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const Rational f = t.obj[t.basis[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j <= t.cols; ++j) t.obj[j] -= f * t.rows[i][j];
  }
  if (!t.run(n)) {
    res.status = Status::Unbounded;
    return res;
  }
  res.status = Status::Optimal;
  res.value = t.obj[t.cols];
  res.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.basis[i] < n) res.x[t.basis[i]] = t.rows[i][t.cols];
  return res;
}

Result maximize_free(const RationalMatrix& G, const RationalVector& h, const RationalVector& c) {
  // y = p - q, slack s:  G p - G q + s = h.
  const std::size_t m = G.size();
  const std::size_t d = c.size();
  RationalMatrix A(m, RationalVector(2 * d + m, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    if (G[i].size() != d) throw Error(ErrorCode::DimensionMismatch, "LP constraint width");
    for (std::size_t j = 0; j < d; ++j) {
      A[i][j] = G[i][j];
      A[i][d + j] = -G[i][j];
    }
    A[i][2 * d + i] = 1;
  }
  RationalVector obj(2 * d + m, Rational(0));
  for (std::size_t j = 0; j < d; ++j) {
    obj[j] = c[j];
    obj[d + j] = -c[j];
  }
  Result r = maximize(A, h, obj);
  if (r.status == Status::Optimal) {
    RationalVector y(d);
    for (std::size_t j = 0; j < d; ++j) y[j] = r.x[j] - r.x[d + j];
    r.x = std::move(y);
  }
  return r;
}

}  // namespace ehrtomo::lp

namespace ehrtomo {

bool lp_membership(const RationalVector& x, const std::vector<RationalVector>& vertices) {
  if (vertices.empty()) throw Error(ErrorCode::InvalidArgument, "empty vertex list");
  const std::size_t d = x.size();
  const std::size_t n = vertices.size();
  // sum_i lambda_i v_i = x, sum_i lambda_i = 1, lambda >= 0.
  RationalMatrix A(d + 1, RationalVector(n, Rational(0)));
  RationalVector b(d + 1);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (vertices[i].size() != d) throw Error(ErrorCode::DimensionMismatch, "vertex dimension");
      A[k][i] = vertices[i][k];
    }
    b[k] = x[k];
  }
  for (std::size_t i = 0; i < n; ++i) A[d][i] = 1;
  b[d] = 1;
  return lp::maximize(A, b, RationalVector(n, Rational(0))).status == lp::Status::Optimal;
}

}  // namespace ehrtomo
