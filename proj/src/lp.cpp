/*
 *   Copyright 2026 The hopfcoh Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "hopfcoh/lp.hpp"

#include "hopfcoh/error.hpp"
#include "hopfcoh/linalg.hpp"

namespace hopfcoh {

  namespace {

    void check_shape(const RationalMatrix& a, const RationalVector& b) {
      if (a.size() != b.size()) throw DimensionError("LP: row count of A differs from length of b");
      for (const auto& row : a) {
        if (row.size() != a.front().size()) throw DimensionError("LP: ragged constraint matrix");
      }
    }

  }  // namespace

  RationalMatrix to_rational(const Matrix& m) {
    RationalMatrix out(m.rows(), RationalVector(m.cols()));
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (const auto& e : m.column(j)) {
        if (!e.value.is_real()) throw StructureError("LP data must be real");
        out[e.row][j] = e.value.re();
      }
    }
    return out;
  }

  FeasibilityResult simplex_feasibility(const RationalMatrix& a, const RationalVector& b) {
    check_shape(a, b);
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a.front().size();
    const std::size_t w = n + m;

    // Rows are sign-normalized so that b >= 0; artificial variable n+i
    // starts basic in row i.
    std::vector<int>         sign(m, 1);
    RationalMatrix           t(m, RationalVector(w));
    RationalVector           rhs(m);
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
      sign[i] = sgn(b[i]) < 0 ? -1 : 1;
      for (std::size_t j = 0; j < n; ++j) t[i][j] = sign[i] < 0 ? Rational(-a[i][j]) : a[i][j];
      t[i][n + i] = 1;
      rhs[i]      = sign[i] < 0 ? Rational(-b[i]) : b[i];
      basis[i]    = n + i;
    }
    // Reduced costs for the objective sum of artificials.
    RationalVector cost(w);
    Rational       objective = 0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) cost[j] -= t[i][j];
      objective += rhs[i];
    }

    FeasibilityResult result;
    for (;;) {
      std::size_t enter = w;
      for (std::size_t j = 0; j < w; ++j) {
        if (sgn(cost[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == w) break;
      std::size_t leave = m;
      Rational    best;
      for (std::size_t i = 0; i < m; ++i) {
        if (sgn(t[i][enter]) <= 0) continue;
        Rational ratio = rhs[i] / t[i][enter];
        if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best  = ratio;
        }
      }
      // The phase-I objective is bounded below by zero, so a leaving row exists.
      if (leave == m) throw ConsistencyError("simplex: unbounded phase-I problem");
      Rational piv = t[leave][enter];
      for (auto& x : t[leave]) x /= piv;
      rhs[leave] /= piv;
      for (std::size_t i = 0; i < m; ++i) {
        if (i == leave || sgn(t[i][enter]) == 0) continue;
        Rational f = t[i][enter];
        for (std::size_t j = 0; j < w; ++j) {
          if (sgn(t[leave][j]) != 0) t[i][j] -= f * t[leave][j];
        }
        rhs[i] -= f * rhs[leave];
      }
      Rational f = cost[enter];
      for (std::size_t j = 0; j < w; ++j) {
        if (sgn(t[leave][j]) != 0) cost[j] -= f * t[leave][j];
      }
      objective += f * rhs[leave];
      basis[leave] = enter;
      ++result.pivots;
    }

    if (sgn(objective) > 0) {
      // Dual values u_i = 1 - (reduced cost of artificial i); y = -D u.
      result.certificate.resize(m);
      for (std::size_t i = 0; i < m; ++i) {
        Rational u            = 1 - cost[n + i];
        result.certificate[i] = sign[i] < 0 ? u : Rational(-u);
      }
      return result;
    }
    result.feasible = true;
    result.point.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < n) result.point[basis[i]] = rhs[i];
    }
    return result;
  }

  std::optional<RationalVector> vertex_search(const RationalMatrix& a, const RationalVector& b) {
    check_shape(a, b);
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a.front().size();
    if (n > 20) throw Error("vertex_search: too many variables for exhaustive search");
    Matrix full(m, n);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) full.set(i, j, Scalar(a[i][j]));
    }
    Vector rhs(m);
    for (std::size_t i = 0; i < m; ++i) rhs[i] = Scalar(b[i]);
    const std::size_t r = image_rank(full);

    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != r) continue;
      std::vector<std::size_t> cols;
      for (std::size_t j = 0; j < n; ++j) {
        if (mask >> j & 1U) cols.push_back(j);
      }
      Matrix sub(m, cols.size());
      for (std::size_t k = 0; k < cols.size(); ++k) {
        for (std::size_t i = 0; i < m; ++i) sub.set(i, k, full.at(i, cols[k]));
      }
      if (image_rank(sub) != r) continue;
      auto sol = solve(sub, rhs);
      if (!sol) continue;
      RationalVector x(n);
      bool           ok = true;
      for (std::size_t k = 0; k < cols.size(); ++k) {
        x[cols[k]] = (*sol.solution)[k].re();
        if (sgn(x[cols[k]]) < 0) ok = false;
      }
      if (ok) return x;
    }
    return std::nullopt;
  }

  bool verify_feasible_point(const RationalMatrix& a, const RationalVector& b, const RationalVector& w) {
    check_shape(a, b);
    for (const auto& x : w) {
      if (sgn(x) < 0) return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].size() != w.size()) return false;
      Rational s = 0;
      for (std::size_t j = 0; j < w.size(); ++j) s += a[i][j] * w[j];
      if (s != b[i]) return false;
    }
    return true;
  }

  bool verify_farkas(const RationalMatrix& a, const RationalVector& b, const RationalVector& y) {
    check_shape(a, b);
    if (y.size() != a.size()) return false;
    const std::size_t n = a.empty() ? 0 : a.front().size();
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t i = 0; i < a.size(); ++i) s += a[i][j] * y[i];
      if (sgn(s) < 0) return false;
    }
    Rational s = 0;
    for (std::size_t i = 0; i < b.size(); ++i) s += b[i] * y[i];
    return sgn(s) < 0;
  }

}  // namespace hopfcoh
