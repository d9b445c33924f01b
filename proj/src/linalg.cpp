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

#include "hopfcoh/linalg.hpp"

#include <algorithm>

#include "hopfcoh/error.hpp"

namespace hopfcoh {

  namespace {

    // a + c * b
    SparseVector axpy(const SparseVector& a, const Scalar& c, const SparseVector& b) {
      SparseVector out;
      out.reserve(a.size() + b.size());
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].row < b[j].row)) {
          out.push_back(a[i++]);
        } else if (i == a.size() || b[j].row < a[i].row) {
          out.push_back({b[j].row, c * b[j].value});
          ++j;
        } else {
          Scalar v = a[i].value;
          v.add_product(c, b[j].value);
          if (!v.is_zero()) out.push_back({a[i].row, std::move(v)});
          ++i;
          ++j;
        }
      }
      return out;
    }

    const Scalar* find(const SparseVector& v, std::size_t idx) {
      auto it = std::lower_bound(v.begin(), v.end(), idx,
                                 [](const Entry& e, std::size_t r) { return e.row < r; });
      return it != v.end() && it->row == idx ? &it->value : nullptr;
    }

    void scale_in_place(SparseVector& v, const Scalar& c) {
      for (auto& e : v) e.value *= c;
    }

  }  // namespace

  SparseVector to_sparse(const Vector& v) {
    SparseVector out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) out.push_back({i, v[i]});
    }
    return out;
  }

  Vector to_dense(const SparseVector& v, std::size_t dim) {
    Vector out(dim);
    for (const auto& e : v) {
      if (e.row >= dim) throw DimensionError("sparse vector index out of range");
      out[e.row] = e.value;
    }
    return out;
  }

  RowEchelon::RowEchelon(std::size_t dim, bool track) : dim_(dim), track_(track), rows_(dim) {}

  void RowEchelon::reduce(SparseVector& v, SparseVector* combo) const {
    while (!v.empty()) {
      const auto& row = rows_[v.front().row];
      if (!row) break;
      Scalar c = -v.front().value;
      v        = axpy(v, c, row->vec);
      if (combo != nullptr) *combo = axpy(*combo, c, row->combo);
    }
  }

  bool RowEchelon::insert(const SparseVector& v) {
    if (!v.empty() && v.back().row >= dim_) throw DimensionError("RowEchelon: vector too long");
    SparseVector vec = v;
    SparseVector combo;
    if (track_) combo.push_back({inserted_, Scalar(1)});
    ++inserted_;
    reduce(vec, track_ ? &combo : nullptr);
    if (vec.empty()) return false;
    Scalar inv = Scalar(1) / vec.front().value;
    if (!inv.is_one()) {
      scale_in_place(vec, inv);
      scale_in_place(combo, inv);
    }
    std::size_t p = vec.front().row;
    rows_[p]      = Row{std::move(vec), std::move(combo)};
    ++rank_;
    return true;
  }

  std::optional<SparseVector> RowEchelon::express(const SparseVector& v) const {
    if (!track_) throw Error("RowEchelon::express requires tracking");
    SparseVector vec = v;
    SparseVector combo;
    reduce(vec, &combo);
    if (!vec.empty()) return std::nullopt;
    scale_in_place(combo, Scalar(-1));
    return combo;
  }

  bool RowEchelon::contains(const SparseVector& v) const {
    SparseVector vec = v;
    reduce(vec, nullptr);
    return vec.empty();
  }

  std::vector<std::size_t> RowEchelon::pivots() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (rows_[i]) out.push_back(i);
    }
    return out;
  }

  std::vector<SparseVector> RowEchelon::reduced_basis() const {
    auto                      piv = pivots();
    std::vector<SparseVector> rows;
    rows.reserve(piv.size());
    for (auto p : piv) rows.push_back(rows_[p]->vec);
    for (std::size_t k = piv.size(); k-- > 0;) {
      std::size_t p = piv[k];
      for (std::size_t q = 0; q < k; ++q) {
        const Scalar* a = find(rows[q], p);
        if (a == nullptr) continue;
        Scalar c = -*a;
        rows[q]  = axpy(rows[q], c, rows[k]);
      }
    }
    return rows;
  }

  std::vector<Vector> rref_basis(const std::vector<Vector>& vectors, std::size_t dim) {
    RowEchelon e(dim);
    for (const auto& v : vectors) {
      if (v.size() != dim) throw DimensionError("rref_basis: vector length mismatch");
      e.insert(v);
    }
    std::vector<Vector> out;
    for (const auto& r : e.reduced_basis()) out.push_back(to_dense(r, dim));
    return out;
  }

  std::vector<Vector> kernel_basis(const Matrix& m) {
    const std::size_t n = m.cols();
    RowEchelon        e(n);
    Matrix            t = m.transpose();
    for (std::size_t i = 0; i < t.cols(); ++i) e.insert(t.column(i));
    auto                     rows = e.reduced_basis();
    std::vector<char>        is_pivot(n, 0);
    for (const auto& r : rows) is_pivot[r.front().row] = 1;
    std::vector<std::size_t> slot(n, 0);
    std::vector<SparseVector> basis;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_pivot[j]) continue;
      slot[j] = basis.size();
      basis.push_back({});
    }
    for (const auto& r : rows) {
      std::size_t p = r.front().row;
      for (std::size_t k = 1; k < r.size(); ++k) {
        basis[slot[r[k].row]].push_back({p, -r[k].value});
      }
    }
    std::vector<Vector> dense;
    dense.reserve(basis.size());
    std::size_t b = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_pivot[j]) continue;
      auto& v = basis[b++];
      v.push_back({j, Scalar(1)});
      std::sort(v.begin(), v.end(), [](const Entry& x, const Entry& y) { return x.row < y.row; });
      dense.push_back(to_dense(v, n));
    }
    return rref_basis(dense, n);
  }

  std::size_t image_rank(const Matrix& m) {
    RowEchelon e(m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) e.insert(m.column(j));
    return e.rank();
  }

  std::vector<Vector> image_basis(const Matrix& m) {
    RowEchelon e(m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) e.insert(m.column(j));
    std::vector<Vector> out;
    for (const auto& r : e.reduced_basis()) out.push_back(to_dense(r, m.rows()));
    return out;
  }

  SolveResult solve(const Matrix& m, const Vector& rhs) {
    if (rhs.size() != m.rows()) throw DimensionError("solve: right-hand side length mismatch");
    const std::size_t n = m.cols();
    RowEchelon        e(n + 1, true);
    Matrix            t = m.transpose();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      SparseVector row = t.column(i);
      if (!rhs[i].is_zero()) row.push_back({n, rhs[i]});
      e.insert(row);
    }
    SolveResult result;
    if (const auto* bad = e.row_at(n)) {
      result.certificate = to_dense(bad->combo, m.rows());
      return result;
    }
    Vector x(n);
    for (const auto& r : e.reduced_basis()) {
      if (r.back().row == n) x[r.front().row] = r.back().value;
    }
    result.solution = std::move(x);
    return result;
  }

  bool verify_inconsistency(const Matrix& m, const Vector& rhs, const Vector& y) {
    if (y.size() != m.rows() || rhs.size() != m.rows()) return false;
    return is_zero(m.pull_back(y)) && !dot(y, rhs).is_zero();
  }

  ColumnSpace::ColumnSpace(const Matrix& m, bool track) : cols_(m.cols()), echelon_(m.rows(), track) {
    for (std::size_t j = 0; j < m.cols(); ++j) echelon_.insert(m.column(j));
  }

  bool ColumnSpace::contains(const Vector& v) const { return echelon_.contains(to_sparse(v)); }

  std::optional<Vector> ColumnSpace::preimage(const Vector& v) const {
    auto combo = echelon_.express(to_sparse(v));
    if (!combo) return std::nullopt;
    return to_dense(*combo, cols_);
  }

  Scalar hermitian_form(const Matrix& m, const Vector& v) {
    Vector mv = m.apply(v);
    Scalar s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) s.add_product(v[i].conj(), mv[i]);
    }
    return s;
  }

  PsdResult psd_check(const Matrix& m) {
    if (m.rows() != m.cols()) throw StructureError("psd_check: matrix is not square");
    if (m != m.conjugate_transpose()) throw StructureError("psd_check: matrix is not Hermitian");
    const std::size_t n = m.rows();
    auto              a = m.to_dense_rows();
    std::vector<char> active(n, 1);
    PsdResult         result;

    // Lifts a witness w on the active block to the full space through the
    // Schur complement: v_P = -M_PP^{-1} M_PR w, v_R = w.
    auto lift = [&](const Vector& w) {
      const auto& piv = result.pivots;
      Vector      v   = w;
      if (piv.empty()) return v;
      Matrix mpp(piv.size(), piv.size());
      for (std::size_t i = 0; i < piv.size(); ++i) {
        for (std::size_t j = 0; j < piv.size(); ++j) mpp.set(i, j, m.at(piv[i], piv[j]));
      }
      Vector mw = m.apply(w);
      Vector rhs(piv.size());
      for (std::size_t i = 0; i < piv.size(); ++i) rhs[i] = -mw[piv[i]];
      auto sol = solve(mpp, rhs);
      if (!sol) throw ConsistencyError("psd_check: singular pivot block");
      for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = (*sol.solution)[i];
      return v;
    };

    for (;;) {
      std::optional<std::size_t> pos;
      for (std::size_t i = 0; i < n; ++i) {
        if (!active[i]) continue;
        int s = sgn(a[i][i].re());
        if (s < 0) {
          result.witness = lift(unit_vector(n, i));
          return result;
        }
        if (s > 0 && !pos) pos = i;
      }
      if (!pos) break;
      std::size_t p = *pos;
      result.pivots.push_back(p);
      result.pivot_values.push_back(a[p][p].re());
      active[p]    = 0;
      Scalar inv   = Scalar(1) / a[p][p];
      for (std::size_t i = 0; i < n; ++i) {
        if (!active[i] || a[i][p].is_zero()) continue;
        Scalar f = a[i][p] * inv;
        for (std::size_t j = 0; j < n; ++j) {
          if (active[j] && !a[p][j].is_zero()) a[i][j].sub_product(f, a[p][j]);
        }
      }
    }

    // Every remaining diagonal entry is zero; a psd matrix must then vanish
    // on the remaining block.
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!active[j] || a[i][j].is_zero()) continue;
        Vector w(n);
        w[i] = Scalar(1);
        w[j] = -a[i][j].conj();
        result.witness = lift(w);
        return result;
      }
    }
    result.psd = true;
    return result;
  }

}  // namespace hopfcoh
