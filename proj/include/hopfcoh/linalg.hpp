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

/**
 * @file
 *
 * Exact elimination: ranks, canonical kernels, linear solves with
 * infeasibility certificates, span membership with preimages, and an exact
 * positive-semidefiniteness test.
 */

#ifndef HOPFCOH_LINALG_HPP
#define HOPFCOH_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "hopfcoh/matrix.hpp"

namespace hopfcoh {

  /// Sorted (index, value) pairs with no zero values.
  using SparseVector = SparseColumn;

  SparseVector to_sparse(const Vector& v);
  Vector       to_dense(const SparseVector& v, std::size_t dim);

  /**
   * Incremental row echelon form.
   *
   * Vectors are inserted one at a time and reduced against the stored
   * pivots. With tracking enabled every stored row remembers how it was
   * combined from the inserted vectors, which is what produces preimages
   * and certificates.
   */
  class RowEchelon {
   public:
    explicit RowEchelon(std::size_t dim, bool track = false);

    /// Returns true if v was independent of everything inserted so far.
    bool insert(const SparseVector& v);
    bool insert(const Vector& v) { return insert(to_sparse(v)); }

    /**
     * If v lies in the span, returns coefficients c with
     * v = sum_i c_i * (i-th inserted vector). Requires tracking.
     */
    [[nodiscard]] std::optional<SparseVector> express(const SparseVector& v) const;
    [[nodiscard]] bool contains(const SparseVector& v) const;

    [[nodiscard]] std::size_t rank() const noexcept { return rank_; }
    [[nodiscard]] std::size_t inserted() const noexcept { return inserted_; }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

    /// Fully reduced, unit-pivot basis of the span, ordered by pivot.
    [[nodiscard]] std::vector<SparseVector> reduced_basis() const;
    /// Pivot columns in increasing order.
    [[nodiscard]] std::vector<std::size_t> pivots() const;

    struct Row {
      SparseVector vec;
      SparseVector combo;
    };

    /// Stored row whose pivot is `col`, if any.
    [[nodiscard]] const Row* row_at(std::size_t col) const {
      return rows_[col] ? &*rows_[col] : nullptr;
    }

   private:
    // Reduces v (and its combination) at leading positions until the
    // leading index has no pivot row or v vanishes.
    void reduce(SparseVector& v, SparseVector* combo) const;

    std::size_t                     dim_;
    bool                            track_;
    std::size_t                     rank_     = 0;
    std::size_t                     inserted_ = 0;
    std::vector<std::optional<Row>> rows_;
  };

  /// Canonical RREF basis of the span of the given vectors.
  std::vector<Vector> rref_basis(const std::vector<Vector>& vectors, std::size_t dim);

  /// Basis of {v : m v = 0}, in reduced row echelon form.
  std::vector<Vector> kernel_basis(const Matrix& m);

  std::size_t image_rank(const Matrix& m);

  /// Basis of the column space of m, in reduced row echelon form.
  std::vector<Vector> image_basis(const Matrix& m);

  struct SolveResult {
    /// Particular solution with all free variables set to zero.
    std::optional<Vector> solution;
    /// When no solution exists: y with y^T m = 0 and y^T rhs != 0.
    Vector certificate;

    explicit operator bool() const noexcept { return solution.has_value(); }
  };

  SolveResult solve(const Matrix& m, const Vector& rhs);

  /// Checks a certificate from solve() independently.
  bool verify_inconsistency(const Matrix& m, const Vector& rhs, const Vector& y);

  /**
   * Column span of a fixed matrix, prepared once for many membership
   * queries. preimage(v) returns x with m x = v when v is in the span.
   */
  class ColumnSpace {
   public:
    explicit ColumnSpace(const Matrix& m, bool track = true);

    [[nodiscard]] std::size_t rank() const noexcept { return echelon_.rank(); }
    [[nodiscard]] bool contains(const Vector& v) const;
    [[nodiscard]] std::optional<Vector> preimage(const Vector& v) const;

   private:
    std::size_t cols_;
    RowEchelon  echelon_;
  };

  struct PsdResult {
    bool psd = false;
    /// Pivot order used by the symmetric elimination.
    std::vector<std::size_t> pivots;
    /// The corresponding positive pivot values.
    std::vector<Rational> pivot_values;
    /// When not psd: v with v* m v < 0.
    Vector witness;
  };

  /// Exact LDL* with diagonal pivoting. Throws StructureError unless m is Hermitian.
  PsdResult psd_check(const Matrix& m);

  /// v* m v
  Scalar hermitian_form(const Matrix& m, const Vector& v);

}  // namespace hopfcoh

#endif  // HOPFCOH_LINALG_HPP
