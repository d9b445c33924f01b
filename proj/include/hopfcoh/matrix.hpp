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
 * Exact matrices over the Gaussian rationals and the tensor-index
 * conventions used everywhere in the library.
 *
 * Tensor convention: the flat index of e_{i1} (x) ... (x) e_{ik} in a space
 * with factor dimensions (d1, ..., dk) is the mixed-radix number
 * i1*d2*...*dk + ... + ik, i.e. the first factor is most significant. kron()
 * follows the same convention, so kron(a, b)(x (x) y) = a(x) (x) b(y).
 *
 * A linear map U -> V is a dim(V) x dim(U) matrix acting on column vectors.
 * A functional on U is stored as a Vector of length dim(U).
 */

#ifndef HOPFCOH_MATRIX_HPP
#define HOPFCOH_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hopfcoh/scalar.hpp"

namespace hopfcoh {

  using Vector = std::vector<Scalar>;

  struct Entry {
    std::size_t row;
    Scalar      value;
  };

  using SparseColumn = std::vector<Entry>;

  /**
   * Exact matrix with column-compressed storage.
   *
   * Only nonzero entries are stored; each column is sorted by row. All
   * operations return new values, so a Matrix can be shared freely
   * between threads once built.
   */
  class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
    /// Throws DimensionError when rows have different lengths.
    static Matrix from_rows(std::size_t cols, const std::vector<std::vector<Scalar>>& rows);
    /// Columns may be unsorted and contain repeated rows; repeats are summed.
    static Matrix from_columns(std::size_t rows, std::vector<SparseColumn> cols);
    static Matrix from_column_vectors(std::size_t rows, const std::vector<Vector>& cols);
    static Matrix row_vector(const Vector& v);
    static Matrix column_vector(const Vector& v);
    /// Column j has a single 1 in row image[j].
    static Matrix permutation(std::size_t rows, std::span<const std::size_t> image);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_.size(); }
    [[nodiscard]] std::size_t nonzeros() const noexcept;
    [[nodiscard]] bool is_zero() const noexcept { return nonzeros() == 0; }

    [[nodiscard]] Scalar at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Scalar& value);

    [[nodiscard]] const SparseColumn& column(std::size_t j) const { return cols_.at(j); }
    [[nodiscard]] Vector column_dense(std::size_t j) const;
    [[nodiscard]] std::vector<std::vector<Scalar>> to_dense_rows() const;

    /// m * v
    [[nodiscard]] Vector apply(const Vector& v) const;
    /// v^T * m, i.e. the functional v composed with m.
    [[nodiscard]] Vector pull_back(const Vector& v) const;

    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] Matrix conjugate() const;
    [[nodiscard]] Matrix conjugate_transpose() const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(const Scalar& c);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& c) { return a *= c; }
    friend Matrix operator*(const Scalar& c, Matrix a) { return a *= c; }
    friend Matrix operator-(Matrix a) { return a *= Scalar(-1); }
    friend Matrix operator*(const Matrix& a, const Matrix& b);

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// First (row, col) in column-major order where the two matrices differ.
    [[nodiscard]] std::optional<std::pair<std::size_t, std::size_t>>
    first_difference(const Matrix& other) const;

   private:
    std::size_t               rows_ = 0;
    std::vector<SparseColumn> cols_;
  };

  Matrix kron(const Matrix& a, const Matrix& b);
  Matrix kron(std::initializer_list<Matrix> factors);

  /// Identity on the k-fold tensor power of a dim-dimensional space.
  Matrix identity_power(std::size_t dim, std::size_t k);

  std::size_t power(std::size_t base, std::size_t exp);

  /**
   * The rotation that moves the last k tensor legs in front of X back
   * behind it:
   *
   *   s_{n-k+1} (x) ... (x) s_n (x) x (x) s_1 (x) ... (x) s_{n-k}
   *      |-->  x (x) s_1 (x) ... (x) s_n.
   *
   * `dims` lists (dim X, dim s_1, ..., dim s_n). The result is a permutation
   * matrix from S^k (x) X (x) S^{n-k} to X (x) S^n. Throws DimensionError
   * unless 1 <= k <= n and dims.size() == n + 1.
   */
  Matrix rotation_sigma(std::size_t n, std::size_t k, std::span<const std::size_t> dims);

  /// The flip A (x) B -> B (x) A for factor dimensions a and b.
  Matrix swap_legs(std::size_t a, std::size_t b);

  /// Flat index of a multi-index under the global convention.
  std::size_t flat_index(std::span<const std::size_t> digits, std::span<const std::size_t> dims);
  /// Inverse of flat_index.
  std::vector<std::size_t> unflatten(std::size_t index, std::span<const std::size_t> dims);

  Scalar dot(const Vector& a, const Vector& b);
  Vector add(const Vector& a, const Vector& b);
  Vector subtract(const Vector& a, const Vector& b);
  Vector scale(const Vector& a, const Scalar& c);
  bool   is_zero(const Vector& v);
  Vector unit_vector(std::size_t dim, std::size_t index);
  Vector kron(const Vector& a, const Vector& b);

}  // namespace hopfcoh

#endif  // HOPFCOH_MATRIX_HPP
