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

#include "hopfcoh/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "hopfcoh/error.hpp"

namespace hopfcoh {

  namespace {

    // Sorts a column by row, sums duplicates and drops zeros.
    void normalize(SparseColumn& col) {
      std::stable_sort(col.begin(), col.end(),
                       [](const Entry& a, const Entry& b) { return a.row < b.row; });
      SparseColumn out;
      out.reserve(col.size());
      for (auto& e : col) {
        if (!out.empty() && out.back().row == e.row) {
          out.back().value += e.value;
        } else {
          if (!out.empty() && out.back().value.is_zero()) out.pop_back();
          out.push_back(std::move(e));
        }
      }
      if (!out.empty() && out.back().value.is_zero()) out.pop_back();
      col = std::move(out);
    }

    SparseColumn merge(const SparseColumn& a, const SparseColumn& b, bool subtract) {
      SparseColumn out;
      out.reserve(a.size() + b.size());
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].row < b[j].row)) {
          out.push_back(a[i++]);
        } else if (i == a.size() || b[j].row < a[i].row) {
          out.push_back({b[j].row, subtract ? -b[j].value : b[j].value});
          ++j;
        } else {
          Scalar v = subtract ? a[i].value - b[j].value : a[i].value + b[j].value;
          if (!v.is_zero()) out.push_back({a[i].row, std::move(v)});
          ++i;
          ++j;
        }
      }
      return out;
    }

  }  // namespace

  Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.cols_[i].push_back({i, Scalar(1)});
    return m;
  }

  Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    return from_rows(rows.empty() ? 0 : rows.front().size(), rows);
  }

  Matrix Matrix::from_rows(std::size_t cols, const std::vector<std::vector<Scalar>>& rows) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) {
        throw DimensionError("row " + std::to_string(i) + " has " +
                             std::to_string(rows[i].size()) + " entries, expected " +
                             std::to_string(cols));
      }
      for (std::size_t j = 0; j < cols; ++j) {
        if (!rows[i][j].is_zero()) m.cols_[j].push_back({i, rows[i][j]});
      }
    }
    return m;
  }

  Matrix Matrix::from_columns(std::size_t rows, std::vector<SparseColumn> cols) {
    Matrix m;
    m.rows_ = rows;
    m.cols_ = std::move(cols);
    for (auto& c : m.cols_) {
      normalize(c);
      if (!c.empty() && c.back().row >= rows) {
        throw DimensionError("column entry outside the row range");
      }
    }
    return m;
  }

  Matrix Matrix::from_column_vectors(std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw DimensionError("column vector has the wrong length");
      for (std::size_t i = 0; i < rows; ++i) {
        if (!cols[j][i].is_zero()) m.cols_[j].push_back({i, cols[j][i]});
      }
    }
    return m;
  }

  Matrix Matrix::row_vector(const Vector& v) {
    Matrix m(1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!v[j].is_zero()) m.cols_[j].push_back({0, v[j]});
    }
    return m;
  }

  Matrix Matrix::column_vector(const Vector& v) { return from_column_vectors(v.size(), {v}); }

  Matrix Matrix::permutation(std::size_t rows, std::span<const std::size_t> image) {
    Matrix m(rows, image.size());
    for (std::size_t j = 0; j < image.size(); ++j) {
      if (image[j] >= rows) throw DimensionError("permutation image out of range");
      m.cols_[j].push_back({image[j], Scalar(1)});
    }
    return m;
  }

  std::size_t Matrix::nonzeros() const noexcept {
    std::size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
  }

  Scalar Matrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_.size()) throw DimensionError("matrix index out of range");
    const auto& c  = cols_[j];
    auto        it = std::lower_bound(c.begin(), c.end(), i,
                                      [](const Entry& e, std::size_t r) { return e.row < r; });
    if (it != c.end() && it->row == i) return it->value;
    return Scalar();
  }

  void Matrix::set(std::size_t i, std::size_t j, const Scalar& value) {
    if (i >= rows_ || j >= cols_.size()) throw DimensionError("matrix index out of range");
    auto& c  = cols_[j];
    auto  it = std::lower_bound(c.begin(), c.end(), i,
                                [](const Entry& e, std::size_t r) { return e.row < r; });
    if (it != c.end() && it->row == i) {
      if (value.is_zero()) {
        c.erase(it);
      } else {
        it->value = value;
      }
    } else if (!value.is_zero()) {
      c.insert(it, {i, value});
    }
  }

  Vector Matrix::column_dense(std::size_t j) const {
    Vector v(rows_);
    for (const auto& e : cols_.at(j)) v[e.row] = e.value;
    return v;
  }

  std::vector<std::vector<Scalar>> Matrix::to_dense_rows() const {
    std::vector<std::vector<Scalar>> out(rows_, std::vector<Scalar>(cols_.size()));
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      for (const auto& e : cols_[j]) out[e.row][j] = e.value;
    }
    return out;
  }

  Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_.size()) throw DimensionError("apply: vector length mismatch");
    Vector out(rows_);
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      if (v[j].is_zero()) continue;
      for (const auto& e : cols_[j]) out[e.row].add_product(e.value, v[j]);
    }
    return out;
  }

  Vector Matrix::pull_back(const Vector& v) const {
    if (v.size() != rows_) throw DimensionError("pull_back: vector length mismatch");
    Vector out(cols_.size());
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      for (const auto& e : cols_[j]) {
        if (!v[e.row].is_zero()) out[j].add_product(v[e.row], e.value);
      }
    }
    return out;
  }

  Matrix Matrix::transpose() const {
    Matrix t(cols_.size(), rows_);
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      for (const auto& e : cols_[j]) t.cols_[e.row].push_back({j, e.value});
    }
    return t;
  }

  Matrix Matrix::conjugate() const {
    Matrix c = *this;
    for (auto& col : c.cols_) {
      for (auto& e : col) e.value = e.value.conj();
    }
    return c;
  }

  Matrix Matrix::conjugate_transpose() const { return transpose().conjugate(); }

  Matrix& Matrix::operator+=(const Matrix& other) {
    if (rows_ != other.rows_ || cols() != other.cols()) {
      throw DimensionError("matrix sum: shape mismatch");
    }
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      if (other.cols_[j].empty()) continue;
      cols_[j] = merge(cols_[j], other.cols_[j], false);
    }
    return *this;
  }

  Matrix& Matrix::operator-=(const Matrix& other) {
    if (rows_ != other.rows_ || cols() != other.cols()) {
      throw DimensionError("matrix difference: shape mismatch");
    }
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      if (other.cols_[j].empty()) continue;
      cols_[j] = merge(cols_[j], other.cols_[j], true);
    }
    return *this;
  }

  Matrix& Matrix::operator*=(const Scalar& c) {
    if (c.is_zero()) {
      for (auto& col : cols_) col.clear();
      return *this;
    }
    if (c.is_one()) return *this;
    for (auto& col : cols_) {
      for (auto& e : col) e.value *= c;
    }
    return *this;
  }

  Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
      throw DimensionError("matrix product: inner dimensions " + std::to_string(a.cols()) +
                           " and " + std::to_string(b.rows()) + " differ");
    }
    Matrix                   out(a.rows(), b.cols());
    std::vector<Scalar>      acc(a.rows());
    std::vector<char>        used(a.rows(), 0);
    std::vector<std::size_t> touched;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      touched.clear();
      for (const auto& eb : b.column(j)) {
        for (const auto& ea : a.column(eb.row)) {
          if (!used[ea.row]) {
            used[ea.row] = 1;
            touched.push_back(ea.row);
          }
          acc[ea.row].add_product(ea.value, eb.value);
        }
      }
      std::sort(touched.begin(), touched.end());
      auto& col = out.cols_[j];
      for (auto r : touched) {
        if (!acc[r].is_zero()) col.push_back({r, std::move(acc[r])});
        acc[r] = Scalar();
        used[r] = 0;
      }
    }
    return out;
  }

  bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols() != b.cols()) return false;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& ca = a.cols_[j];
      const auto& cb = b.cols_[j];
      if (ca.size() != cb.size()) return false;
      for (std::size_t k = 0; k < ca.size(); ++k) {
        if (ca[k].row != cb[k].row || ca[k].value != cb[k].value) return false;
      }
    }
    return true;
  }

  std::optional<std::pair<std::size_t, std::size_t>>
  Matrix::first_difference(const Matrix& other) const {
    if (rows_ != other.rows_ || cols() != other.cols()) {
      throw DimensionError("first_difference: shape mismatch");
    }
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      auto diff = merge(cols_[j], other.cols_[j], true);
      if (!diff.empty()) return std::make_pair(diff.front().row, j);
    }
    return std::nullopt;
  }

  Matrix kron(const Matrix& a, const Matrix& b) {
    std::vector<SparseColumn> cols(a.cols() * b.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) {
      const auto& ca = a.column(i);
      if (ca.empty()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const auto& cb  = b.column(j);
        auto&       col = cols[i * b.cols() + j];
        col.reserve(ca.size() * cb.size());
        for (const auto& ea : ca) {
          for (const auto& eb : cb) col.push_back({ea.row * b.rows() + eb.row, ea.value * eb.value});
        }
      }
    }
    return Matrix::from_columns(a.rows() * b.rows(), std::move(cols));
  }

  Matrix kron(std::initializer_list<Matrix> factors) {
    Matrix out = Matrix::identity(1);
    for (const auto& f : factors) out = kron(out, f);
    return out;
  }

  std::size_t power(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) r *= base;
    return r;
  }

  Matrix identity_power(std::size_t dim, std::size_t k) { return Matrix::identity(power(dim, k)); }

  std::size_t flat_index(std::span<const std::size_t> digits, std::span<const std::size_t> dims) {
    if (digits.size() != dims.size()) throw DimensionError("flat_index: rank mismatch");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
      if (digits[i] >= dims[i]) throw DimensionError("flat_index: digit out of range");
      idx = idx * dims[i] + digits[i];
    }
    return idx;
  }

  std::vector<std::size_t> unflatten(std::size_t index, std::span<const std::size_t> dims) {
    std::vector<std::size_t> digits(dims.size());
    for (std::size_t i = dims.size(); i-- > 0;) {
      digits[i] = index % dims[i];
      index /= dims[i];
    }
    if (index != 0) throw DimensionError("unflatten: index out of range");
    return digits;
  }

  Matrix rotation_sigma(std::size_t n, std::size_t k, std::span<const std::size_t> dims) {
    if (k < 1 || k > n) throw DimensionError("rotation_sigma requires 1 <= k <= n");
    if (dims.size() != n + 1) throw DimensionError("rotation_sigma: expected n + 1 factor dimensions");
    // Source factor order: s_{n-k+1}, ..., s_n, x, s_1, ..., s_{n-k}.
    std::vector<std::size_t> src_dims;
    for (std::size_t i = n - k + 1; i <= n; ++i) src_dims.push_back(dims[i]);
    src_dims.push_back(dims[0]);
    for (std::size_t i = 1; i <= n - k; ++i) src_dims.push_back(dims[i]);

    std::size_t total = 1;
    for (auto d : dims) total *= d;
    std::vector<std::size_t> image(total);
    std::vector<std::size_t> target(n + 1);
    for (std::size_t idx = 0; idx < total; ++idx) {
      auto src = unflatten(idx, src_dims);
      target[0] = src[k];
      for (std::size_t i = 0; i < k; ++i) target[n - k + 1 + i] = src[i];
      for (std::size_t i = 0; i < n - k; ++i) target[1 + i] = src[k + 1 + i];
      image[idx] = flat_index(target, dims);
    }
    return Matrix::permutation(total, image);
  }

  Matrix swap_legs(std::size_t a, std::size_t b) {
    std::vector<std::size_t> image(a * b);
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t j = 0; j < b; ++j) image[i * b + j] = j * a + i;
    }
    return Matrix::permutation(a * b, image);
  }

  Scalar dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
    Scalar s;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i].is_zero() && !b[i].is_zero()) s.add_product(a[i], b[i]);
    }
    return s;
  }

  Vector add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionError("add: length mismatch");
    Vector out(a);
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
  }

  Vector subtract(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw DimensionError("subtract: length mismatch");
    Vector out(a);
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
  }

  Vector scale(const Vector& a, const Scalar& c) {
    Vector out(a);
    for (auto& x : out) x *= c;
    return out;
  }

  bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
  }

  Vector unit_vector(std::size_t dim, std::size_t index) {
    if (index >= dim) throw DimensionError("unit_vector: index out of range");
    Vector v(dim);
    v[index] = Scalar(1);
    return v;
  }

  Vector kron(const Vector& a, const Vector& b) {
    Vector out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
    }
    return out;
  }

}  // namespace hopfcoh
