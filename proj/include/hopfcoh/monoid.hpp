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
 * Finite monoids, semigroups and groups given by Cayley tables.
 */

#ifndef HOPFCOH_MONOID_HPP
#define HOPFCOH_MONOID_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hopfcoh {

  using CayleyTable = std::vector<std::vector<std::size_t>>;

  /**
   * A finite semigroup, optionally with identity.
   *
   * If an identity exists it must be element 0. The constructor validates
   * the table (square, in range, associative) and throws StructureError
   * otherwise.
   */
  class FiniteMonoid {
   public:
    FiniteMonoid(std::string name, CayleyTable table, std::vector<std::string> labels = {});

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] std::size_t order() const noexcept { return table_.size(); }
    [[nodiscard]] std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    [[nodiscard]] const CayleyTable& table() const noexcept { return table_; }
    [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
    [[nodiscard]] bool has_identity() const noexcept { return has_identity_; }
    [[nodiscard]] bool is_group() const noexcept { return inverse_.has_value(); }
    /// Inverse permutation; throws StructureError unless this is a group.
    [[nodiscard]] const std::vector<std::size_t>& inverse() const;

   private:
    std::string                             name_;
    CayleyTable                             table_;
    std::vector<std::string>                labels_;
    bool                                    has_identity_ = false;
    std::optional<std::vector<std::size_t>> inverse_;
  };

  /// A monoid that is known to be a group. Throws StructureError otherwise.
  class FiniteGroup : public FiniteMonoid {
   public:
    explicit FiniteGroup(FiniteMonoid m);
    FiniteGroup(std::string name, CayleyTable table, std::vector<std::string> labels = {})
        : FiniteGroup(FiniteMonoid(std::move(name), std::move(table), std::move(labels))) {}
  };

  FiniteGroup cyclic_group(std::size_t n);
  FiniteGroup symmetric_group3();
  FiniteGroup klein_four();

  /**
   * Built-in monoids by name: trivial, Z<n>, Z2xZ2, S3, left_zero2,
   * right_zero_identity3, mult01. Throws ParseError for unknown names.
   */
  FiniteMonoid builtin_monoid(std::string_view name);
  FiniteGroup  builtin_group(std::string_view name);

  /// The names used by the full catalog, in catalog order.
  std::vector<std::string> catalog_monoid_names();
  std::vector<std::string> catalog_group_names();

}  // namespace hopfcoh

#endif  // HOPFCOH_MONOID_HPP
