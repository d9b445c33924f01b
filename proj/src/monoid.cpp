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

#include "hopfcoh/monoid.hpp"

#include <algorithm>
#include <array>
#include <charconv>

#include "hopfcoh/error.hpp"

namespace hopfcoh {

  FiniteMonoid::FiniteMonoid(std::string name, CayleyTable table, std::vector<std::string> labels)
      : name_(std::move(name)), table_(std::move(table)), labels_(std::move(labels)) {
    const std::size_t n = table_.size();
    if (n == 0) throw StructureError(name_ + ": empty Cayley table");
    for (std::size_t a = 0; a < n; ++a) {
      if (table_[a].size() != n) throw StructureError(name_ + ": Cayley table is not square");
      for (auto c : table_[a]) {
        if (c >= n) throw StructureError(name_ + ": Cayley table entry out of range");
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
            throw StructureError(name_ + ": table is not associative at (" + std::to_string(a) +
                                 ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
          }
        }
      }
    }
    if (labels_.empty()) {
      for (std::size_t a = 0; a < n; ++a) labels_.push_back(std::to_string(a));
    }
    if (labels_.size() != n) throw StructureError(name_ + ": wrong number of element labels");

    auto is_identity = [&](std::size_t e) {
      for (std::size_t a = 0; a < n; ++a) {
        if (table_[e][a] != a || table_[a][e] != a) return false;
      }
      return true;
    };
    has_identity_ = is_identity(0);
    if (!has_identity_) {
      for (std::size_t e = 1; e < n; ++e) {
        if (is_identity(e)) {
          throw StructureError(name_ + ": identity element must have index 0, found " +
                               std::to_string(e));
        }
      }
      return;
    }
    std::vector<std::size_t> inv(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (table_[a][b] == 0 && table_[b][a] == 0) inv[a] = b;
      }
      if (inv[a] == n) return;
    }
    inverse_ = std::move(inv);
  }

  const std::vector<std::size_t>& FiniteMonoid::inverse() const {
    if (!inverse_) throw StructureError(name_ + " is not a group");
    return *inverse_;
  }

  FiniteGroup::FiniteGroup(FiniteMonoid m) : FiniteMonoid(std::move(m)) {
    if (!is_group()) throw StructureError(name() + " is not a group");
  }

  FiniteGroup cyclic_group(std::size_t n) {
    if (n == 0) throw StructureError("cyclic group of order 0");
    CayleyTable table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    }
    return FiniteGroup("Z" + std::to_string(n), std::move(table));
  }

  FiniteGroup klein_four() {
    CayleyTable table(4, std::vector<std::size_t>(4));
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = 0; b < 4; ++b) table[a][b] = a ^ b;
    }
    return FiniteGroup("Z2xZ2", std::move(table), {"00", "01", "10", "11"});
  }

  FiniteGroup symmetric_group3() {
    // Permutations of {0,1,2} in lexicographic order; (st)(i) = s(t(i)).
    std::vector<std::array<std::size_t, 3>> perms;
    std::array<std::size_t, 3>              p{0, 1, 2};
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    CayleyTable              table(6, std::vector<std::size_t>(6));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < 6; ++a) {
      labels.push_back(std::to_string(perms[a][0]) + std::to_string(perms[a][1]) +
                       std::to_string(perms[a][2]));
      for (std::size_t b = 0; b < 6; ++b) {
        std::array<std::size_t, 3> c{};
        for (std::size_t i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
        table[a][b] = static_cast<std::size_t>(
            std::find(perms.begin(), perms.end(), c) - perms.begin());
      }
    }
    return FiniteGroup("S3", std::move(table), std::move(labels));
  }

  FiniteMonoid builtin_monoid(std::string_view name) {
    if (name == "trivial") return FiniteMonoid("trivial", {{0}}, {"e"});
    if (name == "Z2xZ2") return klein_four();
    if (name == "S3") return symmetric_group3();
    if (name == "left_zero2") return FiniteMonoid("left_zero2", {{0, 0}, {1, 1}}, {"x", "y"});
    if (name == "right_zero_identity3") {
      return FiniteMonoid("right_zero_identity3", {{0, 1, 2}, {1, 1, 2}, {2, 1, 2}}, {"e", "a", "b"});
    }
    if (name == "mult01") return FiniteMonoid("mult01", {{0, 1}, {1, 1}}, {"1", "0"});
    if (name.size() > 1 && name.front() == 'Z') {
      std::size_t n   = 0;
      auto        res = std::from_chars(name.data() + 1, name.data() + name.size(), n);
      if (res.ec == std::errc() && res.ptr == name.data() + name.size() && n >= 1 && n <= 64) {
        return cyclic_group(n);
      }
    }
    throw ParseError("unknown monoid '" + std::string(name) + "'");
  }

  FiniteGroup builtin_group(std::string_view name) { return FiniteGroup(builtin_monoid(name)); }

  std::vector<std::string> catalog_monoid_names() {
    return {"trivial", "Z2", "Z3", "Z2xZ2", "S3", "left_zero2", "right_zero_identity3", "mult01"};
  }

  std::vector<std::string> catalog_group_names() { return {"trivial", "Z2", "Z3", "Z2xZ2", "S3"}; }

}  // namespace hopfcoh
