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
 * Exact feasibility for {w : A w = b, w >= 0} over the rationals.
 */

#ifndef HOPFCOH_LP_HPP
#define HOPFCOH_LP_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "hopfcoh/matrix.hpp"

namespace hopfcoh {

  using RationalVector = std::vector<Rational>;
  using RationalMatrix = std::vector<RationalVector>;  // row-major

  struct FeasibilityResult {
    bool           feasible = false;
    /// A feasible point when feasible (a vertex of the polytope).
    RationalVector point;
    /// Farkas certificate when infeasible: A^T y >= 0 and b^T y < 0.
    RationalVector certificate;
    std::size_t    pivots = 0;
  };

  /// Phase-I simplex with Bland's rule; the answer is exact and always terminates.
  FeasibilityResult simplex_feasibility(const RationalMatrix& a, const RationalVector& b);

  /// Searches all basic solutions. Exponential; meant as a cross-check at small sizes.
  std::optional<RationalVector> vertex_search(const RationalMatrix& a, const RationalVector& b);

  bool verify_feasible_point(const RationalMatrix& a, const RationalVector& b, const RationalVector& w);
  bool verify_farkas(const RationalMatrix& a, const RationalVector& b, const RationalVector& y);

  /// Rejects matrices with non-real entries.
  RationalMatrix to_rational(const Matrix& m);

}  // namespace hopfcoh

#endif  // HOPFCOH_LP_HPP
