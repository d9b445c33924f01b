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
 * Finite-dimensional Hopf *-algebras as structure constants.
 *
 * With basis e_0, ..., e_{d-1}:
 *   mult   is d x d^2, column (a, b) holds e_a e_b;
 *   comult is d^2 x d, column i holds delta(e_i);
 *   counit is a functional (length-d vector);
 *   star   is the matrix M with (sum c_i e_i)^* = sum conj(c_i) M e_i.
 */

#ifndef HOPFCOH_HOPF_HPP
#define HOPFCOH_HOPF_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfcoh/linalg.hpp"
#include "hopfcoh/matrix.hpp"
#include "hopfcoh/monoid.hpp"

namespace hopfcoh {

  enum class AlgebraFamily { function, group, dual, custom };

  const char* to_string(AlgebraFamily f);

  struct HopfStarAlgebra {
    std::string               name;
    std::size_t               dim = 0;
    Matrix                    mult;
    std::optional<Vector>     unit;
    Matrix                    comult;
    std::optional<Vector>     counit;
    /// Absent for duals: without an antipode there is no canonical involution.
    std::optional<Matrix>     star;
    std::vector<std::string>  labels;
    AlgebraFamily             family = AlgebraFamily::custom;
    /// The monoid a function or group algebra was built from.
    std::optional<FiniteMonoid> source;

    /// Throws StructureError when there is no unit.
    [[nodiscard]] const Vector& unit_vector() const;
    [[nodiscard]] const Vector& counit_vector() const;

    /// Multiplication on S (x) S: (a (x) b)(c (x) d) = ac (x) bd.
    [[nodiscard]] Matrix tensor_square_mult() const;
    /// x |-> s x and x |-> x s as d x d matrices.
    [[nodiscard]] Matrix left_mult(std::size_t s) const;
    [[nodiscard]] Matrix right_mult(std::size_t s) const;
  };

  /// Checks shapes only; throws DimensionError on mismatch.
  void validate_shapes(const HopfStarAlgebra& h);

  struct AxiomCheck {
    std::string                name;
    bool                       passed = true;
    bool                       applicable = true;
    /// Basis index of the input (flattened) where the two sides differ.
    std::optional<std::size_t> witness;
    std::string                detail;
  };

  struct AxiomReport {
    std::vector<AxiomCheck> checks;

    [[nodiscard]] bool all_passed() const;
    [[nodiscard]] const AxiomCheck* find(const std::string& name) const;
  };

  AxiomReport check_axioms(const HopfStarAlgebra& h);

  struct Saturation {
    bool        left  = false;
    bool        right = false;
    std::size_t left_rank  = 0;
    std::size_t right_rank = 0;
  };

  Saturation check_saturated(const HopfStarAlgebra& h);

  HopfStarAlgebra function_algebra(const FiniteMonoid& m);
  HopfStarAlgebra group_algebra(const FiniteGroup& g);
  /// The dual algebra: product comult^T, coproduct mult^T. Requires a counit.
  HopfStarAlgebra dual_hopf(const HopfStarAlgebra& h);

  /**
   * Builds an algebra from a catalog name such as "group_algebra:S3" or
   * "function_algebra:left_zero2". Throws ParseError on unknown names.
   */
  HopfStarAlgebra builtin_algebra(const std::string& name);
  std::vector<std::string> catalog_algebra_names();

  struct CounitResult {
    std::optional<Vector> counit;
    /// For an inconsistent left counit system: y with y^T A = 0, y^T b != 0.
    Vector certificate;
    bool   unique = false;
    /// The left solution also satisfies (id (x) eps) delta = id.
    bool   two_sided = false;
  };

  /// Solves (eps (x) id) delta = id and then tests the right counit law.
  CounitResult counit_find(const HopfStarAlgebra& h);

  enum class Positivity { positive, not_positive, unknown };

  const char* to_string(Positivity p);

  struct HaarResult {
    std::optional<Vector> state;
    Vector                certificate;
    bool                  unique = false;
    Positivity            positivity = Positivity::unknown;
    /// Set when the invariance system is solvable but no positive solution exists.
    std::optional<Vector> non_positive_solution;
  };

  /// Left Haar state: (phi (x) id) delta = phi(.) 1, phi(1) = 1, phi positive.
  HaarResult haar_state(const HopfStarAlgebra& h);

  /// (eps (x) id) delta - id and (id (x) eps) delta - id both vanish.
  bool is_counit(const HopfStarAlgebra& h, const Vector& eps);

}  // namespace hopfcoh

#endif  // HOPFCOH_HOPF_HPP
