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
 * Codiagonals and invariant means as exact linear and LP feasibility
 * problems, and the cross-checks that tie them to vanishing cohomology.
 *
 * A codiagonal is a functional F on S (x) S, stored with index a * d + b,
 * such that F delta = eps and (F (x) id)(id (x) delta) = (id (x) F)(delta (x) id).
 */

#ifndef HOPFCOH_AMENABILITY_HPP
#define HOPFCOH_AMENABILITY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfcoh/cochain.hpp"
#include "hopfcoh/linalg.hpp"
#include "hopfcoh/lp.hpp"
#include "hopfcoh/monoid.hpp"

namespace hopfcoh {

  struct CodiagonalCertificate {
    Vector functional;
    Vector counit_residual;  ///< F delta - eps, length d
    Vector module_residual;  ///< the second identity on e_p (x) e_q, index (j, p, q)
    /// Whether F(a^* b) is a positive semidefinite form on S (x) S; absent without a star.
    std::optional<bool>      positive;
    std::optional<PsdResult> gram_check;

    [[nodiscard]] bool exact() const { return is_zero(counit_residual) && is_zero(module_residual); }
  };

  /// Residuals and positivity of a candidate F. Requires a counit.
  CodiagonalCertificate check_codiagonal(const HopfStarAlgebra& h, const Vector& f);

  /// The linear system A F = b whose solutions are the codiagonals.
  Matrix codiagonal_system(const HopfStarAlgebra& h, Vector& rhs);

  struct CodiagonalSearch {
    std::optional<CodiagonalCertificate> codiagonal;
    /// y with y^T A = 0 and y^T b != 0 when the system is inconsistent.
    Vector      certificate;
    /// Dimension of the affine solution set (when nonempty).
    std::size_t solution_dim = 0;
    bool        has_counit   = false;
  };

  /// Canonical solution: free variables of the reduced system set to zero.
  CodiagonalSearch find_codiagonal(const HopfStarAlgebra& h);

  /// Matrix of F(e_i^* e_j) over the basis e_i of S (x) S.
  Matrix functional_gram(const HopfStarAlgebra& h, const Vector& f);

  struct KroneckerCodiagonal {
    CodiagonalCertificate certificate;
    Matrix                gram;  ///< [F((r_i, s_i)^{-1} (r_j, s_j))] over all pairs
    /// Gram entries are 0/1 and "equal to 1" is an equivalence relation.
    bool        block_structure = false;
    std::size_t blocks          = 0;
  };

  /// F(lambda_r (x) lambda_s) = [r = s] on the group algebra.
  KroneckerCodiagonal kronecker_codiagonal(const FiniteGroup& g);

  struct MeanCertificate {
    RationalVector weights;
    bool           normalized = false;
    bool           invariant  = false;
  };

  struct MeanSearch {
    std::optional<MeanCertificate> mean;
    RationalVector                 farkas;
    bool                           farkas_verified = false;
    /// Whether the vertex-enumeration cross-check ran and agreed.
    bool                           vertex_checked  = false;
    bool                           vertex_agrees   = false;
    std::size_t                    pivots          = 0;
  };

  /// w >= 0, sum w = 1 and sum_{m : m r = t} w_m = w_t for all r, t.
  void mean_system(const FiniteMonoid& m, RationalMatrix& a, RationalVector& b);
  bool is_invariant_mean(const FiniteMonoid& m, const RationalVector& w);

  MeanSearch find_invariant_mean(const FiniteMonoid& m);

  struct VanishingEntry {
    std::string         bicomodule;
    std::size_t         degree = 0;
    std::size_t         dim_h  = 0;
    /// Sign with which the codiagonal primitive bounded a test cocycle; absent if not attempted.
    std::optional<int>  homotopy_sign;
    std::optional<CodiagonalRoute> route;
  };

  struct CodiagonalVanishingReport {
    std::string                 algebra;
    bool                        has_counit     = false;
    bool                        has_codiagonal = false;
    std::vector<VanishingEntry> entries;
    std::vector<std::string>    failures;

    [[nodiscard]] bool passed() const { return failures.empty(); }
  };

  /**
   * With a codiagonal: H^n of the dual complex vanishes for 1 <= n < cap on
   * every catalog bicomodule with a non-degenerate side, both by rank and by
   * the codiagonal homotopy. Without a counit: H^1 of the one-sided dual
   * complex of the regular comodule is nonzero.
   */
  CodiagonalVanishingReport check_codiagonal_vanishing(const HopfPtr& h, std::size_t cap = default_degree_cap);

  struct GradedCocycleReport {
    std::string              group;
    std::size_t              cocycles     = 0;
    std::size_t              dim_h1       = 0;
    std::size_t              diagonal_zero = 0;
    std::vector<std::string> failures;

    [[nodiscard]] bool passed() const { return failures.empty(); }
  };

  /**
   * On the pair-graded bicomodule (beta(x) = x (x) lambda_s, gamma(x) =
   * lambda_t (x) x for x = x_{s,t}), every 1-cocycle a satisfies
   * a(x) = phi_t(a(x)) (lambda_t - lambda_s), and f(x) = phi_s(a(x)) solves D_0 f = a.
   */
  GradedCocycleReport check_graded_cocycles(const FiniteGroup& g);

  struct MeanCohomologyReport {
    std::string              monoid;
    std::size_t              quotient_dim       = 0;
    bool                     cocycle_verified   = false;
    bool                     mean_exists        = false;
    bool                     is_coboundary      = false;
    /// rank [D_0 | T] = rank D_0 + 1 when T is not a coboundary.
    bool                     rank_increase      = false;
    bool                     all_h1_vanish      = false;
    /// f = (eps - Phi) composed with the section, checked against D_0 f = T.
    bool                     explicit_primitive = false;
    std::vector<std::string> failures;

    [[nodiscard]] bool passed() const { return failures.empty(); }
  };

  /**
   * X = C(M) / C 1 with gamma = 1 (x) id, and the cocycle T = (id - eps 1)
   * composed with a section X -> C(M). An invariant mean exists exactly when
   * T is a coboundary, exactly when H^1 of the restricted complex vanishes on
   * every catalog right comodule. Requires an identity element.
   */
  MeanCohomologyReport check_mean_cohomology(const FiniteMonoid& m);

}  // namespace hopfcoh

#endif  // HOPFCOH_AMENABILITY_HPP
