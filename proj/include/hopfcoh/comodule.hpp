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
 * Coactions and bicomodules on finite-dimensional coefficient spaces.
 *
 * A right coaction beta: X -> X (x) S is a (dim X * dim S) x dim X matrix;
 * a left coaction gamma: X -> S (x) X is (dim S * dim X) x dim X. The
 * flattening follows the global tensor convention of matrix.hpp.
 */

#ifndef HOPFCOH_COMODULE_HPP
#define HOPFCOH_COMODULE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfcoh/hopf.hpp"

namespace hopfcoh {

  using HopfPtr = std::shared_ptr<const HopfStarAlgebra>;

  HopfPtr share(HopfStarAlgebra h);

  /// Column index where (beta (x) id) beta and (id (x) delta) beta differ.
  std::optional<std::size_t> right_coaction_defect(const HopfStarAlgebra& h, const Matrix& beta);
  /// Column index where (id (x) gamma) gamma and (delta (x) id) gamma differ.
  std::optional<std::size_t> left_coaction_defect(const HopfStarAlgebra& h, const Matrix& gamma);
  /// Column index where (id (x) beta) gamma and (gamma (x) id) beta differ.
  std::optional<std::size_t> bicomodule_defect(const HopfStarAlgebra& h, const Matrix& beta,
                                               const Matrix& gamma);

  struct Nondegeneracy {
    bool left  = false;
    bool right = false;

    [[nodiscard]] bool any() const noexcept { return left || right; }
  };

  class RightCoaction {
   public:
    /// Verifies shapes and the coaction identity; throws StructureError otherwise.
    RightCoaction(HopfPtr hopf, Matrix beta);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] const HopfStarAlgebra& algebra() const noexcept { return *hopf_; }
    [[nodiscard]] const HopfPtr& hopf() const noexcept { return hopf_; }
    [[nodiscard]] const Matrix& matrix() const noexcept { return beta_; }

   private:
    HopfPtr     hopf_;
    std::size_t dim_;
    Matrix      beta_;
  };

  class LeftCoaction {
   public:
    LeftCoaction(HopfPtr hopf, Matrix gamma);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] const HopfStarAlgebra& algebra() const noexcept { return *hopf_; }
    [[nodiscard]] const HopfPtr& hopf() const noexcept { return hopf_; }
    [[nodiscard]] const Matrix& matrix() const noexcept { return gamma_; }

   private:
    HopfPtr     hopf_;
    std::size_t dim_;
    Matrix      gamma_;
  };

  /**
   * right: span{beta(x)(1 (x) s)} = X (x) S; left: the same with s
   * multiplying the S leg from the left.
   */
  Nondegeneracy check_nondegenerate(const RightCoaction& c);
  /// Mirror image: the S leg of gamma(x) is multiplied on the left or right.
  Nondegeneracy check_nondegenerate(const LeftCoaction& c);

  class Bicomodule {
   public:
    Bicomodule(std::string label, RightCoaction beta, LeftCoaction gamma);

    [[nodiscard]] const std::string& label() const noexcept { return label_; }
    [[nodiscard]] std::size_t dim() const noexcept { return beta_.dim(); }
    [[nodiscard]] const HopfStarAlgebra& algebra() const noexcept { return beta_.algebra(); }
    [[nodiscard]] const HopfPtr& hopf() const noexcept { return beta_.hopf(); }
    [[nodiscard]] const RightCoaction& right() const noexcept { return beta_; }
    [[nodiscard]] const LeftCoaction& left() const noexcept { return gamma_; }
    [[nodiscard]] const Matrix& beta() const noexcept { return beta_.matrix(); }
    [[nodiscard]] const Matrix& gamma() const noexcept { return gamma_.matrix(); }
    [[nodiscard]] const Nondegeneracy& beta_nondegenerate() const noexcept { return beta_nd_; }
    [[nodiscard]] const Nondegeneracy& gamma_nondegenerate() const noexcept { return gamma_nd_; }
    /// beta or gamma is left or right non-degenerate.
    [[nodiscard]] bool has_nondegenerate_side() const noexcept {
      return beta_nd_.any() || gamma_nd_.any();
    }

   private:
    std::string   label_;
    RightCoaction beta_;
    LeftCoaction  gamma_;
    Nondegeneracy beta_nd_;
    Nondegeneracy gamma_nd_;
  };

  RightCoaction trivial_right_coaction(const HopfPtr& hopf, std::size_t dim);  ///< x (x) 1
  LeftCoaction  trivial_left_coaction(const HopfPtr& hopf, std::size_t dim);   ///< 1 (x) x
  RightCoaction zero_right_coaction(const HopfPtr& hopf, std::size_t dim);
  LeftCoaction  zero_left_coaction(const HopfPtr& hopf, std::size_t dim);
  RightCoaction regular_right_coaction(const HopfPtr& hopf);  ///< (S, delta)
  LeftCoaction  regular_left_coaction(const HopfPtr& hopf);

  /**
   * X/Y for a subspace Y, using the pivot-column complement of RREF(Y).
   * `quotient` is the projection q: X -> X/Y and `section` the inclusion of
   * the complement, so q * section = I.
   */
  template <class Coaction>
  struct Quotient {
    Coaction coaction;
    Matrix   quotient;
    Matrix   section;
  };

  /// Throws StructureError naming a basis vector y of Y with (q (x) id) beta(y) != 0.
  Quotient<RightCoaction> quotient_comodule(const RightCoaction& c, const std::vector<Vector>& y);
  Quotient<LeftCoaction>  quotient_comodule(const LeftCoaction& c, const std::vector<Vector>& y);

  /// The projection q and its section for the pivot complement of RREF(Y).
  std::pair<Matrix, Matrix> pivot_complement(std::size_t dim, const std::vector<Vector>& y);

  /**
   * Grading of a comodule over a group algebra: component r is the image
   * of (id (x) phi_r) beta, where phi_r(lambda_t) = [r = t]. Each returned
   * basis vector is checked to satisfy beta(x) = x (x) lambda_r.
   */
  std::vector<std::vector<Vector>> grade_decomposition(const RightCoaction& c);
  /// Same for gamma(x) = lambda_r (x) x.
  std::vector<std::vector<Vector>> grade_decomposition(const LeftCoaction& c);

  /// The left coaction on X* induced by beta, and vice versa.
  LeftCoaction  dual_coaction(const RightCoaction& c);
  RightCoaction dual_coaction(const LeftCoaction& c);
  /// (X*, right = dual of gamma, left = dual of beta).
  Bicomodule dual_bicomodule(const Bicomodule& b);

  /**
   * Module structures of the dual algebra. For a right coaction the left
   * action is w.x = (id (x) w) beta(x), stored as dim X x (dim S * dim X).
   * For a left coaction the right action is x.w = (w (x) id) gamma(x),
   * stored as dim X x (dim X * dim S).
   */
  Matrix left_action(const RightCoaction& c);
  Matrix right_action(const LeftCoaction& c);
  /// As above but requiring a counit, so that the dual algebra is unital.
  Matrix module_from_coaction(const RightCoaction& c);
  Matrix module_from_coaction(const LeftCoaction& c);
  RightCoaction coaction_from_left_module(const HopfPtr& hopf, const Matrix& action);
  LeftCoaction  coaction_from_right_module(const HopfPtr& hopf, const Matrix& action);

  /// Column where w.(v.x) and (w.v).x differ, for the dual product w.v = (w (x) v) delta.
  std::optional<std::size_t> left_module_defect(const HopfStarAlgebra& h, const Matrix& action);
  std::optional<std::size_t> right_module_defect(const HopfStarAlgebra& h, const Matrix& action);

  /// The pair-graded bicomodule on C^{G x G}: beta(x_{s,t}) = x_{s,t} (x) l_s, gamma = l_t (x) x_{s,t}.
  Bicomodule pair_graded_bicomodule(const HopfPtr& group_algebra);

  /**
   * The built-in test corpus for an algebra: regular and one-sided
   * bicomodules, trivial ones, quotients by the unit, and for group
   * algebras the graded ones.
   */
  std::vector<Bicomodule> catalog_bicomodules(const HopfPtr& hopf);

}  // namespace hopfcoh

#endif  // HOPFCOH_COMODULE_HPP
