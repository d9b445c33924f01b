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
 * Coboundary matrices, cohomology with certified representatives, the two
 * chain-level identifications between the complexes, and the contracting
 * homotopies built from a counit, a Haar state or a codiagonal.
 *
 * Cochain spaces and their flattening:
 *   natural  C^n = X (x) S^n,         index x * d^n + s
 *   dual     C^n = Hom(X, S^n),       index x * d^n + s for the map e_x |-> e_s
 *   bar      C^n = (B^n (x) X)^*,     index s * dim X + x
 * where d = dim S and s is the flat multi-index of S^n. The coboundary D_n
 * maps C^n to C^{n+1}.
 */

#ifndef HOPFCOH_COCHAIN_HPP
#define HOPFCOH_COCHAIN_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfcoh/comodule.hpp"

namespace hopfcoh {

  inline constexpr std::size_t default_degree_cap = 3;

  enum class ComplexKind { natural, dual, bar, restricted };

  const char* to_string(ComplexKind k);

  /// D_n may be built when n + 1 <= cap. Throws DegreeCapError otherwise.
  void check_degree_cap(std::size_t n, std::size_t cap);

  Matrix natural_coboundary(const Bicomodule& b, std::size_t n, std::size_t cap = default_degree_cap);
  Matrix dual_coboundary(const Bicomodule& b, std::size_t n, std::size_t cap = default_degree_cap);

  /// Raw-matrix form of the dual coboundary, for coactions that do not form a bicomodule.
  Matrix dual_coboundary(std::size_t d, const Matrix& comult, const Matrix& beta, const Matrix& gamma,
                         std::size_t n);

  /**
   * d_n: B^n (x) V -> B^{n-1} (x) V for n >= 1, where `product` is the
   * product of B (dim B x dim B^2), `left` the left action (dim V x dim B
   * dim V) and `right` the right action (dim V x dim V dim B).
   */
  Matrix bar_boundary(const Matrix& product, const Matrix& left, const Matrix& right, std::size_t n);

  /// d_{n+1}^T for the dual algebra acting on X through the two coactions.
  Matrix bar_coboundary(const Bicomodule& b, std::size_t n, std::size_t cap = default_degree_cap);

  /// (X, beta, 1 (x) id), the input of the restricted complex.
  Bicomodule with_trivial_left(const Bicomodule& b);
  /// (X, beta, 0), the input of the one-sided complexes.
  Bicomodule with_zero_left(const Bicomodule& b);

  Matrix coboundary(const Bicomodule& b, ComplexKind kind, std::size_t n,
                    std::size_t cap = default_degree_cap);

  struct CochainComplex {
    ComplexKind              kind = ComplexKind::natural;
    std::vector<std::size_t> dims;        ///< dims[n] = dim C^n
    std::vector<Matrix>      boundaries;  ///< boundaries[n] = D_n

    /// Largest n with D_{n+1} D_n built and exactly zero; throws ConsistencyError otherwise.
    void verify_chain_property() const;
  };

  /// D_0, ..., D_top.
  CochainComplex build_complex(const Bicomodule& b, ComplexKind kind, std::size_t top,
                               std::size_t cap = default_degree_cap);

  struct CohomologyResult {
    std::size_t         degree         = 0;
    std::size_t         dim_cochains   = 0;
    std::size_t         dim_kernel     = 0;
    std::size_t         dim_image_prev = 0;
    std::size_t         dim_h          = 0;
    /// Cocycles whose classes form a basis of H^n; canonical for a given complex.
    std::vector<Vector> representatives;
    /// Kernel basis vectors shown to be coboundaries by an explicit, verified preimage.
    std::size_t         certified_coboundaries = 0;
  };

  /**
   * H^n = Ker D_n / Im D_{n-1}. `prev` is D_{n-1} (absent for n = 0).
   * Representatives are the kernel basis vectors (in RREF order) that are
   * independent modulo the image; each is checked to be a cocycle and the
   * augmented rank is checked to grow by one per representative.
   */
  CohomologyResult cohomology(const Matrix* prev, const Matrix& next, std::size_t degree);
  CohomologyResult cohomology(const CochainComplex& cx, std::size_t n);

  /// x with D x = v, or nothing when v is not a coboundary.
  std::optional<Vector> coboundary_preimage(const Matrix& d, const Vector& v);

  struct IdentificationResult {
    bool holds = false;
    /// (row, column) of the first entry where the two matrices differ.
    std::optional<std::pair<std::size_t, std::size_t>> mismatch;
    std::size_t dim_h_left  = 0;
    std::size_t dim_h_right = 0;
  };

  /**
   * Compares the natural complex of the dual bicomodule (X*, dual gamma,
   * dual beta) with the dual complex of X: the coboundaries must satisfy
   * D^nat_n = (-1)^{n+1} D^dual_n entrywise, and H^n dims must agree.
   */
  IdentificationResult identify_dual_natural(const Bicomodule& b, std::size_t n,
                                             std::size_t cap = default_degree_cap);

  /**
   * Compares the dual complex with the bar cochain complex of the dual
   * algebra under f_T(w_1 (x) ... (x) w_n (x) x) = T(x)(w_1 (x) ... (x) w_n):
   * P_{n+1} D^dual_n = d_{n+1}^T P_n, with P_n the reshuffle (x, s) -> (s, x).
   */
  IdentificationResult identify_dual_bar(const Bicomodule& b, std::size_t n,
                                         std::size_t cap = default_degree_cap);

  /// The reshuffle X (x) S^n -> S^n (x) X used by identify_dual_bar.
  Matrix cochain_reshuffle(std::size_t dim_x, std::size_t d, std::size_t n);

  /// Hom(X, S^n) cochain as a d^n x dim X matrix, and back.
  Matrix cochain_as_map(const Vector& t, std::size_t dim_x, std::size_t dim_target);
  Vector map_as_cochain(const Matrix& m);

  struct Primitive {
    Vector primitive;
    /// D_{n-1}(primitive) = sign * cocycle, verified exactly.
    int    sign = 1;
  };

  /// Dual one-sided complex (gamma = 0): F = (eps (x) id^{n-1}) T, T = (-1)^{n-1} D_{n-1} F.
  Primitive homotopy_from_counit(const Bicomodule& b, std::size_t n, const Vector& t);
  /// Natural one-sided complex: m = D_{n-1}((-1)^{n-1} (id (x) id^{n-1} (x) eps) m).
  Primitive natural_homotopy_from_counit(const Bicomodule& b, std::size_t n, const Vector& m);
  /// Dual complex with gamma = 1 (x) id: F = (phi (x) id^{n-1}) T, T = (-1)^n D_{n-1} F.
  Primitive homotopy_from_haar(const Bicomodule& b, std::size_t n, const Vector& t, const Vector& phi);

  enum class CodiagonalRoute { beta, gamma };

  /**
   * beta route: R = (id^{n-1} (x) F)(T (x) id) beta, with D_{n-1} R = T.
   * gamma route: R = (F (x) id^{n-1})(id (x) T) gamma, with D_{n-1} R = (-1)^n T.
   * F is a functional on S (x) S.
   */
  Primitive homotopy_from_codiagonal(const Bicomodule& b, std::size_t n, const Vector& t,
                                     const Vector& f, CodiagonalRoute route);

}  // namespace hopfcoh

#endif  // HOPFCOH_COCHAIN_HPP
