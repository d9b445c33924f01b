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

#include "hopfcoh/cochain.hpp"

#include <array>

#include "hopfcoh/error.hpp"
#include "hopfcoh/linalg.hpp"

namespace hopfcoh {

  namespace {

    Scalar sign_of(std::size_t k) { return Scalar(k % 2 == 0 ? 1 : -1); }

    struct Leg {
      std::size_t target;
      std::size_t leg;
      Scalar      value;
    };

    // Groups the entries of a coaction matrix by the X index of their row.
    // For beta the row is (z, u); for gamma it is (u, z).
    std::vector<std::vector<Leg>> by_x_leg(const Matrix& m, std::size_t dim_x, std::size_t d,
                                           bool x_first) {
      std::vector<std::vector<Leg>> out(dim_x);
      for (std::size_t x = 0; x < m.cols(); ++x) {
        for (const auto& e : m.column(x)) {
          std::size_t z = x_first ? e.row / d : e.row % dim_x;
          std::size_t u = x_first ? e.row % d : e.row / dim_x;
          out[z].push_back({x, u, e.value});
        }
      }
      return out;
    }

    std::size_t rank_or_zero(const Matrix* m) { return m ? image_rank(*m) : 0; }

    std::size_t dim_h(const Matrix* prev, const Matrix& next) {
      return next.cols() - image_rank(next) - rank_or_zero(prev);
    }

    Primitive certify(const Matrix& d_prev, const Vector& primitive, int sign, const Vector& cocycle) {
      Vector lhs = d_prev.apply(primitive);
      if (lhs != scale(cocycle, Scalar(sign))) {
        throw ConsistencyError("homotopy: the constructed primitive does not bound the cocycle");
      }
      return {primitive, sign};
    }

    void require_cocycle(const Matrix& d, const Vector& t) {
      if (t.size() != d.cols()) throw DimensionError("cochain has the wrong length");
      if (!is_zero(d.apply(t))) throw ConsistencyError("input is not a cocycle");
    }

  }  // namespace

  const char* to_string(ComplexKind k) {
    switch (k) {
      case ComplexKind::natural: return "natural";
      case ComplexKind::dual: return "dual";
      case ComplexKind::bar: return "bar";
      case ComplexKind::restricted: return "restricted";
    }
    return "?";
  }

  void check_degree_cap(std::size_t n, std::size_t cap) {
    if (n + 1 > cap) {
      throw DegreeCapError("coboundary D_" + std::to_string(n) + " needs tensor degree " +
                           std::to_string(n + 1) + " but the cap is " + std::to_string(cap));
    }
  }

  Matrix natural_coboundary(const Bicomodule& b, std::size_t n, std::size_t cap) {
    check_degree_cap(n, cap);
    const std::size_t dx = b.dim();
    const std::size_t d  = b.algebra().dim;
    const Matrix&     delta = b.algebra().comult;

    Matrix out = kron(b.beta(), identity_power(d, n));
    for (std::size_t k = 1; k <= n; ++k) {
      Matrix term = kron({Matrix::identity(dx), identity_power(d, k - 1), delta, identity_power(d, n - k)});
      out += term * sign_of(k);
    }
    std::vector<std::size_t> dims(n + 2, d);
    dims[0] = dx;
    Matrix last = rotation_sigma(n + 1, 1, dims) * kron(b.gamma(), identity_power(d, n));
    out += last * sign_of(n + 1);
    return out;
  }

  Matrix dual_coboundary(std::size_t d, const Matrix& comult, const Matrix& beta, const Matrix& gamma,
                         std::size_t n) {
    const std::size_t dx = beta.cols();
    if (gamma.cols() != dx || beta.rows() != dx * d || gamma.rows() != dx * d ||
        comult.rows() != d * d || comult.cols() != d) {
      throw DimensionError("dual_coboundary: inconsistent shapes");
    }
    const std::size_t dn  = power(d, n);
    const std::size_t dn1 = dn * d;
    auto beta_legs  = by_x_leg(beta, dx, d, true);
    auto gamma_legs = by_x_leg(gamma, dx, d, false);
    const Scalar gamma_sign = sign_of(n + 1);

    std::vector<SparseColumn> cols(dx * dn);
    for (std::size_t y = 0; y < dx; ++y) {
      for (std::size_t s = 0; s < dn; ++s) {
        SparseColumn& col = cols[y * dn + s];
        for (const auto& l : beta_legs[y]) col.push_back({l.target * dn1 + s * d + l.leg, l.value});
        for (std::size_t k = 1; k <= n; ++k) {
          // delta acts on leg j = n - k + 1 (1-based) of s.
          const std::size_t below = power(d, k - 1);
          const std::size_t high  = s / (below * d);
          const std::size_t sj    = (s / below) % d;
          const std::size_t low   = s % below;
          const Scalar      sg    = sign_of(k);
          for (const auto& e : comult.column(sj)) {
            std::size_t row = y * dn1 + (high * d * d + e.row) * below + low;
            col.push_back({row, e.value * sg});
          }
        }
        for (const auto& l : gamma_legs[y]) {
          col.push_back({l.target * dn1 + l.leg * dn + s, l.value * gamma_sign});
        }
      }
    }
    return Matrix::from_columns(dx * dn1, std::move(cols));
  }

  Matrix dual_coboundary(const Bicomodule& b, std::size_t n, std::size_t cap) {
    check_degree_cap(n, cap);
    return dual_coboundary(b.algebra().dim, b.algebra().comult, b.beta(), b.gamma(), n);
  }

  Matrix bar_boundary(const Matrix& product, const Matrix& left, const Matrix& right, std::size_t n) {
    if (n == 0) throw DimensionError("bar_boundary: degree must be at least 1");
    const std::size_t db = product.rows();
    const std::size_t dv = left.rows();
    if (product.cols() != db * db || left.cols() != db * dv || right.rows() != dv ||
        right.cols() != dv * db) {
      throw DimensionError("bar_boundary: inconsistent shapes");
    }
    Matrix out = kron(identity_power(db, n - 1), left);
    for (std::size_t i = 1; i + 1 <= n; ++i) {
      Matrix term = kron({identity_power(db, i - 1), product, identity_power(db, n - i - 1),
                          Matrix::identity(dv)});
      out += term * sign_of(n - i);
    }
    Matrix last = kron(identity_power(db, n - 1), right) * swap_legs(db, power(db, n - 1) * dv);
    out += last * sign_of(n);
    return out;
  }

  Matrix bar_coboundary(const Bicomodule& b, std::size_t n, std::size_t cap) {
    check_degree_cap(n, cap);
    Matrix product = b.algebra().comult.transpose();
    return bar_boundary(product, left_action(b.right()), right_action(b.left()), n + 1).transpose();
  }

  Bicomodule with_trivial_left(const Bicomodule& b) {
    return Bicomodule(b.label(), b.right(), trivial_left_coaction(b.hopf(), b.dim()));
  }

  Bicomodule with_zero_left(const Bicomodule& b) {
    return Bicomodule(b.label(), b.right(), zero_left_coaction(b.hopf(), b.dim()));
  }

  Matrix coboundary(const Bicomodule& b, ComplexKind kind, std::size_t n, std::size_t cap) {
    switch (kind) {
      case ComplexKind::natural: return natural_coboundary(b, n, cap);
      case ComplexKind::dual: return dual_coboundary(b, n, cap);
      case ComplexKind::bar: return bar_coboundary(b, n, cap);
      case ComplexKind::restricted: return dual_coboundary(with_trivial_left(b), n, cap);
    }
    throw StructureError("unknown complex kind");
  }

  void CochainComplex::verify_chain_property() const {
    for (std::size_t n = 0; n + 1 < boundaries.size(); ++n) {
      if (!(boundaries[n + 1] * boundaries[n]).is_zero()) {
        throw ConsistencyError("D_" + std::to_string(n + 1) + " D_" + std::to_string(n) + " is not zero");
      }
    }
  }

  CochainComplex build_complex(const Bicomodule& b, ComplexKind kind, std::size_t top, std::size_t cap) {
    check_degree_cap(top, cap);
    CochainComplex cx;
    cx.kind = kind;
    if (kind == ComplexKind::restricted) {
      Bicomodule r = with_trivial_left(b);
      for (std::size_t n = 0; n <= top; ++n) cx.boundaries.push_back(dual_coboundary(r, n, cap));
    } else {
      for (std::size_t n = 0; n <= top; ++n) cx.boundaries.push_back(coboundary(b, kind, n, cap));
    }
    for (const auto& m : cx.boundaries) cx.dims.push_back(m.cols());
    cx.dims.push_back(cx.boundaries.back().rows());
    return cx;
  }

  CohomologyResult cohomology(const Matrix* prev, const Matrix& next, std::size_t degree) {
    const std::size_t dim = next.cols();
    if (prev && prev->rows() != dim) throw DimensionError("cohomology: D_{n-1} and D_n do not compose");
    CohomologyResult r;
    r.degree       = degree;
    r.dim_cochains = dim;

    auto kernel  = kernel_basis(next);
    r.dim_kernel = kernel.size();

    const std::size_t image_cols = prev ? prev->cols() : 0;
    RowEchelon        echelon(dim, true);
    for (std::size_t j = 0; j < image_cols; ++j) echelon.insert(prev->column(j));
    r.dim_image_prev = echelon.rank();

    for (auto& v : kernel) {
      if (!is_zero(next.apply(v))) throw ConsistencyError("kernel vector is not a cocycle");
      SparseVector sv    = to_sparse(v);
      auto         combo = echelon.express(sv);
      if (!combo) {
        echelon.insert(sv);
        r.representatives.push_back(std::move(v));
        if (echelon.rank() != r.dim_image_prev + r.representatives.size()) {
          throw ConsistencyError("augmented rank did not grow with a new representative");
        }
        continue;
      }
      bool only_image = true;
      for (const auto& e : *combo) only_image = only_image && e.row < image_cols;
      if (!only_image) continue;
      Vector pre = to_dense(*combo, image_cols);
      if (prev->apply(pre) != v) throw ConsistencyError("coboundary preimage failed verification");
      ++r.certified_coboundaries;
    }
    r.dim_h = r.representatives.size();
    if (r.dim_kernel != r.dim_image_prev + r.dim_h) {
      throw ConsistencyError("Ker D_n does not contain Im D_{n-1}");
    }
    return r;
  }

  CohomologyResult cohomology(const CochainComplex& cx, std::size_t n) {
    if (n >= cx.boundaries.size()) throw DegreeCapError("cohomology: D_n was not built");
    return cohomology(n == 0 ? nullptr : &cx.boundaries[n - 1], cx.boundaries[n], n);
  }

  std::optional<Vector> coboundary_preimage(const Matrix& d, const Vector& v) {
    auto r = solve(d, v);
    if (!r) return std::nullopt;
    if (d.apply(*r.solution) != v) throw ConsistencyError("preimage failed verification");
    return r.solution;
  }

  IdentificationResult identify_dual_natural(const Bicomodule& b, std::size_t n, std::size_t cap) {
    check_degree_cap(n, cap);
    Bicomodule dual = dual_bicomodule(b);
    Matrix     nat  = natural_coboundary(dual, n, cap);
    Matrix     dv   = dual_coboundary(b, n, cap);
    Matrix     expect = dv * sign_of(n + 1);

    IdentificationResult r;
    r.mismatch = nat.first_difference(expect);
    r.holds    = !r.mismatch.has_value();
    std::optional<Matrix> nat_prev, dual_prev;
    if (n > 0) {
      nat_prev  = natural_coboundary(dual, n - 1, cap);
      dual_prev = dual_coboundary(b, n - 1, cap);
    }
    r.dim_h_left  = dim_h(nat_prev ? &*nat_prev : nullptr, nat);
    r.dim_h_right = dim_h(dual_prev ? &*dual_prev : nullptr, dv);
    r.holds       = r.holds && r.dim_h_left == r.dim_h_right;
    return r;
  }

  Matrix cochain_reshuffle(std::size_t dim_x, std::size_t d, std::size_t n) {
    return swap_legs(dim_x, power(d, n));
  }

  IdentificationResult identify_dual_bar(const Bicomodule& b, std::size_t n, std::size_t cap) {
    check_degree_cap(n, cap);
    const std::size_t dx = b.dim();
    const std::size_t d  = b.algebra().dim;
    Matrix dv  = dual_coboundary(b, n, cap);
    Matrix bar = bar_coboundary(b, n, cap);

    IdentificationResult r;
    Matrix lhs = cochain_reshuffle(dx, d, n + 1) * dv;
    Matrix rhs = bar * cochain_reshuffle(dx, d, n);
    r.mismatch = lhs.first_difference(rhs);
    r.holds    = !r.mismatch.has_value();
    std::optional<Matrix> bar_prev, dual_prev;
    if (n > 0) {
      bar_prev  = bar_coboundary(b, n - 1, cap);
      dual_prev = dual_coboundary(b, n - 1, cap);
    }
    r.dim_h_left  = dim_h(dual_prev ? &*dual_prev : nullptr, dv);
    r.dim_h_right = dim_h(bar_prev ? &*bar_prev : nullptr, bar);
    r.holds       = r.holds && r.dim_h_left == r.dim_h_right;
    return r;
  }

  Matrix cochain_as_map(const Vector& t, std::size_t dim_x, std::size_t dim_target) {
    if (t.size() != dim_x * dim_target) throw DimensionError("cochain_as_map: wrong length");
    std::vector<SparseColumn> cols(dim_x);
    for (std::size_t x = 0; x < dim_x; ++x) {
      for (std::size_t s = 0; s < dim_target; ++s) {
        const Scalar& v = t[x * dim_target + s];
        if (!v.is_zero()) cols[x].push_back({s, v});
      }
    }
    return Matrix::from_columns(dim_target, std::move(cols));
  }

  Vector map_as_cochain(const Matrix& m) {
    Vector out(m.rows() * m.cols());
    for (std::size_t x = 0; x < m.cols(); ++x) {
      for (const auto& e : m.column(x)) out[x * m.rows() + e.row] = e.value;
    }
    return out;
  }

  Primitive homotopy_from_counit(const Bicomodule& b, std::size_t n, const Vector& t) {
    if (n == 0) throw DimensionError("homotopy needs degree at least 1");
    if (!b.gamma().is_zero()) throw StructureError("counit homotopy applies to the one-sided complex");
    const auto&       h  = b.algebra();
    const std::size_t dx = b.dim();
    Matrix            d_n = dual_coboundary(b, n, n + 1);
    require_cocycle(d_n, t);
    Matrix contract = kron({Matrix::identity(dx), Matrix::row_vector(h.counit_vector()),
                            identity_power(h.dim, n - 1)});
    Vector f = contract.apply(t);
    return certify(dual_coboundary(b, n - 1, n), f, n % 2 == 1 ? 1 : -1, t);
  }

  Primitive natural_homotopy_from_counit(const Bicomodule& b, std::size_t n, const Vector& m) {
    if (n == 0) throw DimensionError("homotopy needs degree at least 1");
    if (!b.gamma().is_zero()) throw StructureError("counit homotopy applies to the one-sided complex");
    const auto&       h  = b.algebra();
    const std::size_t dx = b.dim();
    Matrix            d_n = natural_coboundary(b, n, n + 1);
    require_cocycle(d_n, m);
    Matrix contract = kron({Matrix::identity(dx), identity_power(h.dim, n - 1),
                            Matrix::row_vector(h.counit_vector())});
    Vector f = scale(contract.apply(m), sign_of(n - 1));
    return certify(natural_coboundary(b, n - 1, n), f, 1, m);
  }

  Primitive homotopy_from_haar(const Bicomodule& b, std::size_t n, const Vector& t, const Vector& phi) {
    if (n == 0) throw DimensionError("homotopy needs degree at least 1");
    const auto&       h  = b.algebra();
    const std::size_t dx = b.dim();
    if (b.gamma() != trivial_left_coaction(b.hopf(), dx).matrix()) {
      throw StructureError("Haar homotopy applies to the restricted complex");
    }
    if (phi.size() != h.dim) throw DimensionError("Haar state has the wrong length");
    Matrix d_n = dual_coboundary(b, n, n + 1);
    require_cocycle(d_n, t);
    Matrix contract = kron({Matrix::identity(dx), Matrix::row_vector(phi), identity_power(h.dim, n - 1)});
    Vector f = contract.apply(t);
    return certify(dual_coboundary(b, n - 1, n), f, n % 2 == 0 ? 1 : -1, t);
  }

  Primitive homotopy_from_codiagonal(const Bicomodule& b, std::size_t n, const Vector& t,
                                     const Vector& f, CodiagonalRoute route) {
    if (n == 0) throw DimensionError("homotopy needs degree at least 1");
    const auto&       h  = b.algebra();
    const std::size_t d  = h.dim;
    const std::size_t dx = b.dim();
    if (f.size() != d * d) throw DimensionError("codiagonal functional has the wrong length");
    Matrix d_n = dual_coboundary(b, n, n + 1);
    require_cocycle(d_n, t);

    Matrix tm = cochain_as_map(t, dx, power(d, n));
    Matrix fr = Matrix::row_vector(f);
    Matrix r;
    int    sign = 1;
    if (route == CodiagonalRoute::beta) {
      r = kron(identity_power(d, n - 1), fr) * kron(tm, Matrix::identity(d)) * b.beta();
    } else {
      r    = kron(fr, identity_power(d, n - 1)) * kron(Matrix::identity(d), tm) * b.gamma();
      sign = n % 2 == 0 ? 1 : -1;
    }
    return certify(dual_coboundary(b, n - 1, n), map_as_cochain(r), sign, t);
  }

}  // namespace hopfcoh
