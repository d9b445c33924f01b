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

#include "hopfcoh/amenability.hpp"

#include "hopfcoh/error.hpp"

namespace hopfcoh {

  namespace {

    Vector to_scalars(const RationalVector& w) {
      Vector out;
      out.reserve(w.size());
      for (const auto& x : w) out.emplace_back(x);
      return out;
    }

    // Sum_i (i + 1) k_i over a kernel basis: a deterministic generic cocycle.
    Vector generic_cocycle(const Matrix& d_n) {
      Vector out(d_n.cols());
      auto   kernel = kernel_basis(d_n);
      for (std::size_t i = 0; i < kernel.size(); ++i) {
        out = add(out, scale(kernel[i], Scalar(static_cast<long>(i + 1))));
      }
      return out;
    }

    std::size_t dim_h1(const Bicomodule& b) {
      Matrix d0 = dual_coboundary(b, 0, 2);
      Matrix d1 = dual_coboundary(b, 1, 2);
      return cohomology(&d0, d1, 1).dim_h;
    }

  }  // namespace

  Matrix codiagonal_system(const HopfStarAlgebra& h, Vector& rhs) {
    if (!h.counit) throw StructureError("codiagonal system needs a counit");
    const std::size_t d     = h.dim;
    const Matrix&     delta = h.comult;
    Matrix            a(d + d * d * d, d * d);
    rhs.assign(a.rows(), Scalar());
    for (std::size_t i = 0; i < d; ++i) {
      for (const auto& e : delta.column(i)) a.set(i, e.row, e.value);
      rhs[i] = (*h.counit)[i];
    }
    // Row (j, p, q): sum_b delta[(b,j),q] F_{pb} - sum_b delta[(j,b),p] F_{bq}.
    auto row_of = [&](std::size_t j, std::size_t p, std::size_t q) { return d + (j * d + p) * d + q; };
    for (std::size_t q = 0; q < d; ++q) {
      for (const auto& e : delta.column(q)) {
        std::size_t b = e.row / d;
        std::size_t j = e.row % d;
        for (std::size_t p = 0; p < d; ++p) {
          std::size_t r = row_of(j, p, q);
          a.set(r, p * d + b, a.at(r, p * d + b) + e.value);
        }
      }
    }
    for (std::size_t p = 0; p < d; ++p) {
      for (const auto& e : delta.column(p)) {
        std::size_t j = e.row / d;
        std::size_t b = e.row % d;
        for (std::size_t q = 0; q < d; ++q) {
          std::size_t r = row_of(j, p, q);
          a.set(r, b * d + q, a.at(r, b * d + q) - e.value);
        }
      }
    }
    return a;
  }

  Matrix functional_gram(const HopfStarAlgebra& h, const Vector& f) {
    if (!h.star) throw StructureError("functional_gram needs a star");
    const std::size_t d2 = h.dim * h.dim;
    if (f.size() != d2) throw DimensionError("functional on S (x) S has the wrong length");
    Matrix star2 = kron(*h.star, *h.star);
    Vector row   = (h.tensor_square_mult() * kron(star2, Matrix::identity(d2))).pull_back(f);
    Matrix g(d2, d2);
    for (std::size_t i = 0; i < d2; ++i) {
      for (std::size_t j = 0; j < d2; ++j) g.set(i, j, row[i * d2 + j]);
    }
    return g;
  }

  CodiagonalCertificate check_codiagonal(const HopfStarAlgebra& h, const Vector& f) {
    Vector rhs;
    Matrix a = codiagonal_system(h, rhs);
    if (f.size() != a.cols()) throw DimensionError("functional on S (x) S has the wrong length");
    Vector residual = subtract(a.apply(f), rhs);
    CodiagonalCertificate c;
    c.functional = f;
    c.counit_residual.assign(residual.begin(), residual.begin() + static_cast<std::ptrdiff_t>(h.dim));
    c.module_residual.assign(residual.begin() + static_cast<std::ptrdiff_t>(h.dim), residual.end());
    if (h.star) {
      try {
        c.gram_check = psd_check(functional_gram(h, f));
        c.positive   = c.gram_check->psd;
      } catch (const StructureError&) {
        c.positive = false;  // F(a^* b) is not even Hermitian
      }
    }
    return c;
  }

  CodiagonalSearch find_codiagonal(const HopfStarAlgebra& h) {
    CodiagonalSearch out;
    out.has_counit = h.counit.has_value();
    if (!out.has_counit) return out;
    Vector rhs;
    Matrix a = codiagonal_system(h, rhs);
    auto   r = solve(a, rhs);
    if (!r) {
      out.certificate = r.certificate;
      return out;
    }
    out.solution_dim = a.cols() - image_rank(a);
    out.codiagonal   = check_codiagonal(h, *r.solution);
    if (!out.codiagonal->exact()) throw ConsistencyError("codiagonal solution failed its own identities");
    return out;
  }

  KroneckerCodiagonal kronecker_codiagonal(const FiniteGroup& g) {
    HopfStarAlgebra   h = group_algebra(g);
    const std::size_t d = h.dim;
    Vector            f(d * d);
    for (std::size_t r = 0; r < d; ++r) f[r * d + r] = Scalar(1);

    KroneckerCodiagonal k;
    k.certificate = check_codiagonal(h, f);
    k.gram        = functional_gram(h, f);

    const std::size_t   n = d * d;
    auto                rows = k.gram.to_dense_rows();
    bool                ok = true;
    std::vector<char>   seen(n, 0);
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) {
        ok = rows[i][j].is_zero() || rows[i][j].is_one();
        for (std::size_t l = 0; l < n && ok; ++l) {
          if (rows[i][j].is_one() && rows[j][l].is_one()) ok = rows[i][l].is_one();
        }
      }
      ok = ok && rows[i][i].is_one();
    }
    k.block_structure = ok;
    if (ok) {
      for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++k.blocks;
        for (std::size_t j = 0; j < n; ++j) {
          if (rows[i][j].is_one()) seen[j] = 1;
        }
      }
    }
    return k;
  }

  void mean_system(const FiniteMonoid& m, RationalMatrix& a, RationalVector& b) {
    const std::size_t n = m.order();
    a.assign(1, RationalVector(n, Rational(1)));
    b.assign(1, Rational(1));
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t t = 0; t < n; ++t) {
        RationalVector row(n, Rational(0));
        for (std::size_t x = 0; x < n; ++x) {
          if (m.mul(x, r) == t) row[x] += 1;
        }
        row[t] -= 1;
        a.push_back(std::move(row));
        b.emplace_back(0);
      }
    }
  }

  bool is_invariant_mean(const FiniteMonoid& m, const RationalVector& w) {
    RationalMatrix a;
    RationalVector b;
    mean_system(m, a, b);
    return verify_feasible_point(a, b, w);
  }

  MeanSearch find_invariant_mean(const FiniteMonoid& m) {
    RationalMatrix a;
    RationalVector b;
    mean_system(m, a, b);
    MeanSearch out;
    auto       r = simplex_feasibility(a, b);
    out.pivots   = r.pivots;
    if (r.feasible) {
      MeanCertificate c;
      c.weights = r.point;
      Rational total(0);
      for (const auto& w : c.weights) total += w;
      c.normalized = total == 1;
      c.invariant  = verify_feasible_point(a, b, c.weights);
      if (!c.invariant || !c.normalized) throw ConsistencyError("simplex returned an invalid mean");
      out.mean = std::move(c);
    } else {
      out.farkas          = r.certificate;
      out.farkas_verified = verify_farkas(a, b, r.certificate);
      if (!out.farkas_verified) throw ConsistencyError("simplex returned an invalid Farkas certificate");
    }
    if (m.order() <= 8) {
      out.vertex_checked = true;
      out.vertex_agrees  = vertex_search(a, b).has_value() == r.feasible;
    }
    return out;
  }

  CodiagonalVanishingReport check_codiagonal_vanishing(const HopfPtr& h, std::size_t cap) {
    CodiagonalVanishingReport rep;
    rep.algebra    = h->name;
    auto counit    = counit_find(*h);
    rep.has_counit = counit.counit.has_value() && counit.two_sided;
    if (!rep.has_counit) {
      Bicomodule one("right_regular", regular_right_coaction(h), zero_left_coaction(h, h->dim));
      VanishingEntry e{one.label(), 1, dim_h1(one), std::nullopt, std::nullopt};
      if (e.dim_h == 0) rep.failures.push_back(h->name + ": no counit but H^1 of right_regular vanishes");
      rep.entries.push_back(std::move(e));
      return rep;
    }
    auto search        = find_codiagonal(*h);
    rep.has_codiagonal = search.codiagonal.has_value();
    if (!rep.has_codiagonal) return rep;
    const Vector& f = search.codiagonal->functional;

    for (const auto& b : catalog_bicomodules(h)) {
      if (!b.has_nondegenerate_side()) continue;
      auto cx = build_complex(b, ComplexKind::dual, cap - 1, cap);
      for (std::size_t n = 1; n + 1 <= cap; ++n) {
        VanishingEntry e;
        e.bicomodule = b.label();
        e.degree     = n;
        e.dim_h      = cohomology(cx, n).dim_h;
        e.route      = b.beta_nondegenerate().any() ? CodiagonalRoute::beta : CodiagonalRoute::gamma;
        const std::string where = h->name + " / " + b.label() + " / degree " + std::to_string(n);
        if (e.dim_h != 0) rep.failures.push_back(where + ": H^n is nonzero");
        try {
          e.homotopy_sign = homotopy_from_codiagonal(b, n, generic_cocycle(cx.boundaries[n]), f, *e.route).sign;
        } catch (const ConsistencyError& err) {
          rep.failures.push_back(where + ": " + err.what());
        }
        rep.entries.push_back(std::move(e));
      }
    }
    return rep;
  }

  GradedCocycleReport check_graded_cocycles(const FiniteGroup& g) {
    GradedCocycleReport rep;
    rep.group         = g.name();
    auto              h = share(group_algebra(g));
    Bicomodule        b = pair_graded_bicomodule(h);
    const std::size_t d = g.order();
    Matrix            d0 = dual_coboundary(b, 0, 2);
    Matrix            d1 = dual_coboundary(b, 1, 2);
    auto              kernel = kernel_basis(d1);
    rep.cocycles = kernel.size();

    for (std::size_t i = 0; i < kernel.size(); ++i) {
      const Vector& a = kernel[i];
      Vector        f(b.dim());
      for (std::size_t s = 0; s < d; ++s) {
        for (std::size_t t = 0; t < d; ++t) {
          const std::size_t x  = s * d + t;
          const Scalar&     ct = a[x * d + t];
          bool              ok = true;
          for (std::size_t u = 0; u < d; ++u) {
            Scalar expect = (u == t ? ct : Scalar()) - (u == s ? ct : Scalar());
            ok            = ok && a[x * d + u] == expect;
          }
          if (!ok) {
            rep.failures.push_back("cocycle " + std::to_string(i) + " violates the two-term formula at (" +
                                   g.labels()[s] + ", " + g.labels()[t] + ")");
          }
          if (s == t && ok) ++rep.diagonal_zero;
          f[x] = a[x * d + s];
        }
      }
      if (d0.apply(f) != a) {
        rep.failures.push_back("cocycle " + std::to_string(i) + " is not D_0 of the graded functional");
      }
    }
    rep.dim_h1 = cohomology(&d0, d1, 1).dim_h;
    if (rep.dim_h1 != 0) rep.failures.push_back("H^1 of the pair-graded bicomodule is nonzero");
    return rep;
  }

  MeanCohomologyReport check_mean_cohomology(const FiniteMonoid& m) {
    if (!m.has_identity()) throw StructureError("check_mean_cohomology needs a monoid with identity");
    MeanCohomologyReport rep;
    rep.monoid = m.name();
    auto mean  = find_invariant_mean(m);
    rep.mean_exists = mean.mean.has_value();

    auto              h = share(function_algebra(m));
    const std::size_t d = h->dim;
    rep.quotient_dim = d - 1;
    if (d == 1) {
      // X = 0: every cochain space is zero.
      rep.cocycle_verified = rep.is_coboundary = rep.all_h1_vanish = rep.explicit_primitive = true;
      if (!rep.mean_exists) rep.failures.push_back("trivial monoid without a mean");
      return rep;
    }
    const Vector& unit = h->unit_vector();
    const Vector& eps  = h->counit_vector();
    auto          q    = quotient_comodule(regular_right_coaction(h), std::vector<Vector>{unit});
    Bicomodule    x("unit_quotient_right", q.coaction, trivial_left_coaction(h, d - 1));

    Matrix centre = Matrix::identity(d) - Matrix::column_vector(unit) * Matrix::row_vector(eps);
    Vector t      = map_as_cochain(centre * q.section);
    Matrix d0     = dual_coboundary(x, 0, 2);
    Matrix d1     = dual_coboundary(x, 1, 2);
    rep.cocycle_verified = is_zero(d1.apply(t));

    rep.is_coboundary = coboundary_preimage(d0, t).has_value();
    if (!rep.is_coboundary) {
      std::vector<SparseColumn> cols;
      for (std::size_t j = 0; j < d0.cols(); ++j) cols.push_back(d0.column(j));
      cols.push_back(to_sparse(t));
      rep.rank_increase = image_rank(Matrix::from_columns(d0.rows(), std::move(cols))) == image_rank(d0) + 1;
    }

    rep.all_h1_vanish = true;
    for (const auto& b : catalog_bicomodules(h)) {
      rep.all_h1_vanish = rep.all_h1_vanish && dim_h1(with_trivial_left(b)) == 0;
    }

    if (rep.mean_exists) {
      Vector f = q.section.pull_back(subtract(eps, to_scalars(mean.mean->weights)));
      rep.explicit_primitive = d0.apply(f) == t;
      if (!rep.explicit_primitive) rep.failures.push_back("(eps - Phi) on the section does not bound T");
    }
    if (!rep.cocycle_verified) rep.failures.push_back("T is not a cocycle");
    if (rep.mean_exists != rep.is_coboundary) rep.failures.push_back("mean existence and exactness of T disagree");
    if (rep.mean_exists != rep.all_h1_vanish) rep.failures.push_back("mean existence and vanishing of H^1 disagree");
    if (!rep.is_coboundary && !rep.rank_increase) rep.failures.push_back("augmented rank did not increase");
    return rep;
  }

}  // namespace hopfcoh
