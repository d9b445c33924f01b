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

#include "hopfcoh/comodule.hpp"

#include "hopfcoh/error.hpp"

namespace hopfcoh {

  namespace {

    std::optional<std::size_t> column_defect(const Matrix& a, const Matrix& b) {
      if (auto d = a.first_difference(b)) return d->second;
      return std::nullopt;
    }

    void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const std::string& what) {
      if (m.rows() != rows || m.cols() != cols) {
        throw DimensionError(what + " must be " + std::to_string(rows) + " x " + std::to_string(cols) +
                             ", got " + std::to_string(m.rows()) + " x " + std::to_string(m.cols()));
      }
    }

    std::size_t coaction_dim(const Matrix& m, std::size_t d, const std::string& what) {
      std::size_t x = m.cols();
      require_shape(m, x * d, x, what);
      return x;
    }

    const FiniteMonoid& source_group(const HopfStarAlgebra& h) {
      if (h.family != AlgebraFamily::group || !h.source || !h.source->is_group()) {
        throw StructureError("grading requires a group algebra, got " + h.name);
      }
      return *h.source;
    }

    std::size_t rank_of_columns(std::size_t rows, std::vector<SparseColumn> cols) {
      return image_rank(Matrix::from_columns(rows, std::move(cols)));
    }

  }  // namespace

  HopfPtr share(HopfStarAlgebra h) { return std::make_shared<const HopfStarAlgebra>(std::move(h)); }

  std::optional<std::size_t> right_coaction_defect(const HopfStarAlgebra& h, const Matrix& beta) {
    std::size_t  x  = coaction_dim(beta, h.dim, "right coaction");
    const Matrix is = Matrix::identity(h.dim);
    return column_defect(kron(beta, is) * beta, kron(Matrix::identity(x), h.comult) * beta);
  }

  std::optional<std::size_t> left_coaction_defect(const HopfStarAlgebra& h, const Matrix& gamma) {
    std::size_t  x  = coaction_dim(gamma, h.dim, "left coaction");
    const Matrix is = Matrix::identity(h.dim);
    return column_defect(kron(is, gamma) * gamma, kron(h.comult, Matrix::identity(x)) * gamma);
  }

  std::optional<std::size_t> bicomodule_defect(const HopfStarAlgebra& h, const Matrix& beta,
                                               const Matrix& gamma) {
    coaction_dim(beta, h.dim, "right coaction");
    coaction_dim(gamma, h.dim, "left coaction");
    if (beta.cols() != gamma.cols()) throw DimensionError("coactions act on spaces of different dimension");
    const Matrix is = Matrix::identity(h.dim);
    return column_defect(kron(is, beta) * gamma, kron(gamma, is) * beta);
  }

  RightCoaction::RightCoaction(HopfPtr hopf, Matrix beta) : hopf_(std::move(hopf)), beta_(std::move(beta)) {
    dim_ = coaction_dim(beta_, hopf_->dim, "right coaction");
    if (auto w = right_coaction_defect(*hopf_, beta_)) {
      throw StructureError("right coaction identity fails on basis vector " + std::to_string(*w));
    }
  }

  LeftCoaction::LeftCoaction(HopfPtr hopf, Matrix gamma) : hopf_(std::move(hopf)), gamma_(std::move(gamma)) {
    dim_ = coaction_dim(gamma_, hopf_->dim, "left coaction");
    if (auto w = left_coaction_defect(*hopf_, gamma_)) {
      throw StructureError("left coaction identity fails on basis vector " + std::to_string(*w));
    }
  }

  Nondegeneracy check_nondegenerate(const RightCoaction& c) {
    const auto&       h = c.algebra();
    const std::size_t d = h.dim;
    const std::size_t x = c.dim();
    const Matrix      ix = Matrix::identity(x);
    std::vector<SparseColumn> left;
    std::vector<SparseColumn> right;
    for (std::size_t s = 0; s < d; ++s) {
      Matrix l = kron(ix, h.left_mult(s)) * c.matrix();
      Matrix r = kron(ix, h.right_mult(s)) * c.matrix();
      for (std::size_t j = 0; j < x; ++j) {
        left.push_back(l.column(j));
        right.push_back(r.column(j));
      }
    }
    Nondegeneracy out;
    out.left  = rank_of_columns(x * d, std::move(left)) == x * d;
    out.right = rank_of_columns(x * d, std::move(right)) == x * d;
    return out;
  }

  Nondegeneracy check_nondegenerate(const LeftCoaction& c) {
    const auto&       h = c.algebra();
    const std::size_t d = h.dim;
    const std::size_t x = c.dim();
    const Matrix      ix = Matrix::identity(x);
    std::vector<SparseColumn> left;
    std::vector<SparseColumn> right;
    for (std::size_t s = 0; s < d; ++s) {
      Matrix l = kron(h.left_mult(s), ix) * c.matrix();
      Matrix r = kron(h.right_mult(s), ix) * c.matrix();
      for (std::size_t j = 0; j < x; ++j) {
        left.push_back(l.column(j));
        right.push_back(r.column(j));
      }
    }
    Nondegeneracy out;
    out.left  = rank_of_columns(x * d, std::move(left)) == x * d;
    out.right = rank_of_columns(x * d, std::move(right)) == x * d;
    return out;
  }

  Bicomodule::Bicomodule(std::string label, RightCoaction beta, LeftCoaction gamma)
      : label_(std::move(label)), beta_(std::move(beta)), gamma_(std::move(gamma)) {
    if (beta_.hopf() != gamma_.hopf() && !(beta_.algebra().comult == gamma_.algebra().comult &&
                                           beta_.algebra().mult == gamma_.algebra().mult)) {
      throw StructureError(label_ + ": coactions are over different algebras");
    }
    if (auto w = bicomodule_defect(beta_.algebra(), beta_.matrix(), gamma_.matrix())) {
      throw StructureError(label_ + ": bicomodule compatibility fails on basis vector " +
                           std::to_string(*w));
    }
    beta_nd_  = check_nondegenerate(beta_);
    gamma_nd_ = check_nondegenerate(gamma_);
  }

  RightCoaction trivial_right_coaction(const HopfPtr& hopf, std::size_t dim) {
    const Vector& u = hopf->unit_vector();
    return RightCoaction(hopf, kron(Matrix::identity(dim), Matrix::column_vector(u)));
  }

  LeftCoaction trivial_left_coaction(const HopfPtr& hopf, std::size_t dim) {
    const Vector& u = hopf->unit_vector();
    return LeftCoaction(hopf, kron(Matrix::column_vector(u), Matrix::identity(dim)));
  }

  RightCoaction zero_right_coaction(const HopfPtr& hopf, std::size_t dim) {
    return RightCoaction(hopf, Matrix(dim * hopf->dim, dim));
  }

  LeftCoaction zero_left_coaction(const HopfPtr& hopf, std::size_t dim) {
    return LeftCoaction(hopf, Matrix(dim * hopf->dim, dim));
  }

  RightCoaction regular_right_coaction(const HopfPtr& hopf) { return RightCoaction(hopf, hopf->comult); }

  LeftCoaction regular_left_coaction(const HopfPtr& hopf) { return LeftCoaction(hopf, hopf->comult); }

  std::pair<Matrix, Matrix> pivot_complement(std::size_t dim, const std::vector<Vector>& y) {
    auto                     basis = rref_basis(y, dim);
    std::vector<char>        is_pivot(dim, 0);
    std::vector<std::size_t> pivots;
    for (const auto& v : basis) {
      std::size_t p = 0;
      while (v[p].is_zero()) ++p;
      is_pivot[p] = 1;
      pivots.push_back(p);
    }
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < dim; ++j) {
      if (!is_pivot[j]) free.push_back(j);
    }
    Matrix q(free.size(), dim);
    Matrix section(dim, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
      q.set(k, free[k], Scalar(1));
      section.set(free[k], k, Scalar(1));
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!basis[i][free[k]].is_zero()) q.set(k, pivots[i], -basis[i][free[k]]);
      }
    }
    return {q, section};
  }

  Quotient<RightCoaction> quotient_comodule(const RightCoaction& c, const std::vector<Vector>& y) {
    auto [q, section] = pivot_complement(c.dim(), y);
    Matrix qs         = kron(q, Matrix::identity(c.algebra().dim)) * c.matrix();
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (!is_zero(qs.apply(y[i]))) {
        throw StructureError("subspace is not a subcomodule: (q (x) id) beta(y_" + std::to_string(i) +
                             ") != 0");
      }
    }
    RightCoaction induced(c.hopf(), qs * section);
    return {std::move(induced), std::move(q), std::move(section)};
  }

  Quotient<LeftCoaction> quotient_comodule(const LeftCoaction& c, const std::vector<Vector>& y) {
    auto [q, section] = pivot_complement(c.dim(), y);
    Matrix qs         = kron(Matrix::identity(c.algebra().dim), q) * c.matrix();
    for (std::size_t i = 0; i < y.size(); ++i) {
      if (!is_zero(qs.apply(y[i]))) {
        throw StructureError("subspace is not a subcomodule: (id (x) q) gamma(y_" + std::to_string(i) +
                             ") != 0");
      }
    }
    LeftCoaction induced(c.hopf(), qs * section);
    return {std::move(induced), std::move(q), std::move(section)};
  }

  std::vector<std::vector<Vector>> grade_decomposition(const RightCoaction& c) {
    const auto&       g = source_group(c.algebra());
    const std::size_t d = g.order();
    const Matrix      ix = Matrix::identity(c.dim());
    std::vector<std::vector<Vector>> out;
    for (std::size_t r = 0; r < d; ++r) {
      Matrix proj = kron(ix, Matrix::row_vector(unit_vector(d, r))) * c.matrix();
      auto   part = image_basis(proj);
      for (const auto& x : part) {
        if (c.matrix().apply(x) != kron(x, unit_vector(d, r))) {
          throw ConsistencyError("graded component " + std::to_string(r) + " is not homogeneous");
        }
      }
      out.push_back(std::move(part));
    }
    return out;
  }

  std::vector<std::vector<Vector>> grade_decomposition(const LeftCoaction& c) {
    const auto&       g = source_group(c.algebra());
    const std::size_t d = g.order();
    const Matrix      ix = Matrix::identity(c.dim());
    std::vector<std::vector<Vector>> out;
    for (std::size_t r = 0; r < d; ++r) {
      Matrix proj = kron(Matrix::row_vector(unit_vector(d, r)), ix) * c.matrix();
      auto   part = image_basis(proj);
      for (const auto& x : part) {
        if (c.matrix().apply(x) != kron(unit_vector(d, r), x)) {
          throw ConsistencyError("graded component " + std::to_string(r) + " is not homogeneous");
        }
      }
      out.push_back(std::move(part));
    }
    return out;
  }

  LeftCoaction dual_coaction(const RightCoaction& c) {
    // gamma[(s, x), y] = beta[(y, s), x]
    const std::size_t d = c.algebra().dim;
    const std::size_t n = c.dim();
    std::vector<SparseColumn> cols(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (const auto& e : c.matrix().column(x)) {
        std::size_t y = e.row / d;
        std::size_t s = e.row % d;
        cols[y].push_back({s * n + x, e.value});
      }
    }
    return LeftCoaction(c.hopf(), Matrix::from_columns(d * n, std::move(cols)));
  }

  RightCoaction dual_coaction(const LeftCoaction& c) {
    // beta[(x, a), y] = gamma[(a, y), x]
    const std::size_t d = c.algebra().dim;
    const std::size_t n = c.dim();
    std::vector<SparseColumn> cols(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (const auto& e : c.matrix().column(x)) {
        std::size_t a = e.row / n;
        std::size_t y = e.row % n;
        cols[y].push_back({x * d + a, e.value});
      }
    }
    return RightCoaction(c.hopf(), Matrix::from_columns(n * d, std::move(cols)));
  }

  Bicomodule dual_bicomodule(const Bicomodule& b) {
    return Bicomodule("dual:" + b.label(), dual_coaction(b.left()), dual_coaction(b.right()));
  }

  Matrix left_action(const RightCoaction& c) {
    const std::size_t d = c.algebra().dim;
    const std::size_t n = c.dim();
    Matrix            l(n, d * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (const auto& e : c.matrix().column(x)) l.set(e.row / d, (e.row % d) * n + x, e.value);
    }
    return l;
  }

  Matrix right_action(const LeftCoaction& c) {
    const std::size_t d = c.algebra().dim;
    const std::size_t n = c.dim();
    Matrix            r(n, n * d);
    for (std::size_t x = 0; x < n; ++x) {
      for (const auto& e : c.matrix().column(x)) r.set(e.row % n, x * d + e.row / n, e.value);
    }
    return r;
  }

  Matrix module_from_coaction(const RightCoaction& c) {
    if (!c.algebra().counit) throw StructureError("module_from_coaction needs a counit");
    return left_action(c);
  }

  Matrix module_from_coaction(const LeftCoaction& c) {
    if (!c.algebra().counit) throw StructureError("module_from_coaction needs a counit");
    return right_action(c);
  }

  RightCoaction coaction_from_left_module(const HopfPtr& hopf, const Matrix& action) {
    const std::size_t d = hopf->dim;
    const std::size_t n = action.rows();
    require_shape(action, n, d * n, "left action");
    Matrix beta(n * d, n);
    for (std::size_t col = 0; col < d * n; ++col) {
      for (const auto& e : action.column(col)) beta.set(e.row * d + col / n, col % n, e.value);
    }
    return RightCoaction(hopf, std::move(beta));
  }

  LeftCoaction coaction_from_right_module(const HopfPtr& hopf, const Matrix& action) {
    const std::size_t d = hopf->dim;
    const std::size_t n = action.rows();
    require_shape(action, n, n * d, "right action");
    Matrix gamma(d * n, n);
    for (std::size_t col = 0; col < n * d; ++col) {
      for (const auto& e : action.column(col)) gamma.set((col % d) * n + e.row, col / d, e.value);
    }
    return LeftCoaction(hopf, std::move(gamma));
  }

  std::optional<std::size_t> left_module_defect(const HopfStarAlgebra& h, const Matrix& action) {
    const std::size_t n = action.rows();
    require_shape(action, n, h.dim * n, "left action");
    Matrix p = h.comult.transpose();
    return column_defect(action * kron(Matrix::identity(h.dim), action),
                         action * kron(p, Matrix::identity(n)));
  }

  std::optional<std::size_t> right_module_defect(const HopfStarAlgebra& h, const Matrix& action) {
    const std::size_t n = action.rows();
    require_shape(action, n, n * h.dim, "right action");
    Matrix p = h.comult.transpose();
    return column_defect(action * kron(action, Matrix::identity(h.dim)),
                         action * kron(Matrix::identity(n), p));
  }

  Bicomodule pair_graded_bicomodule(const HopfPtr& hopf) {
    const std::size_t d = source_group(*hopf).order();
    const std::size_t n = d * d;
    Matrix            beta(n * d, n);
    Matrix            gamma(d * n, n);
    for (std::size_t s = 0; s < d; ++s) {
      for (std::size_t t = 0; t < d; ++t) {
        std::size_t x = s * d + t;
        beta.set(x * d + s, x, Scalar(1));
        gamma.set(t * n + x, x, Scalar(1));
      }
    }
    return Bicomodule("pair_graded", RightCoaction(hopf, std::move(beta)),
                      LeftCoaction(hopf, std::move(gamma)));
  }

  std::vector<Bicomodule> catalog_bicomodules(const HopfPtr& hopf) {
    const std::size_t       d = hopf->dim;
    std::vector<Bicomodule> out;
    out.emplace_back("regular", regular_right_coaction(hopf), regular_left_coaction(hopf));
    out.emplace_back("right_regular", regular_right_coaction(hopf), zero_left_coaction(hopf, d));
    out.emplace_back("left_regular", zero_right_coaction(hopf, d), regular_left_coaction(hopf));
    if (hopf->unit) {
      out.emplace_back("right_regular_trivial_left", regular_right_coaction(hopf),
                       trivial_left_coaction(hopf, d));
      out.emplace_back("trivial", trivial_right_coaction(hopf, 1), trivial_left_coaction(hopf, 1));
      if (d > 1) {
        std::vector<Vector> one{*hopf->unit};
        auto                qr = quotient_comodule(regular_right_coaction(hopf), one);
        out.emplace_back("unit_quotient_right", qr.coaction, trivial_left_coaction(hopf, d - 1));
        auto ql = quotient_comodule(regular_left_coaction(hopf), one);
        out.emplace_back("unit_quotient_left", trivial_right_coaction(hopf, d - 1), ql.coaction);
      }
    }
    if (hopf->family == AlgebraFamily::group && hopf->source && hopf->source->is_group()) {
      out.push_back(pair_graded_bicomodule(hopf));
      Matrix beta(d * d, d);
      for (std::size_t r = 0; r < d; ++r) beta.set(r * d + r, r, Scalar(1));
      out.emplace_back("graded_trivial_left", RightCoaction(hopf, std::move(beta)),
                       trivial_left_coaction(hopf, d));
    }
    return out;
  }

}  // namespace hopfcoh
