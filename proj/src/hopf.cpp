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

#include "hopfcoh/hopf.hpp"

#include "hopfcoh/error.hpp"
#include "hopfcoh/lp.hpp"

namespace hopfcoh {

  namespace {

    AxiomCheck compare(std::string name, const Matrix& lhs, const Matrix& rhs) {
      AxiomCheck c;
      c.name = std::move(name);
      if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
        c.passed = false;
        c.detail = "shape mismatch";
        return c;
      }
      if (auto d = lhs.first_difference(rhs)) {
        c.passed  = false;
        c.witness = d->second;
        c.detail  = "sides differ at output index " + std::to_string(d->first);
      }
      return c;
    }

    AxiomCheck not_applicable(std::string name, std::string why) {
      AxiomCheck c;
      c.name       = std::move(name);
      c.applicable = false;
      c.detail     = std::move(why);
      return c;
    }

  }  // namespace

  const char* to_string(AlgebraFamily f) {
    switch (f) {
      case AlgebraFamily::function: return "function";
      case AlgebraFamily::group: return "group";
      case AlgebraFamily::dual: return "dual";
      case AlgebraFamily::custom: return "custom";
    }
    return "custom";
  }

  const char* to_string(Positivity p) {
    switch (p) {
      case Positivity::positive: return "positive";
      case Positivity::not_positive: return "not_positive";
      case Positivity::unknown: return "unknown";
    }
    return "unknown";
  }

  const Vector& HopfStarAlgebra::unit_vector() const {
    if (!unit) throw StructureError(name + " has no unit");
    return *unit;
  }

  const Vector& HopfStarAlgebra::counit_vector() const {
    if (!counit) throw StructureError(name + " has no counit");
    return *counit;
  }

  Matrix HopfStarAlgebra::tensor_square_mult() const {
    Matrix i = Matrix::identity(dim);
    return kron(mult, mult) * kron({i, swap_legs(dim, dim), i});
  }

  Matrix HopfStarAlgebra::left_mult(std::size_t s) const {
    std::vector<SparseColumn> cols(dim);
    for (std::size_t x = 0; x < dim; ++x) cols[x] = mult.column(s * dim + x);
    return Matrix::from_columns(dim, std::move(cols));
  }

  Matrix HopfStarAlgebra::right_mult(std::size_t s) const {
    std::vector<SparseColumn> cols(dim);
    for (std::size_t x = 0; x < dim; ++x) cols[x] = mult.column(x * dim + s);
    return Matrix::from_columns(dim, std::move(cols));
  }

  void validate_shapes(const HopfStarAlgebra& h) {
    const std::size_t d = h.dim;
    auto fail = [&](const std::string& what) { throw DimensionError(h.name + ": " + what); };
    if (d == 0) fail("dimension must be positive");
    if (h.mult.rows() != d || h.mult.cols() != d * d) fail("product must be d x d^2");
    if (h.comult.rows() != d * d || h.comult.cols() != d) fail("coproduct must be d^2 x d");
    if (h.unit && h.unit->size() != d) fail("unit has the wrong length");
    if (h.counit && h.counit->size() != d) fail("counit has the wrong length");
    if (h.star && (h.star->rows() != d || h.star->cols() != d)) fail("involution must be d x d");
    if (!h.labels.empty() && h.labels.size() != d) fail("wrong number of basis labels");
  }

  bool AxiomReport::all_passed() const {
    for (const auto& c : checks) {
      if (c.applicable && !c.passed) return false;
    }
    return true;
  }

  const AxiomCheck* AxiomReport::find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }

  AxiomReport check_axioms(const HopfStarAlgebra& h) {
    validate_shapes(h);
    const std::size_t d = h.dim;
    const Matrix      i = Matrix::identity(d);
    AxiomReport       r;
    const Matrix&     m  = h.mult;
    const Matrix&     dl = h.comult;

    r.checks.push_back(compare("associativity", m * kron(m, i), m * kron(i, m)));
    if (h.unit) {
      Matrix u = Matrix::column_vector(*h.unit);
      r.checks.push_back(compare("left_unit", m * kron(u, i), i));
      r.checks.push_back(compare("right_unit", m * kron(i, u), i));
    } else {
      r.checks.push_back(not_applicable("left_unit", "no unit"));
      r.checks.push_back(not_applicable("right_unit", "no unit"));
    }
    r.checks.push_back(compare("coassociativity", kron(dl, i) * dl, kron(i, dl) * dl));
    r.checks.push_back(compare("coproduct_multiplicative", dl * m, h.tensor_square_mult() * kron(dl, dl)));
    if (h.unit) {
      Matrix u = Matrix::column_vector(*h.unit);
      r.checks.push_back(compare("coproduct_unital", dl * u, kron(u, u)));
    } else {
      r.checks.push_back(not_applicable("coproduct_unital", "no unit"));
    }
    if (h.star) {
      const Matrix& s = *h.star;
      r.checks.push_back(compare("star_involutive", s * s.conjugate(), i));
      r.checks.push_back(
          compare("star_antimultiplicative", s * m.conjugate(), m * kron(s, s) * swap_legs(d, d)));
      r.checks.push_back(compare("coproduct_star", dl * s, kron(s, s) * dl.conjugate()));
    } else {
      for (const char* n : {"star_involutive", "star_antimultiplicative", "coproduct_star"}) {
        r.checks.push_back(not_applicable(n, "no involution"));
      }
    }
    if (h.counit) {
      Matrix e = Matrix::row_vector(*h.counit);
      r.checks.push_back(compare("left_counit", kron(e, i) * dl, i));
      r.checks.push_back(compare("right_counit", kron(i, e) * dl, i));
    } else {
      r.checks.push_back(not_applicable("left_counit", "no counit"));
      r.checks.push_back(not_applicable("right_counit", "no counit"));
    }
    return r;
  }

  Saturation check_saturated(const HopfStarAlgebra& h) {
    validate_shapes(h);
    const std::size_t d = h.dim;
    const Matrix      i = Matrix::identity(d);
    std::vector<SparseColumn> left;
    std::vector<SparseColumn> right;
    for (std::size_t t = 0; t < d; ++t) {
      Matrix l = kron(i, h.right_mult(t)) * h.comult;
      Matrix r = kron(h.right_mult(t), i) * h.comult;
      for (std::size_t s = 0; s < d; ++s) {
        left.push_back(l.column(s));
        right.push_back(r.column(s));
      }
    }
    Saturation out;
    out.left_rank  = image_rank(Matrix::from_columns(d * d, std::move(left)));
    out.right_rank = image_rank(Matrix::from_columns(d * d, std::move(right)));
    out.left       = out.left_rank == d * d;
    out.right      = out.right_rank == d * d;
    return out;
  }

  HopfStarAlgebra function_algebra(const FiniteMonoid& m) {
    const std::size_t n = m.order();
    HopfStarAlgebra   h;
    h.name   = "function_algebra:" + m.name();
    h.dim    = n;
    h.family = AlgebraFamily::function;
    h.source = m;
    h.mult   = Matrix(n, n * n);
    for (std::size_t a = 0; a < n; ++a) h.mult.set(a, a * n + a, Scalar(1));
    h.unit = Vector(n, Scalar(1));
    std::vector<SparseColumn> cols(n);
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = 0; t < n; ++t) cols[m.mul(s, t)].push_back({s * n + t, Scalar(1)});
    }
    h.comult = Matrix::from_columns(n * n, std::move(cols));
    if (m.has_identity()) h.counit = hopfcoh::unit_vector(n, 0);
    h.star = Matrix::identity(n);
    for (const auto& l : m.labels()) h.labels.push_back("d_" + l);
    return h;
  }

  HopfStarAlgebra group_algebra(const FiniteGroup& g) {
    const std::size_t n = g.order();
    HopfStarAlgebra   h;
    h.name   = "group_algebra:" + g.name();
    h.dim    = n;
    h.family = AlgebraFamily::group;
    h.source = g;
    h.mult   = Matrix(n, n * n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t s = 0; s < n; ++s) h.mult.set(g.mul(r, s), r * n + s, Scalar(1));
    }
    h.unit   = hopfcoh::unit_vector(n, 0);
    h.comult = Matrix(n * n, n);
    for (std::size_t r = 0; r < n; ++r) h.comult.set(r * n + r, r, Scalar(1));
    h.counit = Vector(n, Scalar(1));
    h.star   = Matrix::permutation(n, g.inverse());
    for (const auto& l : g.labels()) h.labels.push_back("l_" + l);
    return h;
  }

  HopfStarAlgebra dual_hopf(const HopfStarAlgebra& h) {
    validate_shapes(h);
    if (!h.counit) throw StructureError("dual_hopf: " + h.name + " has no counit");
    HopfStarAlgebra out;
    out.name   = "dual:" + h.name;
    out.dim    = h.dim;
    out.family = AlgebraFamily::dual;
    out.mult   = h.comult.transpose();
    out.comult = h.mult.transpose();
    out.unit   = h.counit;
    out.counit = h.unit;
    for (std::size_t i = 0; i < h.dim; ++i) {
      out.labels.push_back("f_" + (h.labels.empty() ? std::to_string(i) : h.labels[i]));
    }
    return out;
  }

  HopfStarAlgebra builtin_algebra(const std::string& name) {
    const std::string fn = "function_algebra:";
    const std::string gr = "group_algebra:";
    const std::string du = "dual:";
    if (name.rfind(fn, 0) == 0) return function_algebra(builtin_monoid(name.substr(fn.size())));
    if (name.rfind(gr, 0) == 0) return group_algebra(builtin_group(name.substr(gr.size())));
    if (name.rfind(du, 0) == 0) return dual_hopf(builtin_algebra(name.substr(du.size())));
    throw ParseError("unknown algebra '" + name + "'");
  }

  std::vector<std::string> catalog_algebra_names() {
    std::vector<std::string> out;
    for (const auto& m : catalog_monoid_names()) out.push_back("function_algebra:" + m);
    for (const auto& g : catalog_group_names()) out.push_back("group_algebra:" + g);
    return out;
  }

  bool is_counit(const HopfStarAlgebra& h, const Vector& eps) {
    if (eps.size() != h.dim) return false;
    const Matrix i = Matrix::identity(h.dim);
    const Matrix e = Matrix::row_vector(eps);
    return kron(e, i) * h.comult == i && kron(i, e) * h.comult == i;
  }

  CounitResult counit_find(const HopfStarAlgebra& h) {
    validate_shapes(h);
    const std::size_t d = h.dim;
    // Unknown eps_a; equation (j, i): sum_a comult[(a, j), i] eps_a = [i == j].
    Matrix a(d * d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (const auto& e : h.comult.column(i)) {
        std::size_t aa = e.row / d;
        std::size_t j  = e.row % d;
        a.set(j * d + i, aa, e.value);
      }
    }
    Vector rhs(d * d);
    for (std::size_t i = 0; i < d; ++i) rhs[i * d + i] = Scalar(1);
    CounitResult out;
    auto         sol = solve(a, rhs);
    if (!sol) {
      out.certificate = std::move(sol.certificate);
      return out;
    }
    out.unique = image_rank(a) == d;
    const Matrix i = Matrix::identity(d);
    out.two_sided  = kron(i, Matrix::row_vector(*sol.solution)) * h.comult == i;
    out.counit     = std::move(sol.solution);
    return out;
  }

  HaarResult haar_state(const HopfStarAlgebra& h) {
    validate_shapes(h);
    const std::size_t d = h.dim;
    HaarResult        out;
    if (!h.unit) return out;
    const Vector& u = *h.unit;
    // Unknown phi_a; equation (j, i): sum_a phi_a comult[(a, j), i] - phi_i u_j = 0,
    // followed by phi(1) = 1.
    Matrix a(d * d + 1, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (const auto& e : h.comult.column(i)) {
        std::size_t aa = e.row / d;
        std::size_t j  = e.row % d;
        a.set(j * d + i, aa, a.at(j * d + i, aa) + e.value);
      }
      for (std::size_t j = 0; j < d; ++j) {
        if (!u[j].is_zero()) a.set(j * d + i, i, a.at(j * d + i, i) - u[j]);
      }
      a.set(d * d, i, u[i]);
    }
    Vector rhs(d * d + 1);
    rhs[d * d] = Scalar(1);
    auto sol   = solve(a, rhs);
    if (!sol) {
      out.certificate = std::move(sol.certificate);
      return out;
    }
    out.unique = image_rank(a) == d;
    Vector phi = *sol.solution;

    if (h.family == AlgebraFamily::function) {
      bool real = true;
      for (std::size_t j = 0; j < a.cols(); ++j) {
        for (const auto& e : a.column(j)) real = real && e.value.is_real();
      }
      if (out.unique || !real) {
        bool nonneg = true;
        for (const auto& x : phi) nonneg = nonneg && x.is_real() && sgn(x.re()) >= 0;
        out.positivity = nonneg ? Positivity::positive
                                : (out.unique ? Positivity::not_positive : Positivity::unknown);
      } else {
        RationalVector b(rhs.size());
        for (std::size_t k = 0; k < rhs.size(); ++k) b[k] = rhs[k].re();
        auto lp = simplex_feasibility(to_rational(a), b);
        if (lp.feasible) {
          phi.assign(d, Scalar());
          for (std::size_t k = 0; k < d; ++k) phi[k] = Scalar(lp.point[k]);
          out.positivity = Positivity::positive;
        } else {
          out.positivity = Positivity::not_positive;
        }
      }
    } else if (h.family == AlgebraFamily::group && out.unique && h.source && h.source->is_group()) {
      const auto& g   = *h.source;
      const auto& inv = g.inverse();
      Matrix      gram(d, d);
      for (std::size_t x = 0; x < d; ++x) {
        for (std::size_t y = 0; y < d; ++y) gram.set(x, y, phi[g.mul(inv[x], y)]);
      }
      bool hermitian = gram == gram.conjugate_transpose();
      out.positivity = hermitian && psd_check(gram).psd ? Positivity::positive : Positivity::not_positive;
    }

    if (out.positivity == Positivity::not_positive) {
      out.non_positive_solution = std::move(phi);
    } else {
      out.state = std::move(phi);
    }
    return out;
  }

}  // namespace hopfcoh
