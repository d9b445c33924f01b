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

#include <random>

#include "doctest.h"
#include "hopfcoh/comodule.hpp"
#include "hopfcoh/error.hpp"

using namespace hopfcoh;

namespace {

  HopfPtr group(const char* name) { return share(group_algebra(builtin_group(name))); }
  HopfPtr functions(const char* name) { return share(function_algebra(builtin_monoid(name))); }

  // beta(e_x) = e_x (x) lambda_{grade[x]}
  Matrix graded_beta(std::size_t d, const std::vector<std::size_t>& grade) {
    Matrix beta(grade.size() * d, grade.size());
    for (std::size_t x = 0; x < grade.size(); ++x) beta.set(x * d + grade[x], x, Scalar(1));
    return beta;
  }

  Matrix inverse(const Matrix& p) {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < p.cols(); ++j) {
      auto sol = solve(p, unit_vector(p.rows(), j));
      REQUIRE(sol);
      cols.push_back(*sol.solution);
    }
    return Matrix::from_column_vectors(p.rows(), cols);
  }

  Matrix projection(const RightCoaction& c, std::size_t r) {
    return kron(Matrix::identity(c.dim()), Matrix::row_vector(unit_vector(c.algebra().dim, r))) *
           c.matrix();
  }

}  // namespace

TEST_CASE("non-degeneracy") {
  auto z3 = group("Z3");
  auto t  = check_nondegenerate(trivial_right_coaction(z3, 2));
  CHECK(t.left);
  CHECK(t.right);
  auto z = check_nondegenerate(zero_right_coaction(z3, 2));
  CHECK_FALSE(z.left);
  CHECK_FALSE(z.right);

  auto          z2 = group("Z2");
  RightCoaction graded(z2, graded_beta(2, {0, 1}));
  auto          g = check_nondegenerate(graded);
  CHECK(g.left);
  CHECK(g.right);

  auto lz = share(function_algebra(builtin_monoid("left_zero2")));
  auto r  = check_nondegenerate(regular_right_coaction(lz));
  // delta(f) = f (x) 1 still spans X (x) S under right multiplication.
  CHECK(r.right);
}

TEST_CASE("trivial left coaction") {
  auto          z2 = group("Z2");
  LeftCoaction  g  = trivial_left_coaction(z2, 1);
  CHECK(g.matrix().column_dense(0) == Vector{Scalar(1), Scalar(0)});

  for (const auto& name : catalog_algebra_names()) {
    auto h = share(builtin_algebra(name));
    for (const auto& b : catalog_bicomodules(h)) {
      CHECK_FALSE(bicomodule_defect(*h, b.beta(), trivial_left_coaction(h, b.dim()).matrix()));
    }
  }

  auto z3f = functions("Z3");
  auto g3  = trivial_left_coaction(z3f, 1);
  CHECK(g3.matrix().column_dense(0) == Vector(3, Scalar(1)));
}

TEST_CASE("quotient comodules") {
  auto z3f = functions("Z3");
  auto reg = regular_right_coaction(z3f);

  auto same = quotient_comodule(reg, {});
  CHECK(same.coaction.matrix() == reg.matrix());

  std::vector<Vector> all;
  for (std::size_t i = 0; i < 3; ++i) all.push_back(unit_vector(3, i));
  auto none = quotient_comodule(reg, all);
  CHECK(none.coaction.dim() == 0);

  auto unit = quotient_comodule(reg, {*z3f->unit});
  CHECK(unit.coaction.dim() == 2);
  CHECK(unit.quotient * unit.section == Matrix::identity(2));
  CHECK(is_zero(unit.quotient.apply(*z3f->unit)));
  // beta_hat q = (q (x) id) beta
  CHECK(unit.coaction.matrix() * unit.quotient == kron(unit.quotient, Matrix::identity(3)) * reg.matrix());

  CHECK_THROWS_AS(quotient_comodule(reg, {unit_vector(3, 1)}), StructureError);
}

TEST_CASE("grade decomposition") {
  auto z2   = group("Z2");
  auto triv = grade_decomposition(trivial_right_coaction(z2, 3));
  CHECK(triv[0].size() == 3);
  CHECK(triv[1].empty());

  RightCoaction graded(z2, graded_beta(2, {0, 1}));
  auto          parts = grade_decomposition(graded);
  REQUIRE(parts[0].size() == 1);
  REQUIRE(parts[1].size() == 1);
  CHECK(parts[0][0] == unit_vector(2, 0));
  CHECK(parts[1][0] == unit_vector(2, 1));

  for (const char* g : {"Z2", "Z3", "S3"}) {
    auto h = group(g);
    for (const auto& b : catalog_bicomodules(h)) {
      if (!b.beta_nondegenerate().any()) continue;
      CAPTURE(b.label());
      std::size_t total = 0;
      for (const auto& p : grade_decomposition(b.right())) total += p.size();
      CHECK(total == b.dim());
      for (std::size_t r = 0; r < h->dim; ++r) {
        Matrix pr = projection(b.right(), r);
        CHECK(pr * pr == pr);
        for (std::size_t s = 0; s < h->dim; ++s) {
          if (s != r) CHECK((pr * projection(b.right(), s)).is_zero());
        }
      }
    }
  }
  CHECK_THROWS_AS(grade_decomposition(regular_right_coaction(functions("Z2"))), StructureError);
}

TEST_CASE("dual coactions") {
  auto z3 = group("Z3");
  // Dual of x (x) 1 is f |-> 1 (x) f.
  CHECK(dual_coaction(trivial_right_coaction(z3, 2)).matrix() == trivial_left_coaction(z3, 2).matrix());

  for (const auto& name : catalog_algebra_names()) {
    auto h = share(builtin_algebra(name));
    for (const auto& b : catalog_bicomodules(h)) {
      CHECK(dual_coaction(dual_coaction(b.right())).matrix() == b.beta());
      CHECK(dual_coaction(dual_coaction(b.left())).matrix() == b.gamma());
      CHECK_NOTHROW(dual_bicomodule(b));
    }
  }

  SUBCASE("graded pairing") {
    for (const char* g : {"Z2", "Z3"}) {
      auto                     h = group(g);
      std::vector<std::size_t> grade;
      for (std::size_t i = 0; i < 2 * h->dim; ++i) grade.push_back(i % h->dim);
      RightCoaction c(h, graded_beta(h->dim, grade));
      auto          xs = grade_decomposition(c);
      auto          fs = grade_decomposition(dual_coaction(c));
      for (std::size_t r = 0; r < h->dim; ++r) {
        CHECK(fs[r].size() == xs[r].size());
        for (std::size_t s = 0; s < h->dim; ++s) {
          for (const auto& f : fs[r]) {
            for (const auto& x : xs[s]) {
              if (s != r) CHECK(dot(f, x).is_zero());
            }
          }
        }
      }
    }
  }
}

TEST_CASE("module and coaction correspondence") {
  auto z3 = group("Z3");
  // x (x) 1 gives w.x = w(1) x.
  Matrix l = module_from_coaction(trivial_right_coaction(z3, 2));
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t x = 0; x < 2; ++x) {
      for (std::size_t y = 0; y < 2; ++y) {
        CHECK(l.at(y, a * 2 + x) == (x == y ? (*z3->unit)[a] : Scalar(0)));
      }
    }
  }

  std::mt19937                        rng(5);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (int t = 0; t < 5; ++t) {
    Matrix p = Matrix::identity(3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) p.set(i, j, Scalar(coef(rng)));
    }
    Matrix        beta = kron(p, Matrix::identity(3)) * graded_beta(3, {std::size_t(t % 3), 1, 2}) * inverse(p);
    RightCoaction c(z3, beta);
    CHECK(coaction_from_left_module(z3, module_from_coaction(c)).matrix() == beta);
    CHECK_FALSE(left_module_defect(*z3, left_action(c)));

    Matrix       gamma = kron(Matrix::identity(3), p) *
                   dual_coaction(RightCoaction(z3, graded_beta(3, {0, 2, 1}))).matrix() * inverse(p);
    LeftCoaction lc(z3, gamma);
    CHECK(coaction_from_right_module(z3, module_from_coaction(lc)).matrix() == gamma);
    CHECK_FALSE(right_module_defect(*z3, right_action(lc)));
  }

  SUBCASE("associativity fails exactly when the coaction identity fails") {
    auto   z2  = group("Z2");
    Matrix bad = graded_beta(2, {0, 1});
    bad.set(0 * 2 + 1, 0, Scalar(1));  // e_0 -> e_0 (x) (l_e + l_a)
    CHECK(right_coaction_defect(*z2, bad));
    Matrix l2(2, 4);
    for (std::size_t x = 0; x < 2; ++x) {
      for (const auto& e : bad.column(x)) l2.set(e.row / 2, (e.row % 2) * 2 + x, e.value);
    }
    CHECK(left_module_defect(*z2, l2));
    CHECK_THROWS_AS(RightCoaction(z2, bad), StructureError);
  }
  CHECK_THROWS_AS(module_from_coaction(regular_right_coaction(functions("left_zero2"))), StructureError);
}

TEST_CASE("catalog bicomodules") {
  auto z2  = group("Z2");
  auto cat = catalog_bicomodules(z2);
  CHECK(cat.front().label() == "regular");

  auto z3 = group("Z3");
  auto pg = pair_graded_bicomodule(z3);
  CHECK(pg.dim() == 9);
  CHECK(pg.has_nondegenerate_side());
  CHECK(pg.beta_nondegenerate().left);
  CHECK(pg.gamma_nondegenerate().right);

  for (const auto& name : catalog_algebra_names()) {
    auto h = share(builtin_algebra(name));
    for (const auto& b : catalog_bicomodules(h)) {
      CAPTURE(name);
      CAPTURE(b.label());
      CHECK_FALSE(right_coaction_defect(*h, b.beta()));
      CHECK_FALSE(left_coaction_defect(*h, b.gamma()));
      CHECK_FALSE(bicomodule_defect(*h, b.beta(), b.gamma()));
    }
  }
}
