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
#include "hopfcoh/amenability.hpp"
#include "hopfcoh/error.hpp"

using namespace hopfcoh;

namespace {

  // {x : a x = b, x >= 0} by substitution of the equalities followed by
  // Fourier-Motzkin elimination. Inequalities are stored as c x <= r.
  bool fm_feasible(RationalMatrix a, RationalVector b) {
    const std::size_t n = a.empty() ? 0 : a[0].size();
    struct Ineq {
      RationalVector c;
      Rational       r;
    };
    std::vector<Ineq> ineqs;
    for (std::size_t k = 0; k < n; ++k) {
      RationalVector c(n, Rational(0));
      c[k] = -1;
      ineqs.push_back({c, Rational(0)});
    }
    std::vector<char> gone(n, 0);
    for (std::size_t e = 0; e < a.size(); ++e) {
      std::size_t k = n;
      for (std::size_t j = 0; j < n && k == n; ++j) {
        if (a[e][j] != 0) k = j;
      }
      if (k == n) {
        if (b[e] != 0) return false;
        continue;
      }
      // x_k = (b_e - sum_{j != k} a_ej x_j) / a_ek
      const Rational piv = a[e][k];
      auto substitute = [&](RationalVector& c, Rational& r) {
        if (c[k] == 0) return;
        Rational f = c[k] / piv;
        for (std::size_t j = 0; j < n; ++j) c[j] -= f * a[e][j];
        r -= f * b[e];
      };
      for (std::size_t o = e + 1; o < a.size(); ++o) substitute(a[o], b[o]);
      for (auto& q : ineqs) substitute(q.c, q.r);
      gone[k] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (gone[k]) continue;
      std::vector<Ineq> pos, neg, rest;
      for (auto& q : ineqs) {
        if (q.c[k] > 0) pos.push_back(q);
        else if (q.c[k] < 0) neg.push_back(q);
        else rest.push_back(q);
      }
      for (const auto& p : pos) {
        for (const auto& m : neg) {
          Rational       fp = -m.c[k];
          Rational       fm = p.c[k];
          RationalVector c(n);
          for (std::size_t j = 0; j < n; ++j) c[j] = fp * p.c[j] + fm * m.c[j];
          rest.push_back({c, fp * p.r + fm * m.r});
        }
      }
      ineqs = std::move(rest);
    }
    for (const auto& q : ineqs) {
      if (q.r < 0) return false;
    }
    return true;
  }

  Matrix module_identity_gap(const HopfStarAlgebra& h, const Vector& f) {
    const std::size_t d  = h.dim;
    Matrix            fr = Matrix::row_vector(f);
    Matrix            id = Matrix::identity(d);
    return kron(fr, id) * kron(id, h.comult) - kron(id, fr) * kron(h.comult, id);
  }

  Vector random_vector(std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-4, 4);
    Vector                             v(n);
    for (auto& x : v) x = Scalar(c(rng));
    return v;
  }

}  // namespace

TEST_CASE("codiagonal system agrees with the tensor form of the identities") {
  std::mt19937 rng(3);
  for (const auto& name : catalog_algebra_names()) {
    auto h = builtin_algebra(name);
    if (!h.counit) continue;
    INFO(name);
    Vector f   = random_vector(h.dim * h.dim, rng);
    auto   c   = check_codiagonal(h, f);
    Matrix gap = module_identity_gap(h, f);
    const std::size_t d = h.dim;
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t pq = 0; pq < d * d; ++pq) CHECK(c.module_residual[j * d * d + pq] == gap.at(j, pq));
    }
    CHECK(c.counit_residual == subtract(h.comult.pull_back(f), *h.counit));
  }
}

TEST_CASE("find_codiagonal returns exact solutions") {
  for (const auto& name : catalog_algebra_names()) {
    auto h = builtin_algebra(name);
    auto s = find_codiagonal(h);
    INFO(name);
    CHECK(s.has_counit == h.counit.has_value());
    if (!s.codiagonal) {
      if (s.has_counit) {
        Vector rhs;
        Matrix a = codiagonal_system(h, rhs);
        CHECK(verify_inconsistency(a, rhs, s.certificate));
      }
      continue;
    }
    CHECK(s.codiagonal->exact());
    CHECK(module_identity_gap(h, s.codiagonal->functional).is_zero());
  }
  auto trivial = find_codiagonal(builtin_algebra("group_algebra:trivial"));
  REQUIRE(trivial.codiagonal);
  CHECK(trivial.codiagonal->functional == Vector{Scalar(1)});
  CHECK(find_codiagonal(builtin_algebra("function_algebra:S3")).codiagonal.has_value());
  CHECK_FALSE(find_codiagonal(builtin_algebra("function_algebra:right_zero_identity3")).codiagonal);
}

TEST_CASE("Kronecker codiagonal") {
  for (const auto& name : {"Z2", "Z3", "S3"}) {
    auto g = builtin_group(name);
    auto k = kronecker_codiagonal(g);
    INFO(name);
    CHECK(k.certificate.exact());
    REQUIRE(k.certificate.positive.has_value());
    CHECK(*k.certificate.positive);
    CHECK(k.block_structure);
    CHECK(k.blocks == g.order());

    // Gram entry [r_i^{-1} r_j = s_i^{-1} s_j], from the Cayley table alone.
    const std::size_t d = g.order();
    auto inv = [&](std::size_t x) {
      for (std::size_t y = 0; y < d; ++y) {
        if (g.mul(x, y) == 0) return y;
      }
      return d;
    };
    for (std::size_t i = 0; i < d * d; ++i) {
      for (std::size_t j = 0; j < d * d; ++j) {
        bool same = g.mul(inv(i / d), j / d) == g.mul(inv(i % d), j % d);
        CHECK(k.gram.at(i, j) == Scalar(same ? 1 : 0));
      }
    }
    // F o delta on lambda_r is 1.
    auto h = group_algebra(g);
    CHECK(h.comult.pull_back(k.certificate.functional) == Vector(d, Scalar(1)));
  }
  CHECK(kronecker_codiagonal(builtin_group("Z2")).gram.rows() == 4);
}

TEST_CASE("invariant means") {
  for (const auto& name : catalog_group_names()) {
    auto g = builtin_group(name);
    auto s = find_invariant_mean(g);
    INFO(name);
    REQUIRE(s.mean);
    CHECK(s.mean->weights == RationalVector(g.order(), Rational(1, static_cast<long>(g.order()))));
    CHECK(s.vertex_checked);
    CHECK(s.vertex_agrees);
  }

  auto m01 = builtin_monoid("mult01");
  auto s01 = find_invariant_mean(m01);
  REQUIRE(s01.mean);
  CHECK(m01.labels()[1] == "0");
  CHECK(s01.mean->weights == RationalVector{Rational(0), Rational(1)});

  auto rz = builtin_monoid("right_zero_identity3");
  auto sr = find_invariant_mean(rz);
  CHECK_FALSE(sr.mean);
  CHECK(sr.farkas_verified);
  RationalMatrix a;
  RationalVector b;
  mean_system(rz, a, b);
  CHECK(verify_farkas(a, b, sr.farkas));
  CHECK_FALSE(is_invariant_mean(rz, {Rational(0), Rational(1), Rational(0)}));
}

TEST_CASE("LP verdict matches Fourier-Motzkin elimination") {
  for (const auto& name : catalog_monoid_names()) {
    auto           m = builtin_monoid(name);
    RationalMatrix a;
    RationalVector b;
    mean_system(m, a, b);
    INFO(name);
    CHECK(find_invariant_mean(m).mean.has_value() == fm_feasible(a, b));
  }
}

TEST_CASE("codiagonals force vanishing cohomology") {
  for (const auto& name : catalog_algebra_names()) {
    auto h = share(builtin_algebra(name));
    auto r = check_codiagonal_vanishing(h);
    INFO(name);
    for (const auto& f : r.failures) INFO(f);
    CHECK(r.passed());
    if (r.has_codiagonal) {
      CHECK_FALSE(r.entries.empty());
      for (const auto& e : r.entries) {
        CHECK(e.dim_h == 0);
        REQUIRE(e.homotopy_sign.has_value());
        int expect = e.route == CodiagonalRoute::beta || e.degree % 2 == 0 ? 1 : -1;
        CHECK(*e.homotopy_sign == expect);
      }
    }
  }
  auto lz = check_codiagonal_vanishing(share(builtin_algebra("function_algebra:left_zero2")));
  CHECK_FALSE(lz.has_counit);
  REQUIRE(lz.entries.size() == 1);
  CHECK(lz.entries[0].dim_h > 0);
}

TEST_CASE("graded cocycles on the pair-graded bicomodule") {
  for (const auto& name : catalog_group_names()) {
    auto g = builtin_group(name);
    auto r = check_graded_cocycles(g);
    INFO(name);
    CHECK(r.passed());
    CHECK(r.dim_h1 == 0);
    CHECK(r.diagonal_zero == r.cocycles * g.order());
  }
  CHECK(check_graded_cocycles(builtin_group("Z3")).cocycles > 0);
}

TEST_CASE("invariant means and the canonical cocycle") {
  for (const auto& name : catalog_monoid_names()) {
    auto m = builtin_monoid(name);
    if (!m.has_identity()) {
      CHECK_THROWS_AS(check_mean_cohomology(m), StructureError);
      continue;
    }
    auto r = check_mean_cohomology(m);
    INFO(name);
    CHECK(r.passed());
    CHECK(r.cocycle_verified);
    CHECK(r.mean_exists == r.is_coboundary);
    CHECK(r.mean_exists == r.all_h1_vanish);
    if (r.mean_exists) CHECK(r.explicit_primitive);
    else CHECK(r.rank_increase);
  }
  auto z3 = check_mean_cohomology(builtin_monoid("Z3"));
  CHECK(z3.mean_exists);
  CHECK(z3.explicit_primitive);
  auto rz = check_mean_cohomology(builtin_monoid("right_zero_identity3"));
  CHECK_FALSE(rz.mean_exists);
  CHECK_FALSE(rz.is_coboundary);
  CHECK(rz.rank_increase);
  auto tr = check_mean_cohomology(builtin_monoid("trivial"));
  CHECK(tr.quotient_dim == 0);
  CHECK(tr.passed());
}
