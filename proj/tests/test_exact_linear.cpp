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
#include "hopfcoh/error.hpp"
#include "hopfcoh/linalg.hpp"
#include "hopfcoh/lp.hpp"
#include "hopfcoh/matrix.hpp"
#include "hopfcoh/scalar.hpp"

using namespace hopfcoh;

namespace {

  Scalar random_scalar(std::mt19937& rng, bool complex) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    Scalar                              s = Scalar::fraction(num(rng), den(rng));
    if (complex) s += Scalar::fraction(num(rng), den(rng)) * Scalar::imaginary_unit();
    return s;
  }

  Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, bool complex = false,
                       int zero_percent = 30) {
    std::uniform_int_distribution<int> pct(0, 99);
    Matrix                             m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        if (pct(rng) >= zero_percent) m.set(i, j, random_scalar(rng, complex));
      }
    }
    return m;
  }

  // Laplace expansion along the first row.
  Scalar minor_det(const std::vector<std::vector<Scalar>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return Scalar(1);
    Scalar det;
    for (std::size_t j = 0; j < n; ++j) {
      if (a[0][j].is_zero()) continue;
      std::vector<std::vector<Scalar>> sub;
      for (std::size_t i = 1; i < n; ++i) {
        std::vector<Scalar> row;
        for (std::size_t k = 0; k < n; ++k) {
          if (k != j) row.push_back(a[i][k]);
        }
        sub.push_back(row);
      }
      Scalar term = a[0][j] * minor_det(sub);
      if (j % 2 == 0) {
        det += term;
      } else {
        det -= term;
      }
    }
    return det;
  }

  std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1U) s.push_back(i);
      }
      out.push_back(s);
    }
    return out;
  }

  // Rank as the size of the largest nonvanishing minor.
  std::size_t rank_by_minors(const Matrix& m) {
    auto        dense = m.to_dense_rows();
    std::size_t best  = 0;
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
      bool found = false;
      for (const auto& rs : subsets(m.rows(), k)) {
        for (const auto& cs : subsets(m.cols(), k)) {
          std::vector<std::vector<Scalar>> sub(k, std::vector<Scalar>(k));
          for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = dense[rs[i]][cs[j]];
          }
          if (!minor_det(sub).is_zero()) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) best = k;
    }
    return best;
  }

}  // namespace

TEST_CASE("scalar arithmetic is exact and canonical") {
  Scalar a = Scalar::parse("3/7+2/5 i");
  Scalar b = Scalar::parse("-11/13");
  CHECK((a + b) - b == a);
  CHECK((a * b) / b == a);
  CHECK(Scalar::parse("6/4").to_string() == "3/2");
  CHECK(Scalar::parse("-4/2").to_string() == "-2");
  CHECK_THROWS_AS(Scalar::parse("2/-4"), ParseError);
  CHECK(Scalar::parse("i") == Scalar::imaginary_unit());
  CHECK(Scalar::parse("-i") == -Scalar::imaginary_unit());
  CHECK(Scalar::parse("1/2-3 i").to_string() == "1/2-3 i");
  CHECK(Scalar::parse("5/3 i").to_string() == "5/3 i");
  CHECK(Scalar::imaginary_unit() * Scalar::imaginary_unit() == Scalar(-1));
  CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("abc"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(""), ParseError);

  std::mt19937 rng(7);
  for (int k = 0; k < 200; ++k) {
    Scalar s = random_scalar(rng, true);
    CHECK(Scalar::parse(s.to_string()) == s);
    CHECK(s.re().get_den() > 0);
    CHECK(s.re() == Rational(s.re().get_num(), s.re().get_den()));
  }
}

TEST_CASE("kron of identities and of pure tensors") {
  CHECK(kron(Matrix::identity(2), Matrix::identity(3)) == Matrix::identity(6));

  std::mt19937 rng(11);
  Matrix       a = random_matrix(rng, 3, 2);
  Matrix       b = random_matrix(rng, 2, 4);
  Vector       x = unit_vector(2, 0);
  Vector       y = unit_vector(4, 0);
  CHECK(kron(a, b).apply(kron(x, y)) == kron(a.apply(x), b.apply(y)));
}

TEST_CASE("kron of swap with itself matches brute-force index permutation") {
  Matrix swap = Matrix::permutation(2, std::vector<std::size_t>{1, 0});
  Matrix k    = kron(swap, swap);
  // Factors of dimension 2: e_i (x) e_j has flat index 2 i + j; the swap
  // sends i -> 1 - i on each leg independently.
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      std::size_t src = 2 * i + j;
      std::size_t dst = 2 * (1 - i) + (1 - j);
      for (std::size_t r = 0; r < 4; ++r) CHECK(k.at(r, src) == Scalar(r == dst ? 1 : 0));
    }
  }
  // The same on the 16-dimensional square of the 4-dim space.
  Matrix k2 = kron(k, k);
  for (std::size_t src = 0; src < 16; ++src) {
    std::size_t a = src / 4;
    std::size_t b = src % 4;
    std::size_t dst = (3 - a) * 4 + (3 - b);
    for (std::size_t r = 0; r < 16; ++r) CHECK(k2.at(r, src) == Scalar(r == dst ? 1 : 0));
  }
}

TEST_CASE("mixed product property of kron") {
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    Matrix a = random_matrix(rng, 2, 3, true);
    Matrix b = random_matrix(rng, 3, 2, true);
    Matrix c = random_matrix(rng, 3, 2, true);
    Matrix d = random_matrix(rng, 2, 2, true);
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
  }
}

TEST_CASE("rotation_sigma") {
  SUBCASE("n = 1 is the flip") {
    std::vector<std::size_t> dims{3, 2};
    CHECK(rotation_sigma(1, 1, dims) == swap_legs(2, 3));
  }
  SUBCASE("n = 2, k = 1 against the index formula") {
    // dims: X = 3, S = 2. Source s_2 (x) x (x) s_1, target x (x) s_1 (x) s_2.
    std::vector<std::size_t> dims{3, 2, 2};
    Matrix                   sig = rotation_sigma(2, 1, dims);
    CHECK(sig.rows() == 12);
    CHECK(sig.cols() == 12);
    for (std::size_t s2 = 0; s2 < 2; ++s2) {
      for (std::size_t x = 0; x < 3; ++x) {
        for (std::size_t s1 = 0; s1 < 2; ++s1) {
          std::size_t src = s2 * 6 + x * 2 + s1;
          std::size_t dst = x * 4 + s1 * 2 + s2;
          for (std::size_t r = 0; r < 12; ++r) CHECK(sig.at(r, src) == Scalar(r == dst ? 1 : 0));
        }
      }
    }
  }
  SUBCASE("permutation with transpose as inverse") {
    std::vector<std::size_t> dims{2, 3, 2, 2};
    for (std::size_t k = 1; k <= 3; ++k) {
      Matrix sig = rotation_sigma(3, k, dims);
      CHECK(sig * sig.transpose() == Matrix::identity(24));
      CHECK(sig.transpose() * sig == Matrix::identity(24));
      CHECK(sig.nonzeros() == 24);
    }
  }
  SUBCASE("errors") {
    std::vector<std::size_t> dims{2, 3};
    CHECK_THROWS_AS(rotation_sigma(1, 0, dims), DimensionError);
    CHECK_THROWS_AS(rotation_sigma(1, 2, dims), DimensionError);
    CHECK_THROWS_AS(rotation_sigma(2, 1, dims), DimensionError);
  }
}

TEST_CASE("kernel, rank and solve") {
  SUBCASE("zero matrix has the standard basis as kernel") {
    auto k = kernel_basis(Matrix(3, 3));
    REQUIRE(k.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(k[i] == unit_vector(3, i));
  }
  SUBCASE("identity has full rank") {
    for (std::size_t n = 0; n < 6; ++n) CHECK(image_rank(Matrix::identity(n)) == n);
  }
  SUBCASE("rank-nullity against minor expansion on random 5 x 7") {
    std::mt19937 rng(19);
    for (int t = 0; t < 12; ++t) {
      // Build some rank-deficient cases by multiplying thin factors.
      Matrix m = t % 3 == 0 ? random_matrix(rng, 5, 2) * random_matrix(rng, 2, 7)
                            : random_matrix(rng, 5, 7, t % 2 == 1, 40);
      auto   k = kernel_basis(m);
      CHECK(image_rank(m) == rank_by_minors(m));
      CHECK(image_rank(m) + k.size() == 7);
      for (const auto& v : k) CHECK(is_zero(m.apply(v)));
      CHECK(rref_basis(k, 7) == k);
    }
  }
  SUBCASE("solve with particular solution or certificate") {
    std::mt19937 rng(23);
    for (int t = 0; t < 20; ++t) {
      Matrix m   = random_matrix(rng, 6, 3) * random_matrix(rng, 3, 5);
      Vector rhs = t % 2 == 0 ? m.column_dense(1) : random_matrix(rng, 6, 1).column_dense(0);
      auto sol = solve(m, rhs);
      if (sol) {
        CHECK(m.apply(*sol.solution) == rhs);
      } else {
        CHECK(verify_inconsistency(m, rhs, sol.certificate));
      }
      if (t % 2 == 0) CHECK(sol);
    }
  }
  SUBCASE("column space preimages") {
    std::mt19937 rng(29);
    Matrix       m = random_matrix(rng, 5, 2) * random_matrix(rng, 2, 4);
    ColumnSpace  cs(m);
    Vector       v = m.apply(Vector{Scalar(1), Scalar(-2), Scalar(0), Scalar::fraction(1, 3)});
    auto         x = cs.preimage(v);
    REQUIRE(x);
    CHECK(m.apply(*x) == v);
  }
}

TEST_CASE("psd_check") {
  CHECK(psd_check(Matrix::identity(4)).psd);

  Matrix d = Matrix::from_rows({{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(-1)}});
  auto   r = psd_check(d);
  CHECK_FALSE(r.psd);
  CHECK(r.witness == unit_vector(2, 1));
  CHECK(sgn(hermitian_form(d, r.witness).re()) < 0);

  CHECK_THROWS_AS(psd_check(Matrix::from_rows({{Scalar(0), Scalar(1)}, {Scalar(0), Scalar(0)}})),
                  StructureError);

  SUBCASE("Gram matrix of the Kronecker delta over Z2 pairs") {
    // Pairs (r, s) in Z2 x Z2 with flat index 2 r + s; entry is
    // [r_i^{-1} r_j == s_i^{-1} s_j].
    Matrix g(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        std::size_t ri = i / 2, si = i % 2, rj = j / 2, sj = j % 2;
        g.set(i, j, Scalar((ri ^ rj) == (si ^ sj) ? 1 : 0));
      }
    }
    auto res = psd_check(g);
    CHECK(res.psd);
    CHECK(res.pivots.size() == 2);
  }

  SUBCASE("random Hermitian matrices") {
    std::mt19937 rng(31);
    for (int t = 0; t < 20; ++t) {
      Matrix b = random_matrix(rng, 3, 5, true);
      Matrix p = b.conjugate_transpose() * b;
      CHECK(psd_check(p).psd);
      Matrix shifted = p - Matrix::identity(5) * Scalar(t % 4 + 1);
      auto   res     = psd_check(shifted);
      // rank(p) <= 3 < 5, so p - cI has a negative direction.
      CHECK_FALSE(res.psd);
      CHECK(sgn(hermitian_form(shifted, res.witness).re()) < 0);
    }
  }
  SUBCASE("zero diagonal with off-diagonal mass") {
    Matrix z = Matrix::from_rows({{Scalar(0), Scalar::parse("1+i")}, {Scalar::parse("1-i"), Scalar(0)}});
    auto   res = psd_check(z);
    CHECK_FALSE(res.psd);
    CHECK(sgn(hermitian_form(z, res.witness).re()) < 0);
  }
}

TEST_CASE("exact simplex agrees with vertex search") {
  std::mt19937                       rng(37);
  std::uniform_int_distribution<int> coef(-3, 3);
  int                                feasible = 0;
  for (int t = 0; t < 60; ++t) {
    RationalMatrix a(3, RationalVector(5));
    RationalVector b(3);
    for (auto& row : a) {
      for (auto& x : row) x = coef(rng);
    }
    for (auto& x : b) x = coef(rng);
    auto lp     = simplex_feasibility(a, b);
    auto vertex = vertex_search(a, b);
    CHECK(lp.feasible == vertex.has_value());
    if (lp.feasible) {
      ++feasible;
      CHECK(verify_feasible_point(a, b, lp.point));
      CHECK(verify_feasible_point(a, b, *vertex));
    } else {
      CHECK(verify_farkas(a, b, lp.certificate));
    }
  }
  CHECK(feasible > 5);
  CHECK(feasible < 55);
}
