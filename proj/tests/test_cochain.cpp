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
#include "hopfcoh/cochain.hpp"
#include "hopfcoh/error.hpp"
#include "hopfcoh/linalg.hpp"

using namespace hopfcoh;

namespace {

  // Digits of a flat multi-index, first leg most significant.
  std::vector<std::size_t> digits(std::size_t s, std::size_t d, std::size_t n) {
    std::vector<std::size_t> out(n);
    for (std::size_t i = n; i-- > 0;) {
      out[i] = s % d;
      s /= d;
    }
    return out;
  }

  std::size_t flat(const std::vector<std::size_t>& dg, std::size_t d) {
    std::size_t s = 0;
    for (auto v : dg) s = s * d + v;
    return s;
  }

  // Natural coboundary evaluated leg by leg on basis tensors.
  Matrix natural_oracle(const Bicomodule& b, std::size_t n) {
    const std::size_t dx = b.dim();
    const std::size_t d  = b.algebra().dim;
    const auto        dn = power(d, n);
    const auto        dn1 = dn * d;
    auto        beta  = b.beta().to_dense_rows();
    auto        gamma = b.gamma().to_dense_rows();
    auto        delta = b.algebra().comult.to_dense_rows();
    Matrix      out(dx * dn1, dx * dn);
    auto bump = [&](std::size_t r, std::size_t c, const Scalar& v) { out.set(r, c, out.at(r, c) + v); };
    for (std::size_t x = 0; x < dx; ++x) {
      for (std::size_t s = 0; s < dn; ++s) {
        auto sd = digits(s, d, n);
        std::size_t col = x * dn + s;
        for (std::size_t y = 0; y < dx; ++y) {
          for (std::size_t u = 0; u < d; ++u) {
            std::vector<std::size_t> t{u};
            t.insert(t.end(), sd.begin(), sd.end());
            bump(y * dn1 + flat(t, d), col, beta[y * d + u][x]);
            std::vector<std::size_t> w = sd;
            w.push_back(u);
            Scalar g = gamma[u * dx + y][x];
            bump(y * dn1 + flat(w, d), col, n % 2 == 0 ? -g : g);
          }
        }
        for (std::size_t k = 1; k <= n; ++k) {
          for (std::size_t a = 0; a < d; ++a) {
            for (std::size_t c = 0; c < d; ++c) {
              std::vector<std::size_t> t(sd.begin(), sd.begin() + (k - 1));
              t.push_back(a);
              t.push_back(c);
              t.insert(t.end(), sd.begin() + k, sd.end());
              Scalar v = delta[a * d + c][sd[k - 1]];
              bump(x * dn1 + flat(t, d), col, k % 2 == 0 ? v : -v);
            }
          }
        }
      }
    }
    return out;
  }

  // Plain dense Gaussian elimination.
  std::size_t rank_oracle(const Matrix& m) {
    auto        a = m.to_dense_rows();
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
      std::size_t p = r;
      while (p < a.size() && a[p][c].is_zero()) ++p;
      if (p == a.size()) continue;
      std::swap(a[p], a[r]);
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][c].is_zero()) continue;
        Scalar f = a[i][c] / a[r][c];
        for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
      }
      ++r;
    }
    return r;
  }

  std::size_t conjugacy_classes(const FiniteGroup& g) {
    const std::size_t n = g.order();
    std::vector<int>  seen(n, 0);
    std::size_t       classes = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (seen[x]) continue;
      ++classes;
      for (std::size_t h = 0; h < n; ++h) {
        for (std::size_t hi = 0; hi < n; ++hi) {
          if (g.mul(h, hi) == 0) seen[g.mul(g.mul(h, x), hi)] = 1;
        }
      }
    }
    return classes;
  }

  Vector random_cocycle(const Matrix& d_n, std::mt19937& rng) {
    auto   kernel = kernel_basis(d_n);
    Vector v(d_n.cols());
    std::uniform_int_distribution<int> coef(-3, 3);
    for (const auto& k : kernel) v = add(v, scale(k, Scalar(coef(rng))));
    return v;
  }

  std::vector<Bicomodule> small_catalog() {
    std::vector<Bicomodule> out;
    for (const auto& name : catalog_algebra_names()) {
      auto h = share(builtin_algebra(name));
      if (h->dim > 4) continue;
      for (auto& b : catalog_bicomodules(h)) {
        if (b.dim() <= 4) out.push_back(std::move(b));
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("degree cap") {
  auto h = share(builtin_algebra("group_algebra:Z2"));
  auto b = catalog_bicomodules(h).front();
  CHECK_NOTHROW(natural_coboundary(b, 2, 3));
  CHECK_THROWS_AS(natural_coboundary(b, 3, 3), DegreeCapError);
  CHECK_THROWS_AS(dual_coboundary(b, 3, 3), DegreeCapError);
  CHECK_THROWS_AS(bar_coboundary(b, 3, 3), DegreeCapError);
  CHECK_THROWS_AS(build_complex(b, ComplexKind::dual, 3), DegreeCapError);
  CHECK_NOTHROW(build_complex(b, ComplexKind::dual, 3, 4));
}

TEST_CASE("natural coboundary matches the leg-by-leg oracle") {
  for (const auto& b : small_catalog()) {
    for (std::size_t n = 0; n <= 2; ++n) {
      INFO(b.algebra().name << " " << b.label() << " n=" << n);
      CHECK(natural_coboundary(b, n) == natural_oracle(b, n));
    }
  }
}

TEST_CASE("degree-zero dual coboundary by hand") {
  // D_0 T = (T (x) id) beta - (id (x) T) gamma for T in X*.
  for (const auto& b : small_catalog()) {
    const std::size_t dx = b.dim();
    const std::size_t d  = b.algebra().dim;
    Matrix            d0 = dual_coboundary(b, 0);
    for (std::size_t y = 0; y < dx; ++y) {
      Vector t      = unit_vector(dx, y);
      Matrix tr     = Matrix::row_vector(t);
      Matrix expect = kron(tr, Matrix::identity(d)) * b.beta() - kron(Matrix::identity(d), tr) * b.gamma();
      CHECK(d0.apply(t) == map_as_cochain(expect));
    }
  }
}

TEST_CASE("chain property for all four complexes") {
  for (const auto& b : small_catalog()) {
    INFO(b.algebra().name << " " << b.label());
    for (auto kind : {ComplexKind::natural, ComplexKind::dual, ComplexKind::bar}) {
      auto cx = build_complex(b, kind, 2);
      CHECK_NOTHROW(cx.verify_chain_property());
      CHECK(cx.dims.size() == 4);
    }
    if (b.algebra().unit) {
      auto cx = build_complex(b, ComplexKind::restricted, 2);
      CHECK_NOTHROW(cx.verify_chain_property());
    }
  }
}

TEST_CASE("dual complex agrees with the natural complex of the dual bicomodule") {
  for (const auto& b : small_catalog()) {
    for (std::size_t n = 0; n <= 2; ++n) {
      INFO(b.algebra().name << " " << b.label() << " n=" << n);
      auto r = identify_dual_natural(b, n);
      CHECK(r.holds);
      CHECK(r.dim_h_left == r.dim_h_right);
    }
  }
}

TEST_CASE("dual complex agrees with the bar complex of the dual algebra") {
  for (const auto& b : small_catalog()) {
    for (std::size_t n = 0; n <= 2; ++n) {
      INFO(b.algebra().name << " " << b.label() << " n=" << n);
      auto r = identify_dual_bar(b, n);
      CHECK(r.holds);
      CHECK_FALSE(r.mismatch.has_value());
    }
  }
}

TEST_CASE("bar boundary squares to zero on raw modules") {
  // C[Z3] acting on itself on both sides.
  auto   h = builtin_algebra("group_algebra:Z3");
  Matrix p = h.mult;
  for (std::size_t n = 1; n <= 3; ++n) {
    Matrix d1 = bar_boundary(p, p, p, n);
    Matrix d2 = bar_boundary(p, p, p, n + 1);
    CHECK((d1 * d2).is_zero());
  }
  CHECK_THROWS_AS(bar_boundary(p, p, p, 0), DimensionError);
}

TEST_CASE("cohomology dimensions match a dense rank oracle") {
  for (const auto& b : small_catalog()) {
    auto cx = build_complex(b, ComplexKind::dual, 2);
    for (std::size_t n = 0; n <= 2; ++n) {
      INFO(b.algebra().name << " " << b.label() << " n=" << n);
      auto        r      = cohomology(cx, n);
      std::size_t kernel = cx.dims[n] - rank_oracle(cx.boundaries[n]);
      std::size_t image  = n == 0 ? 0 : rank_oracle(cx.boundaries[n - 1]);
      CHECK(r.dim_h == kernel - image);
      CHECK(r.dim_kernel == kernel);
      CHECK(r.representatives.size() == r.dim_h);
      for (const auto& v : r.representatives) {
        CHECK(is_zero(cx.boundaries[n].apply(v)));
        if (n > 0) CHECK_FALSE(coboundary_preimage(cx.boundaries[n - 1], v).has_value());
      }
    }
  }
}

TEST_CASE("degree-zero natural cohomology counts conjugacy classes") {
  for (const auto& name : catalog_group_names()) {
    auto g  = builtin_group(name);
    auto fh = share(function_algebra(g));
    auto gh = share(group_algebra(g));
    auto fr = catalog_bicomodules(fh).front();
    auto gr = catalog_bicomodules(gh).front();
    REQUIRE(fr.label() == "regular");
    INFO(name);
    CHECK(cohomology(nullptr, natural_coboundary(fr, 0), 0).dim_h == conjugacy_classes(g));
    CHECK(cohomology(nullptr, natural_coboundary(gr, 0), 0).dim_h == g.order());
  }
}

TEST_CASE("representatives are canonical") {
  auto h  = share(builtin_algebra("function_algebra:left_zero2"));
  auto b  = catalog_bicomodules(h).front();
  auto c1 = build_complex(b, ComplexKind::dual, 2);
  auto c2 = build_complex(b, ComplexKind::dual, 2);
  for (std::size_t n = 0; n <= 2; ++n) {
    CHECK(cohomology(c1, n).representatives == cohomology(c2, n).representatives);
  }
}

TEST_CASE("counit homotopies contract the one-sided complexes") {
  std::mt19937 rng(7);
  for (const auto& name : catalog_algebra_names()) {
    auto h = share(builtin_algebra(name));
    if (!h->counit || h->dim > 4) continue;
    for (const auto& b : catalog_bicomodules(h)) {
      if (b.dim() > 4) continue;
      Bicomodule one = with_zero_left(b);
      for (std::size_t n = 1; n <= 2; ++n) {
        INFO(name << " " << b.label() << " n=" << n);
        Vector t = random_cocycle(dual_coboundary(one, n, n + 1), rng);
        auto   p = homotopy_from_counit(one, n, t);
        CHECK(dual_coboundary(one, n - 1).apply(p.primitive) == scale(t, Scalar(p.sign)));
        Vector m = random_cocycle(natural_coboundary(one, n, n + 1), rng);
        auto   q = natural_homotopy_from_counit(one, n, m);
        CHECK(natural_coboundary(one, n - 1).apply(q.primitive) == m);
        Matrix prev = natural_coboundary(one, n - 1);
        CHECK(cohomology(&prev, natural_coboundary(one, n), n).dim_h == 0);
      }
    }
  }
}

TEST_CASE("Haar homotopy contracts the restricted complex") {
  std::mt19937 rng(11);
  for (const auto& name : catalog_algebra_names()) {
    auto h = share(builtin_algebra(name));
    if (h->dim > 4) continue;
    auto haar = haar_state(*h);
    if (!haar.state || !h->unit) continue;
    for (const auto& b : catalog_bicomodules(h)) {
      if (b.dim() > 4) continue;
      Bicomodule r = with_trivial_left(b);
      for (std::size_t n = 1; n <= 2; ++n) {
        INFO(name << " " << b.label() << " n=" << n);
        Vector t = random_cocycle(dual_coboundary(r, n, n + 1), rng);
        auto   p = homotopy_from_haar(r, n, t, *haar.state);
        CHECK(p.sign == (n % 2 == 0 ? 1 : -1));
      }
    }
  }
}

TEST_CASE("homotopies reject non-cocycles") {
  auto       h   = share(builtin_algebra("group_algebra:Z2"));
  Bicomodule one = with_zero_left(catalog_bicomodules(h).front());
  Matrix     d1  = dual_coboundary(one, 1);
  Vector     bad;
  for (std::size_t j = 0; j < d1.cols() && bad.empty(); ++j) {
    Vector e = unit_vector(d1.cols(), j);
    if (!is_zero(d1.apply(e))) bad = e;
  }
  REQUIRE_FALSE(bad.empty());
  CHECK_THROWS_AS(homotopy_from_counit(one, 1, bad), ConsistencyError);
}
