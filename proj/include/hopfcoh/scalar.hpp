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
 * Gaussian rationals: the exact scalar field used throughout the library.
 */

#ifndef HOPFCOH_SCALAR_HPP
#define HOPFCOH_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace hopfcoh {

  /// Arbitrary-precision rational, always kept in canonical form.
  using Rational = mpq_class;

  /// Parses "p", "-p" or "p/q". Throws ParseError on malformed text or q = 0.
  Rational parse_rational(std::string_view text);

  /**
   * An element re + im*i of Q(i).
   *
   * Both parts are canonical GMP rationals, so every arithmetic identity
   * holds bit-exactly.
   */
  class Scalar {
   public:
    Scalar() = default;
    Scalar(long value) : re_(value) {}  // NOLINT(runtime/explicit)
    Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(runtime/explicit)
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar fraction(long num, long den);
    static Scalar imaginary_unit() { return Scalar(Rational(0), Rational(1)); }

    [[nodiscard]] const Rational& re() const noexcept { return re_; }
    [[nodiscard]] const Rational& im() const noexcept { return im_; }

    [[nodiscard]] bool is_zero() const noexcept {
      return sgn(re_) == 0 && sgn(im_) == 0;
    }
    [[nodiscard]] bool is_real() const noexcept { return sgn(im_) == 0; }
    [[nodiscard]] bool is_one() const noexcept {
      return sgn(im_) == 0 && re_ == 1;
    }

    [[nodiscard]] Scalar conj() const { return Scalar(re_, -im_); }
    /// |z|^2, always a nonnegative rational.
    [[nodiscard]] Rational norm() const { return re_ * re_ + im_ * im_; }

    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar& operator/=(const Scalar& other);

    /// this += a * b, without a temporary when everything is real.
    void add_product(const Scalar& a, const Scalar& b);
    /// this -= a * b
    void sub_product(const Scalar& a, const Scalar& b);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
      return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// "p/q" for reals, "p/q+r/s i" otherwise. Integers drop the "/1".
    [[nodiscard]] std::string to_string() const;
    static Scalar parse(std::string_view text);

   private:
    Rational re_;
    Rational im_;
  };

  std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hopfcoh

#endif  // HOPFCOH_SCALAR_HPP
