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

#include "hopfcoh/scalar.hpp"

#include <cctype>
#include <ostream>

#include "hopfcoh/error.hpp"

namespace hopfcoh {

  namespace {
    bool is_digits(std::string_view s) {
      if (s.empty()) {
        return false;
      }
      for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) == 0) {
          return false;
        }
      }
      return true;
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) {
        s.remove_suffix(1);
      }
      return s;
    }
  }  // namespace

  Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
      body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den
        = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den)) {
      throw ParseError("malformed rational \"" + std::string(text) + "\"");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
      throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    }
    if (!s.empty() && s.front() == '-') {
      n = -n;
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
  }

  Scalar Scalar::fraction(long num, long den) {
    if (den == 0) {
      throw std::domain_error("Scalar::fraction: zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
  }

  Scalar& Scalar::operator+=(const Scalar& other) {
    re_ += other.re_;
    if (sgn(other.im_) != 0) {
      im_ += other.im_;
    }
    return *this;
  }

  Scalar& Scalar::operator-=(const Scalar& other) {
    re_ -= other.re_;
    if (sgn(other.im_) != 0) {
      im_ -= other.im_;
    }
    return *this;
  }

  Scalar& Scalar::operator*=(const Scalar& other) {
    if (is_real() && other.is_real()) {
      re_ *= other.re_;
      return *this;
    }
    Rational re = re_ * other.re_ - im_ * other.im_;
    Rational im = re_ * other.im_ + im_ * other.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  Scalar& Scalar::operator/=(const Scalar& other) {
    if (other.is_zero()) {
      throw std::domain_error("Scalar: division by zero");
    }
    if (other.is_real()) {
      re_ /= other.re_;
      if (sgn(im_) != 0) {
        im_ /= other.re_;
      }
      return *this;
    }
    Rational n = other.norm();
    *this *= other.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }

  void Scalar::add_product(const Scalar& a, const Scalar& b) {
    if (a.is_real() && b.is_real()) {
      re_ += a.re_ * b.re_;
      return;
    }
    *this += a * b;
  }

  void Scalar::sub_product(const Scalar& a, const Scalar& b) {
    if (a.is_real() && b.is_real()) {
      re_ -= a.re_ * b.re_;
      return;
    }
    *this -= a * b;
  }

  std::string Scalar::to_string() const {
    if (is_real()) {
      return re_.get_str();
    }
    if (sgn(re_) == 0) {
      return im_.get_str() + " i";
    }
    std::string out = re_.get_str();
    if (sgn(im_) < 0) {
      out += "-";
      out += Rational(-im_).get_str();
    } else {
      out += "+";
      out += im_.get_str();
    }
    out += " i";
    return out;
  }

  Scalar Scalar::parse(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) {
      throw ParseError("empty scalar");
    }
    if (s.back() != 'i') {
      return Scalar(parse_rational(s));
    }
    s.remove_suffix(1);
    s = trim(s);
    // The split point is the last sign that is not leading.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
      if (s[k] == '+' || s[k] == '-') {
        split = k;
        break;
      }
    }
    Rational re(0);
    std::string_view im_text = s;
    if (split != std::string_view::npos) {
      re = parse_rational(s.substr(0, split));
      im_text = s.substr(split);
    }
    im_text = trim(im_text);
    if (im_text.empty() || im_text == "+" || im_text == "-") {
      std::string unit = im_text == "-" ? "-1" : "1";
      return Scalar(std::move(re), parse_rational(unit));
    }
    std::string im_clean;
    for (char c : im_text) {
      if (std::isspace(static_cast<unsigned char>(c)) == 0) {
        im_clean.push_back(c);
      }
    }
    return Scalar(std::move(re), parse_rational(im_clean));
  }

  std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
  }

}  // namespace hopfcoh
