// Copyright 2026 The ogl Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef OGL_GAUSSIAN_RATIONAL_HPP
#define OGL_GAUSSIAN_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "ogl/errors.hpp"

namespace ogl {

/// Exact element of Q(i). Both parts are kept in lowest terms with a
/// positive denominator, so equality is structural.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }

  /// |z|^2, always a non-negative rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = GaussianRational{};
    if (is_real() && o.is_real()) {
      re_ *= o.re_;
      return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DivisionByZero();
    if (o.is_real()) {
      re_ /= o.re_;
      im_ /= o.re_;
      return *this;
    }
    mpq_class n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Canonical, whitespace-free text form: `3`, `-1/2`, `i`, `-3/4i`, `2-3/4i`.
  std::string to_string() const;

  /// Parses the text form. Accepts optional whitespace and a leading '+'.
  static GaussianRational parse(std::string_view text);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << z.to_string();
}

namespace detail {

inline std::string rational_text(const mpq_class& q) { return q.get_str(); }

// Cursor over the text form with whitespace skipping.
class GrScanner {
 public:
  explicit GrScanner(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ == s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  // INT ('/' INT)?
  mpq_class magnitude() {
    std::string num = digits();
    std::string den = "1";
    if (accept('/')) den = digits();
    mpq_class q(num + "/" + den, 10);
    if (q.get_den() == 0) fail("zero denominator");
    q.canonicalize();
    return q;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("invalid Gaussian rational '" + std::string(s_) + "' at offset " +
                     std::to_string(pos_) + ": " + why);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline std::string GaussianRational::to_string() const {
  const bool has_re = sgn(re_) != 0;
  const bool has_im = sgn(im_) != 0;
  if (!has_im) return detail::rational_text(re_);
  std::string out;
  if (has_re) out = detail::rational_text(re_);
  mpq_class mag = abs(im_);
  if (sgn(im_) < 0) {
    out += '-';
  } else if (has_re) {
    out += '+';
  }
  if (mag != 1) out += detail::rational_text(mag);
  out += 'i';
  return out;
}

inline GaussianRational GaussianRational::parse(std::string_view text) {
  detail::GrScanner sc(text);
  if (sc.at_end()) sc.fail("empty input");

  auto signed_term = [&](bool& is_imag) -> mpq_class {
    int sign = 1;
    if (sc.accept('-')) {
      sign = -1;
    } else {
      sc.accept('+');
    }
    mpq_class mag = 1;
    bool explicit_mag = false;
    if (sc.at_digit()) {
      mag = sc.magnitude();
      explicit_mag = true;
    }
    is_imag = sc.accept('i');
    if (!explicit_mag && !is_imag) sc.fail("expected a number or 'i'");
    return sign * mag;
  };

  bool first_imag = false;
  mpq_class first = signed_term(first_imag);
  if (sc.at_end()) {
    return first_imag ? GaussianRational(0, first) : GaussianRational(first, 0);
  }
  if (first_imag) sc.fail("real part must precede imaginary part");
  char c = sc.peek();
  if (c != '+' && c != '-') sc.fail("expected '+' or '-'");
  bool second_imag = false;
  mpq_class second = signed_term(second_imag);
  if (!second_imag) sc.fail("second term must be imaginary");
  if (!sc.at_end()) sc.fail("trailing characters");
  return {first, second};
}

}  // namespace ogl

template <>
struct std::hash<ogl::GaussianRational> {
  std::size_t operator()(const ogl::GaussianRational& z) const noexcept {
    return std::hash<std::string>{}(z.to_string());
  }
};

#endif  // OGL_GAUSSIAN_RATIONAL_HPP
