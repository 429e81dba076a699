#pragma once

#include "germnf/exactnum/rational.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace germnf {

/// Exact element re + im*i of Q(i). Every series coefficient and every
/// eigenvalue in the engine lives here.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// re^2 + im^2.
  Rational norm() const;
  /// Throws std::domain_error on zero.
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Textual form "a/b+c/d*i": the real part alone when im = 0, otherwise
  /// both parts, e.g. "-2", "1/2", "0+1*i", "3/5-4/5*i".
  std::string to_string() const;

  /// Accepts the printed form plus shorthands ("i", "-i", "2*i", "1/2-i").
  /// Throws std::invalid_argument naming the offending text.
  static GaussianRational parse(std::string_view text);

 private:
  Rational re_{0};
  Rational im_{0};
};

/// z^e for any integer e (negative exponents invert; 0^negative throws).
GaussianRational pow(const GaussianRational& z, long e);

inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace germnf
