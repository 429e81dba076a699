#pragma once

#include "germnf/exactnum/rational.hpp"

#include <mpfr.h>

#include <string>
#include <vector>

namespace germnf {

/// Closed real interval [lo, hi] with MPFR endpoints. Every operation rounds
/// the lower endpoint down and the upper endpoint up, so the true value is
/// always enclosed.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  static Interval from_rational(const Rational& q, mpfr_prec_t prec);
  static Interval pi(mpfr_prec_t prec);
  /// ln n for n > 0.
  static Interval log_of(const Integer& n, mpfr_prec_t prec);
  static Interval atan_of(const Rational& q, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }

  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  /// Throws std::domain_error when o contains zero.
  Interval& operator/=(const Interval& o);
  Interval& operator*=(const Rational& q);

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator/(Interval a, const Interval& b) { return a /= b; }
  friend Interval operator*(Interval a, const Rational& q) { return a *= q; }
  Interval operator-() const;

  bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
  bool certainly_negative() const { return mpfr_sgn(hi_) < 0; }
  bool certainly_nonzero() const { return certainly_positive() || certainly_negative(); }
  bool contains_zero() const { return !certainly_nonzero(); }

  /// lo > q and hi < r, compared exactly.
  bool strictly_inside(const Rational& q, const Rational& r) const;
  /// Integer nearest to the midpoint.
  Integer nearest_integer() const;
  double width() const;

  const __mpfr_struct* lo() const { return lo_; }
  const __mpfr_struct* hi() const { return hi_; }
  std::string to_string() const;

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

/// Working precisions tried by certified evaluations: 64, 128, ... bits up to
/// the cap (1024 by default, lowered by GERMNF_PRECISION_BITS).
class PrecisionPolicy {
 public:
  PrecisionPolicy();
  explicit PrecisionPolicy(mpfr_prec_t cap, mpfr_prec_t start = 64);

  const std::vector<mpfr_prec_t>& levels() const { return levels_; }
  mpfr_prec_t cap() const { return levels_.back(); }

  static mpfr_prec_t env_cap();

 private:
  std::vector<mpfr_prec_t> levels_;
};

}  // namespace germnf
