#pragma once

#include "germnf/exactnum/gaussian.hpp"
#include "germnf/exactnum/interval.hpp"

#include <map>
#include <optional>
#include <string>

namespace germnf {

/// x = rational_part + sum_r coeff[r] * atan(r) / pi.
///
/// Arguments of Gaussian rationals are rational multiples of pi plus
/// arctangents of rationals, so dividing through by pi keeps the pi part
/// exact. Terms are stored under |r| with atan's oddness folded into the
/// coefficient, which makes symmetric pairs cancel exactly.
class ArctanCombination {
 public:
  ArctanCombination() = default;
  explicit ArctanCombination(Rational rational_part) : rational_part_(std::move(rational_part)) {}

  const Rational& rational_part() const { return rational_part_; }
  const std::map<Rational, Rational>& atan_terms() const { return atan_; }
  bool is_exact() const { return atan_.empty(); }

  void add_rational(const Rational& q) { rational_part_ += q; }
  /// Adds coeff * atan(r) / pi.
  void add_atan(const Rational& coeff, const Rational& r);

  ArctanCombination& operator+=(const ArctanCombination& o);
  ArctanCombination scaled(const Rational& s) const;

  Interval evaluate(mpfr_prec_t prec) const;
  std::string to_string() const;

 private:
  Rational rational_part_{0};
  std::map<Rational, Rational> atan_;
};

/// Arg(z) / pi with Arg principal in (-pi, pi]. Throws std::domain_error on 0.
ArctanCombination argument_over_pi(const GaussianRational& z);

/// Arg(z) / (2 pi), the argument measured in turns.
ArctanCombination argument_turns(const GaussianRational& z);

/// The integer K with |x - K| < 1/4, certified by interval evaluation at the
/// given precision; nullopt if the enclosure is too wide.
std::optional<Integer> certified_round_at(const ArctanCombination& x, mpfr_prec_t prec);

/// Tries every level of the policy in turn. nullopt means the precision budget
/// is exhausted (Indeterminate); a returned integer is always correct. Throws
/// std::domain_error if x is an exactly known non-integer.
std::optional<Integer> certified_round_to_integer(const ArctanCombination& x,
                                                  const PrecisionPolicy& policy = PrecisionPolicy());

}  // namespace germnf
