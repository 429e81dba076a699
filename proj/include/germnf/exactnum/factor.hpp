#pragma once

#include "germnf/exactnum/gaussian.hpp"

#include <map>
#include <string>

namespace germnf {

/// Prime factorization of |n| for n != 0: prime -> exponent. Trial division
/// up to 10^6, then Pollard-rho (Brent) on the cofactor.
std::map<Integer, long> factor_integer(const Integer& n);

/// A Gaussian prime in canonical associate form: re > 0, im >= 0. Rational
/// primes p = 3 (mod 4) appear as (p, 0), 2 ramifies as (1, 1).
struct GaussianPrime {
  Integer re;
  Integer im;

  Integer norm() const { return re * re + im * im; }
  GaussianRational value() const { return {Rational(re), Rational(im)}; }
  std::string to_string() const;

  /// Ordered by norm, then real part; deterministic across runs.
  friend bool operator<(const GaussianPrime& a, const GaussianPrime& b);
  friend bool operator==(const GaussianPrime& a, const GaussianPrime& b) {
    return a.re == b.re && a.im == b.im;
  }
};

/// z = i^unit_exp * prod prime^exponent. Exponents may be negative
/// (denominators); unit_exp lies in {0, 1, 2, 3}.
struct GaussianFactorization {
  int unit_exp = 0;
  std::map<GaussianPrime, long> factors;

  /// Re-multiplies the factorization exactly.
  GaussianRational reassemble() const;
};

/// Exact factorization over canonical Gaussian primes. Throws
/// std::domain_error on zero.
GaussianFactorization factor_gaussian(const GaussianRational& z);

/// ln|z| = sum_p coords[p] * ln p, with p rational primes. The coordinates
/// are rational because |z|^2 is rational, so |z| itself may carry halves.
struct LogModulusVector {
  std::map<Integer, Rational> coords;

  bool is_zero() const { return coords.empty(); }
  /// The exact value of |z|^2 = prod p^(2 coords[p]).
  Rational squared_modulus() const;

  LogModulusVector& operator+=(const LogModulusVector& o);
  friend LogModulusVector operator+(LogModulusVector a, const LogModulusVector& b) { return a += b; }
  /// Scales by a rational (used for sum_m k_m ln|mu_m|).
  LogModulusVector scaled(const Rational& s) const;

  friend bool operator==(const LogModulusVector& a, const LogModulusVector& b) {
    return a.coords == b.coords;
  }
  std::string to_string() const;
};

/// Throws std::domain_error on zero.
LogModulusVector log_modulus(const GaussianRational& z);

}  // namespace germnf
