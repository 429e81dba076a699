#pragma once

#include "germnf/exactnum/factor.hpp"
#include "germnf/exactnum/interval.hpp"

#include <map>
#include <string>
#include <vector>

namespace germnf {

/// Polynomial with rational coefficients in the symbols ln p (p prime).
/// A monomial is the sorted multiset of its primes, so ln2*ln3 and ln3*ln2
/// coincide and cancellation is exact.
class LogPolynomial {
 public:
  using Monomial = std::vector<Integer>;

  LogPolynomial() = default;
  static LogPolynomial constant(const Rational& c);
  /// sum_p coords[p] * ln p.
  static LogPolynomial from_log_modulus(const LogModulusVector& v);

  bool is_symbolically_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  LogPolynomial& operator+=(const LogPolynomial& o);
  LogPolynomial& operator-=(const LogPolynomial& o);
  friend LogPolynomial operator+(LogPolynomial a, const LogPolynomial& b) { return a += b; }
  friend LogPolynomial operator-(LogPolynomial a, const LogPolynomial& b) { return a -= b; }
  friend LogPolynomial operator*(const LogPolynomial& a, const LogPolynomial& b);

  Interval evaluate(mpfr_prec_t prec) const;
  std::string to_string() const;

 private:
  void add(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

/// Determinant of a square matrix of log polynomials (Laplace expansion).
LogPolynomial determinant(const std::vector<std::vector<LogPolynomial>>& M);

enum class RankCertificate { Certified, SymbolicallyDeficient, Unresolved };

struct MinorSearch {
  RankCertificate status = RankCertificate::Unresolved;
  std::vector<int> columns;  // the certified nonzero minor
  mpfr_prec_t precision = 0;
  int minors_checked = 0;
};

/// Decides whether the r x n matrix of log-modulus rows has real rank r:
/// a minor certified nonzero by intervals gives Certified; every r x r minor
/// symbolically zero gives SymbolicallyDeficient; otherwise Unresolved.
MinorSearch full_row_rank(const std::vector<std::vector<LogModulusVector>>& rows, const PrecisionPolicy& policy);

/// All k-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int k);

}  // namespace germnf
