#pragma once

#include "germnf/exactnum/gaussian.hpp"
#include "germnf/series/multi_index.hpp"

#include <map>
#include <string>
#include <vector>

namespace germnf {

/// Jet of a function of n variables modulo terms of degree > D, with
/// coefficients in Q(i). Only nonzero coefficients are stored, iterated in
/// graded-lex order.
class TruncatedSeries {
 public:
  using Terms = std::map<MultiIndex, GaussianRational, GradedLexLess>;

  TruncatedSeries(int n, int D);

  static TruncatedSeries constant(int n, int D, const GaussianRational& c);
  /// x_m, 0-based.
  static TruncatedSeries variable(int n, int D, int m);
  static TruncatedSeries monomial(int n, int D, const MultiIndex& a, const GaussianRational& c);

  int n() const { return n_; }
  int degree_bound() const { return D_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  GaussianRational coeff(const MultiIndex& a) const;
  GaussianRational constant_term() const;
  /// Lowest degree carrying a term; -1 for the zero series.
  int order() const;

  /// Adds c x^a; terms of degree > D are dropped.
  void add_term(const MultiIndex& a, const GaussianRational& c);
  void set_coeff(const MultiIndex& a, const GaussianRational& c);

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const GaussianRational& s);
  TruncatedSeries operator-() const;

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const GaussianRational& s) { return a *= s; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.n_ == b.n_ && a.D_ == b.D_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

  /// The same jet read modulo degree > D2 (D2 <= D).
  TruncatedSeries truncated(int D2) const;
  /// The same jet placed in a larger ambient degree (D2 >= D, no new terms).
  TruncatedSeries widened(int D2) const;
  /// Degree-d terms only; throws std::invalid_argument for d > D.
  TruncatedSeries homogeneous_part(int d) const;
  /// Terms with degree in [lo, hi].
  TruncatedSeries degree_range(int lo, int hi) const;

  /// Every coefficient has zero imaginary part.
  bool is_real() const;
  /// Coefficientwise complex conjugate.
  TruncatedSeries conj() const;

  /// "-2*x + 1/3*x^2*y", "0" for the zero series.
  std::string to_string() const;

 private:
  int n_;
  int D_;
  Terms terms_;
};

/// Throws std::invalid_argument unless n and D agree.
void require_same_shape(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, const GaussianRational& s);

/// s^k for k >= 0.
TruncatedSeries pow(const TruncatedSeries& s, int k);

/// f(g_1, ..., g_n) modulo degree > D. Every g_j must have zero constant
/// term (std::domain_error otherwise) and share f's degree bound.
TruncatedSeries compose(const TruncatedSeries& f, const std::vector<TruncatedSeries>& g);

/// Helper for repeated substitutions into the same g: caches powers of each
/// component so many series can be composed cheaply.
class Substitution {
 public:
  explicit Substitution(const std::vector<TruncatedSeries>& g);
  TruncatedSeries apply(const TruncatedSeries& f);
  /// g^a for an exponent vector a.
  const TruncatedSeries& power(const MultiIndex& a);

 private:
  const TruncatedSeries& component_power(int j, int k);

  std::vector<TruncatedSeries> g_;
  int n_;
  int D_;
  std::vector<std::vector<TruncatedSeries>> powers_;
  std::map<MultiIndex, TruncatedSeries> cache_;
};

/// sum_{t>=1} (-1)^(t+1) u^t / t; u must have zero constant term.
TruncatedSeries log1p(const TruncatedSeries& u);
/// sum_{t>=0} w^t / t!; w must have zero constant term.
TruncatedSeries exp0(const TruncatedSeries& w);

}  // namespace germnf
