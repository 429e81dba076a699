#pragma once

#include "germnf/exactnum/matrix.hpp"
#include "germnf/series/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace germnf {

/// Jet of a map germ (C^n, 0) -> (C^n, 0) with invertible linear part,
/// modulo degree > D. The linear part lives in the components; the matrix
/// form is derived on demand.
class Germ {
 public:
  /// Validates shape, zero constant terms and invertibility of the linear part.
  explicit Germ(std::vector<TruncatedSeries> components);

  static Germ identity(int n, int D);
  static Germ diagonal(int D, const std::vector<GaussianRational>& mu);
  static Germ linear(int D, const GaussianMatrix& A);

  int n() const { return static_cast<int>(components_.size()); }
  int degree_bound() const { return components_.front().degree_bound(); }
  const std::vector<TruncatedSeries>& components() const { return components_; }
  const TruncatedSeries& component(int m) const { return components_[static_cast<std::size_t>(m)]; }

  /// A with (A)_{mj} = coefficient of x_j in component m.
  GaussianMatrix linear_matrix() const;
  bool has_diagonal_linear_part() const;
  /// Throws std::invalid_argument if the linear part is not diagonal.
  std::vector<GaussianRational> linear_diag() const;
  bool is_linear() const;
  bool is_identity() const;
  /// Every coefficient of every component is real.
  bool is_real() const;

  Germ truncated(int D2) const;
  /// Components restricted to degree >= 2.
  std::vector<TruncatedSeries> nonlinear_part() const;

  friend bool operator==(const Germ& a, const Germ& b) { return a.components_ == b.components_; }
  friend bool operator!=(const Germ& a, const Germ& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::vector<TruncatedSeries> components_;
};

/// p germs sharing n and D. Commutativity is checked separately, never assumed.
class Family {
 public:
  Family(std::vector<Germ> germs);  // NOLINT(google-explicit-constructor)

  int p() const { return static_cast<int>(germs_.size()); }
  int n() const { return germs_.front().n(); }
  int q() const { return n() - p(); }
  int degree_bound() const { return germs_.front().degree_bound(); }
  const std::vector<Germ>& germs() const { return germs_; }
  const Germ& germ(int i) const { return germs_[static_cast<std::size_t>(i)]; }

  bool has_diagonal_linear_parts() const;
  Family truncated(int D2) const;

  friend bool operator==(const Family& a, const Family& b) { return a.germs_ == b.germs_; }

 private:
  std::vector<Germ> germs_;
};

/// f∘g.
Germ compose_germ(const Germ& f, const Germ& g);
/// Two-sided inverse modulo degree > D, by degree-recursive substitution.
Germ invert_germ(const Germ& f);
/// psi^{-1}∘f∘psi.
Germ conjugate(const Germ& f, const Germ& psi);
Family conjugate(const Family& fam, const Germ& psi);

/// Applies the linear map A to a vector of series.
std::vector<TruncatedSeries> apply_linear(const GaussianMatrix& A, const std::vector<TruncatedSeries>& v);

struct CommutativityDefect {
  int degree;
  int component;  // 0-based
  MultiIndex monomial;
  GaussianRational coefficient;  // of f∘g - g∘f
};

/// The first term of f∘g - g∘f in (degree, component, graded-lex) order.
std::optional<CommutativityDefect> commutativity_defect(const Germ& f, const Germ& g);
/// First defect over all pairs (i < j) of the family, with the pair.
struct FamilyDefect {
  int i;
  int j;
  CommutativityDefect defect;
};
std::optional<FamilyDefect> family_commutativity_defect(const Family& fam);

}  // namespace germnf
