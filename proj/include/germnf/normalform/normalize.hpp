#pragma once

#include "germnf/germ/germ.hpp"
#include "germnf/resonance/resonance.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace germnf {

/// Raised when a precondition of normalization fails or a term survives
/// its elimination (which means the family does not commute).
class NormalizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EliminationStep {
  int degree;
  int component;  // 0-based
  MultiIndex monomial;
  GaussianRational coefficient;  // in germ chosen_germ before the step
  GaussianRational divisor;      // mu_{i*}^gamma - mu_{i*, m}
  int chosen_germ;               // i*, 0-based
  GaussianRational h;            // coefficient of x^gamma e_m in the step
};

struct NormalizationResult {
  Family normalized;
  Germ psi;
  std::vector<EliminationStep> elimination_log;
};

struct NormalizeOptions {
  bool rho_equivariant = false;
  /// Involutive pairing of coordinates (0-based); identity when empty.
  std::vector<int> sigma;
};

/// Simultaneous Poincare-Dulac normalization: degree by degree, every
/// non-resonant monomial is removed from every germ by one tangent-to-identity
/// step per degree, and psi accumulates the steps.
NormalizationResult poincare_dulac_normalize(const Family& fam, const NormalizeOptions& options = {});

struct PdnfOffence {
  int germ;       // 0-based
  int component;  // 0-based
  MultiIndex monomial;
};

/// First non-resonant nonlinear monomial, in (germ, degree, component,
/// graded-lex) order; nullopt when the family is in normal form.
std::optional<PdnfOffence> verify_pd_nf(const Family& fam);

/// gamma^sigma_j = gamma_{sigma(j)}.
MultiIndex permute_index(const MultiIndex& a, const std::vector<int>& sigma);

struct RhoViolation {
  int component;  // 0-based
  MultiIndex monomial;
  GaussianRational coefficient;
  GaussianRational paired_coefficient;
};

/// Checks that component sigma(m) carries conj(c) at gamma^sigma whenever
/// component m carries c at gamma.
std::optional<RhoViolation> rho_violation(const Germ& g, const std::vector<int>& sigma);

/// Throws std::invalid_argument unless sigma is an involution of {0..n-1}.
void require_involution(const std::vector<int>& sigma, int n);

}  // namespace germnf
