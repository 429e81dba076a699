#pragma once

#include "germnf/exactnum/certified.hpp"
#include "germnf/germ/family_io.hpp"
#include "germnf/resonance/resonance.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace germnf {

enum class Truth { Yes, No, Indeterminate };
std::string truth_name(Truth t);

/// A decision with its re-checkable certificate. Indeterminate verdicts
/// carry the reason instead.
struct Verdict {
  Truth value = Truth::Indeterminate;
  std::string method = "exact";  // "exact" or "symbolic+interval"
  Json witness;
  std::string reason;
  Json bounds_used;

  Json to_json() const;
};

/// Integer matrix b: lambda_im = ln|mu_im| + i (Arg mu_im + 2 pi b_im).
struct BranchChoice {
  std::vector<std::vector<Integer>> b;

  static BranchChoice principal(int p, int n);
  Json to_json() const;
};

/// Yes iff q independent Omega points exist up to the bound.
Verdict is_nondegenerate(const EigenData& e, int q, int omega_bound);
/// Throws std::invalid_argument for non-diagonal linear parts.
Verdict is_nondegenerate(const Family& fam, int omega_bound);

Verdict is_projectively_hyperbolic(const EigenData& e, const PrecisionPolicy& policy = PrecisionPolicy());

/// K_i(k) = sum_m k_m (Arg mu_im / 2 pi + b_im) for each i, certified;
/// nullopt when the precision budget runs out.
std::optional<std::vector<Integer>> winding_numbers(const EigenData& e, const BranchChoice& b, const MultiIndex& k,
                                                    const PrecisionPolicy& policy = PrecisionPolicy());

/// Yes = weakly resonant (witness k with K(k) != 0), No = weakly non-resonant.
Verdict weak_resonance(const EigenData& e, const BranchChoice& b, const PrecisionPolicy& policy = PrecisionPolicy());

/// Outcome of a branch search: Yes with branches, No with an infeasibility
/// certificate, or Indeterminate.
struct GeneratorSearch {
  Truth status = Truth::Indeterminate;
  std::optional<BranchChoice> branches;
  Json certificate;
  std::string reason;

  Json to_json() const;
};

/// Branch matrices with |b| <= bound making K vanish on the lattice spanned
/// by the Omega points up to omega_bound; minimal sup-norm solution.
GeneratorSearch find_infinitesimal_generators(const EigenData& e, int branch_bound, int omega_bound,
                                              const PrecisionPolicy& policy = PrecisionPolicy());

/// Same search against the whole relation lattice: a hit is a family of
/// infinitesimal generators that is also weakly non-resonant.
GeneratorSearch find_weakly_nonresonant_generators(const EigenData& e, int branch_bound,
                                                   const PrecisionPolicy& policy = PrecisionPolicy());

Verdict is_hyperbolic(const EigenData& e, const PrecisionPolicy& policy = PrecisionPolicy());
Verdict is_weakly_hyperbolic(const EigenData& e, const PrecisionPolicy& policy = PrecisionPolicy());

struct BetaPair {
  int i;  // |mu_i| < 1
  int j;  // |mu_j| > 1
  long beta_i;
  long beta_j;
};

/// ln|mu_m| = k_m * ln d with ln d = sum_p c[p] ln p > 0.
struct PoincareTypeCertificate {
  LogModulusVector c;
  std::vector<long> k;
  std::map<int, long> alpha;
  std::vector<BetaPair> beta;
  long M = 0;

  Json to_json() const;
};

struct PoincareResult {
  Verdict verdict;
  std::optional<PoincareTypeCertificate> certificate;
};

/// Single diffeomorphism (p = 1) with n-1 independent Omega points supplied.
PoincareResult poincare_type_single(const EigenData& e, const OmegaEnumeration& omega, int torsion_bound = 64);
/// Independent exact re-check of every claim in the certificate.
bool verify_poincare_certificate(const EigenData& e, const PoincareTypeCertificate& cert);
/// Remainders modulo alpha, then beta-pair subtraction while both entries exceed M.
MultiIndex reduce_exponent(const PoincareTypeCertificate& cert, const MultiIndex& s);

struct ClassifyOptions {
  int omega_bound = 0;  // 0 means 2 * degree
  int branch_bound = 10;
  int torsion_bound = 64;
  PrecisionPolicy policy;
};

struct ClassificationReport {
  Verdict nondegenerate;
  Verdict projectively_hyperbolic;
  Verdict weakly_resonant;
  GeneratorSearch infinitesimal_generators;
  GeneratorSearch weakly_nonresonant_generators;
  Verdict hyperbolic;
  Verdict weakly_hyperbolic;
  std::optional<PoincareResult> poincare;
  int omega_bound = 0;

  /// Projectively hyperbolic, or infinitesimally integrable with weakly
  /// non-resonant generators.
  Truth normal_form_hypothesis() const;
  bool any_indeterminate() const;
  Json to_json() const;
};

ClassificationReport classify_family(const Family& fam, const ClassifyOptions& options);

}  // namespace germnf
