#pragma once

#include "germnf/germ/germ.hpp"
#include "germnf/resonance/resonance.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace germnf {

/// Echelonized basis (graded-lex pivots, no constant term) of the polynomial
/// first integrals of degree <= D common to every germ of the family.
std::vector<TruncatedSeries> first_integrals(const Family& fam, int D);

/// Reduced echelon form of a list of series of common shape; two lists span
/// the same space iff their echelon forms are equal.
std::vector<TruncatedSeries> echelonize(const std::vector<TruncatedSeries>& span);

/// First monomial of F whose exponent is not a multiplicative relation.
/// Requires the family to be in Poincare-Dulac normal form.
std::optional<MultiIndex> verify_first_integral_support(const Family& fam, const TruncatedSeries& F);

struct DivisionVerdict {
  int germ;       // 0-based
  int component;  // 0-based
  bool passes;
  std::optional<MultiIndex> offending;
};

/// Whether each component m of each germ is divisible by x_m.
std::vector<DivisionVerdict> division_check(const Family& fam);
std::optional<DivisionVerdict> first_division_failure(const Family& fam);

class DivisionError : public std::runtime_error {
 public:
  DivisionError(const DivisionVerdict& v, const std::string& message)
      : std::runtime_error(message), verdict(v) {}
  DivisionVerdict verdict;
};

/// component_m / (mu_m x_m) - 1, exact; degree bound D - 1. Throws
/// DivisionError when x_m does not divide the component.
TruncatedSeries phi_component(const Germ& g, int m);

struct LatticeResidual {
  int germ;
  MultiIndex generator;
  /// First term of the cleared product difference, absent when exactly zero.
  std::optional<std::pair<MultiIndex, GaussianRational>> term;
};

struct SupportViolation {
  int germ;
  int component;
  MultiIndex monomial;
};

struct IntegrableNFCertificate {
  std::vector<std::vector<TruncatedSeries>> phi;
  std::vector<MultiIndex> omega_generators;
  std::vector<SupportViolation> support_violations;
  std::vector<LatticeResidual> residuals;

  bool all_zero() const;
};

/// Builds the phi matrix and checks its Omega support and the product
/// identity for every lattice basis vector, modulo degree > D - 1.
IntegrableNFCertificate extract_integrable_certificate(const Family& fam, const RelationLattice& lat);

/// Random integrable normal form over the given eigenvalues. Seed 0 gives the
/// linear family. A non-empty sigma makes the output rho-equivariant.
Family generate_integrable_nf(const EigenData& e, const RelationLattice& lat, int D, std::uint64_t seed,
                              const std::vector<int>& sigma = {});

/// Degree |l| + order part of x^l∘f, from the closed product formula.
TruncatedSeries pushforward_leading(const MultiIndex& l, const Germ& f, int order = 1);

}  // namespace germnf
