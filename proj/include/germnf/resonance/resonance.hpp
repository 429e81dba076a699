#pragma once

#include "germnf/exactnum/factor.hpp"
#include "germnf/germ/germ.hpp"
#include "germnf/resonance/intlattice.hpp"
#include "germnf/series/multi_index.hpp"

#include <utility>
#include <vector>

namespace germnf {

/// Eigenvalues mu[i][m] of the diagonal linear parts, p rows of n entries.
struct EigenData {
  int p = 0;
  int n = 0;
  std::vector<std::vector<GaussianRational>> mu;

  EigenData() = default;
  /// Throws std::invalid_argument on ragged rows or zero entries.
  explicit EigenData(std::vector<std::vector<GaussianRational>> rows);
  /// Throws std::invalid_argument if some linear part is not diagonal.
  static EigenData from_family(const Family& fam);

  const GaussianRational& at(int i, int m) const { return mu[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)]; }
  /// prod_m mu_im^{k_m} for any integer vector k.
  GaussianRational product(int i, const MultiIndex& k) const;
  /// prod_m mu_im^{k_m} = 1 for every i.
  bool is_relation(const MultiIndex& k) const;
  /// mu_i^gamma = mu_im for every i (resonance in component m, 0-based).
  bool is_resonant(int m, const MultiIndex& gamma) const;
};

/// {k in Z^n : prod_m mu_im^{k_m} = 1 for all i}, basis in Hermite normal form.
struct RelationLattice {
  int n = 0;
  std::vector<MultiIndex> basis;

  int rank() const { return static_cast<int>(basis.size()); }
  IntMatrix as_int_matrix() const;
};

struct OmegaEnumeration {
  int bound = 0;
  std::vector<MultiIndex> points;  // graded-lex order
};

struct ResonantSet {
  int component = 0;  // 0-based
  int bound = 0;
  std::vector<MultiIndex> points;  // graded-lex order
};

RelationLattice relation_lattice(const EigenData& e);
/// Points of the lattice in N^n \ {0} with degree <= bound.
OmegaEnumeration omega_from_lattice(const RelationLattice& lat, int bound);
/// Enumerates through the relation lattice and re-verifies every point.
OmegaEnumeration enumerate_omega(const EigenData& e, int bound);
/// gamma with 2 <= |gamma| <= bound and mu_i^gamma = mu_im for all i.
ResonantSet resonant_set(const EigenData& e, int m, int bound);
ResonantSet resonant_set(const EigenData& e, const RelationLattice& lat, int m, int bound);

/// (rank over Q of the Omega points up to bound, rank of the whole lattice).
std::pair<int, int> vect_omega_rank(const RelationLattice& lat, int bound);

/// Lattice spanned by a point set, in Hermite normal form.
std::vector<MultiIndex> lattice_hnf(const std::vector<MultiIndex>& points, int n);

MultiIndex to_multi_index(const IntVector& v);
IntVector to_int_vector(const MultiIndex& v);

}  // namespace germnf
