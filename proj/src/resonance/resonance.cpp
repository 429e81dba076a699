#include "germnf/resonance/resonance.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace germnf {

EigenData::EigenData(std::vector<std::vector<GaussianRational>> rows) : mu(std::move(rows)) {
  p = static_cast<int>(mu.size());
  if (p == 0) throw std::invalid_argument("eigendata needs at least one row");
  n = static_cast<int>(mu.front().size());
  if (n == 0) throw std::invalid_argument("eigendata rows must be nonempty");
  for (const auto& row : mu) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("eigendata rows differ in length");
    for (const auto& z : row) {
      if (z.is_zero()) throw std::invalid_argument("eigenvalues must be nonzero");
    }
  }
}

EigenData EigenData::from_family(const Family& fam) {
  std::vector<std::vector<GaussianRational>> rows;
  for (int i = 0; i < fam.p(); ++i) {
    if (!fam.germ(i).has_diagonal_linear_part()) {
      throw std::invalid_argument("map " + std::to_string(i + 1) + " has a non-diagonal linear part");
    }
    rows.push_back(fam.germ(i).linear_diag());
  }
  return EigenData(std::move(rows));
}

GaussianRational EigenData::product(int i, const MultiIndex& k) const {
  GaussianRational out(1);
  for (int m = 0; m < n; ++m) {
    const int e = k[static_cast<std::size_t>(m)];
    if (e != 0) out *= pow(at(i, m), e);
  }
  return out;
}

bool EigenData::is_relation(const MultiIndex& k) const {
  for (int i = 0; i < p; ++i) {
    if (!product(i, k).is_one()) return false;
  }
  return true;
}

bool EigenData::is_resonant(int m, const MultiIndex& gamma) const {
  for (int i = 0; i < p; ++i) {
    if (product(i, gamma) != at(i, m)) return false;
  }
  return true;
}

IntMatrix RelationLattice::as_int_matrix() const {
  IntMatrix out;
  for (const auto& v : basis) out.push_back(to_int_vector(v));
  return out;
}

MultiIndex to_multi_index(const IntVector& v) {
  MultiIndex out;
  for (const auto& x : v) out.push_back(static_cast<int>(to_long(x)));
  return out;
}

IntVector to_int_vector(const MultiIndex& v) {
  IntVector out;
  for (int x : v) out.emplace_back(x);
  return out;
}

RelationLattice relation_lattice(const EigenData& e) {
  // Unknowns: k_1..k_n, then t_1..t_p. Rows: prime-exponent balance per (i,
  // prime) and sum_m k_m u_im - 4 t_i = 0 for the unit exponents.
  const std::size_t cols = static_cast<std::size_t>(e.n + e.p);
  IntMatrix rows;
  for (int i = 0; i < e.p; ++i) {
    std::vector<GaussianFactorization> fac;
    std::set<GaussianPrime, std::less<>> primes;
    for (int m = 0; m < e.n; ++m) {
      fac.push_back(factor_gaussian(e.at(i, m)));
      for (const auto& [pi, ex] : fac.back().factors) primes.insert(pi);
    }
    for (const auto& pi : primes) {
      IntVector row(cols, Integer(0));
      for (int m = 0; m < e.n; ++m) {
        const auto it = fac[static_cast<std::size_t>(m)].factors.find(pi);
        if (it != fac[static_cast<std::size_t>(m)].factors.end()) row[static_cast<std::size_t>(m)] = it->second;
      }
      rows.push_back(std::move(row));
    }
    IntVector unit_row(cols, Integer(0));
    for (int m = 0; m < e.n; ++m) unit_row[static_cast<std::size_t>(m)] = fac[static_cast<std::size_t>(m)].unit_exp;
    unit_row[static_cast<std::size_t>(e.n + i)] = -4;
    rows.push_back(std::move(unit_row));
  }
  const IntMatrix kernel = integer_kernel(rows, cols);
  IntMatrix projected;
  for (const auto& v : kernel) projected.emplace_back(v.begin(), v.begin() + e.n);
  RelationLattice lat;
  lat.n = e.n;
  for (const auto& v : hermite_normal_form(std::move(projected))) {
    MultiIndex k = to_multi_index(v);
    if (!e.is_relation(k)) throw std::logic_error("relation lattice vector failed exact re-verification");
    lat.basis.push_back(std::move(k));
  }
  return lat;
}

namespace {

std::vector<MultiIndex> sorted_points(const std::vector<IntVector>& raw, const MultiIndex& shift) {
  std::vector<MultiIndex> out;
  for (const auto& v : raw) out.push_back(to_multi_index(v) + shift);
  std::sort(out.begin(), out.end(), GradedLexLess());
  return out;
}

}  // namespace

OmegaEnumeration omega_from_lattice(const RelationLattice& lat, int bound) {
  if (bound < 1) throw std::invalid_argument("omega enumeration bound must be at least 1");
  OmegaEnumeration out;
  out.bound = bound;
  const IntVector lo(static_cast<std::size_t>(lat.n), Integer(0));
  const IntVector hi(static_cast<std::size_t>(lat.n), Integer(bound));
  const auto raw = enumerate_box(lat.as_int_matrix(), lo, hi, Integer(1), Integer(bound));
  out.points = sorted_points(raw, MultiIndex(static_cast<std::size_t>(lat.n), 0));
  return out;
}

OmegaEnumeration enumerate_omega(const EigenData& e, int bound) {
  OmegaEnumeration out = omega_from_lattice(relation_lattice(e), bound);
  for (const auto& l : out.points) {
    if (!e.is_relation(l)) throw std::logic_error("omega point failed exact re-verification");
  }
  return out;
}

ResonantSet resonant_set(const EigenData& e, int m, int bound) { return resonant_set(e, relation_lattice(e), m, bound); }

ResonantSet resonant_set(const EigenData& e, const RelationLattice& lat, int m, int bound) {
  if (m < 0 || m >= e.n) throw std::invalid_argument("resonant_set: component out of range");
  ResonantSet out;
  out.component = m;
  out.bound = bound;
  if (bound < 2) return out;
  // gamma = e_m + l with l in the lattice, l_m >= -1, other entries >= 0.
  IntVector lo(static_cast<std::size_t>(e.n), Integer(0));
  IntVector hi(static_cast<std::size_t>(e.n), Integer(bound));
  lo[static_cast<std::size_t>(m)] = -1;
  hi[static_cast<std::size_t>(m)] = bound - 1;
  const auto raw = enumerate_box(lat.as_int_matrix(), lo, hi, Integer(1), Integer(bound - 1));
  out.points = sorted_points(raw, unit_index(e.n, m));
  for (const auto& g : out.points) {
    if (!e.is_resonant(m, g)) throw std::logic_error("resonant monomial failed exact re-verification");
  }
  return out;
}

std::pair<int, int> vect_omega_rank(const RelationLattice& lat, int bound) {
  const auto omega = omega_from_lattice(lat, bound);
  IntMatrix rows;
  for (const auto& v : omega.points) rows.push_back(to_int_vector(v));
  const int enumerated = static_cast<int>(rational_rank(rows, static_cast<std::size_t>(lat.n)));
  return {enumerated, lat.rank()};
}

std::vector<MultiIndex> lattice_hnf(const std::vector<MultiIndex>& points, int n) {
  IntMatrix rows;
  for (const auto& v : points) {
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("lattice_hnf: dimension mismatch");
    rows.push_back(to_int_vector(v));
  }
  std::vector<MultiIndex> out;
  for (const auto& v : hermite_normal_form(std::move(rows))) out.push_back(to_multi_index(v));
  return out;
}

}  // namespace germnf
