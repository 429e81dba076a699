#include "germnf/normalform/integrable.hpp"

#include "germnf/normalform/normalize.hpp"

#include <map>
#include <random>
#include <set>

namespace germnf {

namespace {

std::vector<MultiIndex> nonconstant_monomials(int n, int D) { return monomials_in_range(n, 1, D); }

}  // namespace

std::vector<TruncatedSeries> echelonize(const std::vector<TruncatedSeries>& span) {
  if (span.empty()) return {};
  const int n = span.front().n();
  const int D = span.front().degree_bound();
  std::vector<MultiIndex> cols = monomials_in_range(n, 0, D);
  std::map<MultiIndex, std::size_t> where;
  for (std::size_t c = 0; c < cols.size(); ++c) where[cols[c]] = c;
  GaussianMatrix M(span.size(), cols.size());
  for (std::size_t r = 0; r < span.size(); ++r) {
    require_same_shape(span[r], span.front());
    for (const auto& [a, c] : span[r].terms()) M(r, where.at(a)) = c;
  }
  const auto pivots = M.rref();
  std::vector<TruncatedSeries> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    TruncatedSeries s(n, D);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (!M(r, c).is_zero()) s.add_term(cols[c], M(r, c));
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<TruncatedSeries> first_integrals(const Family& fam, int D) {
  if (D < 1) throw std::invalid_argument("first integrals need a degree bound of at least 1");
  if (D > fam.degree_bound()) throw std::invalid_argument("degree bound exceeds the family's jet order");
  const Family work = fam.truncated(D);
  const int n = fam.n();
  const std::vector<MultiIndex> unknowns = nonconstant_monomials(n, D);
  std::map<MultiIndex, std::size_t> row_of;
  for (std::size_t r = 0; r < unknowns.size(); ++r) row_of[unknowns[r]] = r;

  const std::size_t block = unknowns.size();
  GaussianMatrix M(block * static_cast<std::size_t>(work.p()), unknowns.size());
  for (int i = 0; i < work.p(); ++i) {
    Substitution sub(work.germ(i).components());
    for (std::size_t c = 0; c < unknowns.size(); ++c) {
      TruncatedSeries diff = sub.power(unknowns[c]);
      diff -= TruncatedSeries::monomial(n, D, unknowns[c], 1);
      for (const auto& [a, v] : diff.terms()) {
        M(static_cast<std::size_t>(i) * block + row_of.at(a), c) = v;
      }
    }
  }
  std::vector<TruncatedSeries> raw;
  for (const auto& v : M.nullspace()) {
    TruncatedSeries s(n, D);
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (!v[c].is_zero()) s.add_term(unknowns[c], v[c]);
    }
    raw.push_back(std::move(s));
  }
  return echelonize(raw);
}

std::optional<MultiIndex> verify_first_integral_support(const Family& fam, const TruncatedSeries& F) {
  if (const auto off = verify_pd_nf(fam)) {
    throw std::invalid_argument("family is not in Poincare-Dulac normal form (map " + std::to_string(off->germ + 1) +
                                ", component " + std::to_string(off->component + 1) + ", monomial " +
                                monomial_string(off->monomial) + ")");
  }
  const EigenData e = EigenData::from_family(fam);
  for (const auto& [a, c] : F.terms()) {
    if (degree(a) == 0 || !e.is_relation(a)) return a;
  }
  return std::nullopt;
}

std::vector<DivisionVerdict> division_check(const Family& fam) {
  std::vector<DivisionVerdict> out;
  for (int i = 0; i < fam.p(); ++i) {
    for (int m = 0; m < fam.n(); ++m) {
      DivisionVerdict v{i, m, true, std::nullopt};
      for (const auto& [a, c] : fam.germ(i).component(m).terms()) {
        if (a[static_cast<std::size_t>(m)] == 0) {
          v.passes = false;
          v.offending = a;
          break;
        }
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::optional<DivisionVerdict> first_division_failure(const Family& fam) {
  for (auto& v : division_check(fam)) {
    if (!v.passes) return v;
  }
  return std::nullopt;
}

TruncatedSeries phi_component(const Germ& g, int m) {
  const int n = g.n();
  const int D = g.degree_bound();
  const GaussianRational mu = g.component(m).coeff(unit_index(n, m));
  if (mu.is_zero()) {
    throw DivisionError({-1, m, false, unit_index(n, m)},
                        "component " + std::to_string(m + 1) + " has no diagonal linear term");
  }
  TruncatedSeries phi(n, D - 1);
  for (const auto& [a, c] : g.component(m).terms()) {
    if (a[static_cast<std::size_t>(m)] == 0) {
      throw DivisionError({-1, m, false, a}, "component " + std::to_string(m + 1) + " is not divisible by " +
                                                 variable_name(m, n) + ": term " + monomial_string(a));
    }
    phi.add_term(a - unit_index(n, m), c / mu);
  }
  phi -= TruncatedSeries::constant(n, D - 1, 1);
  return phi;
}

bool IntegrableNFCertificate::all_zero() const {
  if (!support_violations.empty()) return false;
  for (const auto& r : residuals) {
    if (r.term) return false;
  }
  return true;
}

IntegrableNFCertificate extract_integrable_certificate(const Family& fam, const RelationLattice& lat) {
  if (!fam.has_diagonal_linear_parts()) throw std::invalid_argument("certificate requires diagonal linear parts");
  if (const auto f = first_division_failure(fam)) {
    DivisionVerdict v = *f;
    throw DivisionError(v, "division fails for map " + std::to_string(v.germ + 1) + ", component " +
                               std::to_string(v.component + 1) + ": term " + monomial_string(*v.offending));
  }
  const EigenData e = EigenData::from_family(fam);
  const int n = fam.n();
  const int D = fam.degree_bound();
  IntegrableNFCertificate cert;
  cert.omega_generators = lat.basis;

  for (int i = 0; i < fam.p(); ++i) {
    std::vector<TruncatedSeries> row;
    for (int m = 0; m < n; ++m) {
      TruncatedSeries phi = phi_component(fam.germ(i), m);
      for (const auto& [a, c] : phi.terms()) {
        if (!e.is_relation(a)) {
          cert.support_violations.push_back({i, m, a});
          break;
        }
      }
      row.push_back(std::move(phi));
    }
    for (const auto& gamma : cert.omega_generators) {
      TruncatedSeries lhs = TruncatedSeries::constant(n, D - 1, 1);
      TruncatedSeries rhs = lhs;
      for (int k = 0; k < n; ++k) {
        const int g = gamma[static_cast<std::size_t>(k)];
        if (g == 0) continue;
        const TruncatedSeries base = row[static_cast<std::size_t>(k)] + TruncatedSeries::constant(n, D - 1, 1);
        if (g > 0) {
          lhs = lhs * pow(base, g);
        } else {
          rhs = rhs * pow(base, -g);
        }
      }
      const TruncatedSeries diff = lhs - rhs;
      LatticeResidual res{i, gamma, std::nullopt};
      if (!diff.is_zero()) {
        const auto& first = *diff.terms().begin();
        res.term = std::make_pair(first.first, first.second);
      }
      cert.residuals.push_back(std::move(res));
    }
    cert.phi.push_back(std::move(row));
  }
  return cert;
}

namespace {

class CoefficientSource {
 public:
  explicit CoefficientSource(std::uint64_t seed) : rng_(seed) {}

  Rational rational() {
    std::uniform_int_distribution<int> num(-16, 16);
    std::uniform_int_distribution<int> den(1, 16);
    return make_rational(num(rng_), den(rng_));
  }

  GaussianRational gaussian(bool complex) {
    if (!complex) return rational();
    return {rational(), rational()};
  }

  bool chance(int percent) { return std::uniform_int_distribution<int>(0, 99)(rng_) < percent; }

 private:
  std::mt19937_64 rng_;
};

// Rational basis of {v : sum_k gamma_k v_k = 0 for every lattice basis gamma}.
std::vector<std::vector<Rational>> lattice_annihilator(const RelationLattice& lat, int n) {
  if (lat.basis.empty()) {
    std::vector<std::vector<Rational>> out;
    for (int k = 0; k < n; ++k) {
      std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
      v[static_cast<std::size_t>(k)] = 1;
      out.push_back(std::move(v));
    }
    return out;
  }
  RationalMatrix M(lat.basis.size(), static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < lat.basis.size(); ++r) {
    for (int k = 0; k < n; ++k) M(r, static_cast<std::size_t>(k)) = Rational(lat.basis[r][static_cast<std::size_t>(k)]);
  }
  return M.nullspace();
}

}  // namespace

Family generate_integrable_nf(const EigenData& e, const RelationLattice& lat, int D, std::uint64_t seed,
                              const std::vector<int>& sigma) {
  if (D < 2) throw std::invalid_argument("degree bound must be at least 2");
  const int n = e.n;
  if (lat.n != n) throw std::invalid_argument("lattice dimension does not match the eigenvalues");
  const bool symmetric = !sigma.empty();
  if (symmetric) require_involution(sigma, n);

  std::vector<std::vector<TruncatedSeries>> w(static_cast<std::size_t>(e.p));
  for (auto& row : w) row.assign(static_cast<std::size_t>(n), TruncatedSeries(n, D - 1));

  if (seed != 0) {
    CoefficientSource src(seed);
    const auto kernel = lattice_annihilator(lat, n);
    const auto omega = omega_from_lattice(lat, D - 1).points;
    bool complex = false;
    for (const auto& row : e.mu) {
      for (const auto& mu : row) complex = complex || !mu.is_real();
    }
    for (int i = 0; i < e.p; ++i) {
      std::set<MultiIndex> done;
      for (const auto& a : omega) {
        if (done.count(a) != 0) continue;
        std::vector<GaussianRational> v(static_cast<std::size_t>(n));
        for (const auto& kv : kernel) {
          if (src.chance(40)) continue;
          const GaussianRational r = src.gaussian(complex);
          for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] += r * kv[static_cast<std::size_t>(k)];
        }
        done.insert(a);
        if (!symmetric) {
          for (int k = 0; k < n; ++k) w[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].add_term(a, v[static_cast<std::size_t>(k)]);
          continue;
        }
        const MultiIndex as = permute_index(a, sigma);
        if (as == a) {
          std::vector<GaussianRational> sym(static_cast<std::size_t>(n));
          for (int k = 0; k < n; ++k) {
            sym[static_cast<std::size_t>(k)] =
                (v[static_cast<std::size_t>(k)] + v[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])].conj()) *
                GaussianRational(make_rational(1, 2));
          }
          v = sym;
        }
        done.insert(as);
        for (int k = 0; k < n; ++k) {
          w[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].add_term(a, v[static_cast<std::size_t>(k)]);
          if (as != a) {
            w[static_cast<std::size_t>(i)][static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])].add_term(
                as, v[static_cast<std::size_t>(k)].conj());
          }
        }
      }
    }
  }

  std::vector<Germ> germs;
  for (int i = 0; i < e.p; ++i) {
    std::vector<TruncatedSeries> comps;
    for (int m = 0; m < n; ++m) {
      const TruncatedSeries factor = exp0(w[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)]);
      TruncatedSeries comp(n, D);
      for (const auto& [a, c] : factor.terms()) comp.add_term(a + unit_index(n, m), c * e.at(i, m));
      comps.push_back(std::move(comp));
    }
    germs.emplace_back(std::move(comps));
  }
  return Family(std::move(germs));
}

TruncatedSeries pushforward_leading(const MultiIndex& l, const Germ& f, int order) {
  const int n = f.n();
  const int D = f.degree_bound();
  const int target = degree(l) + order;
  if (order < 1) throw std::invalid_argument("order must be positive");
  if (static_cast<int>(l.size()) != n || !is_nonnegative(l) || degree(l) == 0) throw std::invalid_argument("malformed monomial");
  if (target > D) throw std::invalid_argument("requested degree exceeds the jet order");
  if (!f.has_diagonal_linear_part()) throw std::invalid_argument("pushforward requires a diagonal linear part");
  GaussianRational scale_factor(1);
  TruncatedSeries log_sum(n, D - 1);
  for (int m = 0; m < n; ++m) {
    const int lm = l[static_cast<std::size_t>(m)];
    if (lm == 0) continue;
    scale_factor *= pow(f.component(m).coeff(unit_index(n, m)), lm);
    log_sum += log1p(phi_component(f, m)) * GaussianRational(lm);
  }
  const TruncatedSeries growth = exp0(log_sum).truncated(order).homogeneous_part(order);
  TruncatedSeries out(n, D);
  for (const auto& [a, c] : growth.terms()) out.add_term(a + l, c * scale_factor);
  return out;
}

}  // namespace germnf
