#include "germnf/normalform/normalize.hpp"

#include <map>

namespace germnf {

MultiIndex permute_index(const MultiIndex& a, const std::vector<int>& sigma) {
  MultiIndex out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[static_cast<std::size_t>(sigma[j])];
  return out;
}

void require_involution(const std::vector<int>& sigma, int n) {
  if (static_cast<int>(sigma.size()) != n) throw std::invalid_argument("pairing has the wrong length");
  for (int j = 0; j < n; ++j) {
    const int s = sigma[static_cast<std::size_t>(j)];
    if (s < 0 || s >= n || sigma[static_cast<std::size_t>(s)] != j) {
      throw std::invalid_argument("pairing is not an involution");
    }
  }
}

std::optional<RhoViolation> rho_violation(const Germ& g, const std::vector<int>& sigma) {
  require_involution(sigma, g.n());
  for (int m = 0; m < g.n(); ++m) {
    const TruncatedSeries& paired = g.component(sigma[static_cast<std::size_t>(m)]);
    for (const auto& [a, c] : g.component(m).terms()) {
      const GaussianRational pc = paired.coeff(permute_index(a, sigma));
      if (pc != c.conj()) return RhoViolation{m, a, c, pc};
    }
  }
  return std::nullopt;
}

std::optional<PdnfOffence> verify_pd_nf(const Family& fam) {
  const EigenData e = EigenData::from_family(fam);
  for (int i = 0; i < fam.p(); ++i) {
    std::optional<PdnfOffence> best;
    int best_degree = 0;
    for (int m = 0; m < fam.n(); ++m) {
      for (const auto& [a, c] : fam.germ(i).component(m).terms()) {
        const int d = degree(a);
        if (d < 2 || e.is_resonant(m, a)) continue;
        if (!best || d < best_degree) {
          best = PdnfOffence{i, m, a};
          best_degree = d;
        }
        break;
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

namespace {

std::string describe(int m, const MultiIndex& a) {
  return "component " + std::to_string(m + 1) + ", monomial " + monomial_string(a);
}

}  // namespace

NormalizationResult poincare_dulac_normalize(const Family& fam, const NormalizeOptions& options) {
  if (!fam.has_diagonal_linear_parts()) {
    throw NormalizationError("normalization requires diagonal linear parts");
  }
  if (const auto d = family_commutativity_defect(fam)) {
    throw NormalizationError("maps " + std::to_string(d->i + 1) + " and " + std::to_string(d->j + 1) +
                             " do not commute: defect at degree " + std::to_string(d->defect.degree) + ", " +
                             describe(d->defect.component, d->defect.monomial));
  }
  const int n = fam.n();
  const int D = fam.degree_bound();
  std::vector<int> sigma = options.sigma;
  if (options.rho_equivariant) {
    require_involution(sigma, n);
    for (int i = 0; i < fam.p(); ++i) {
      if (const auto v = rho_violation(fam.germ(i), sigma)) {
        throw NormalizationError("map " + std::to_string(i + 1) + " is not rho-equivariant at " +
                                 describe(v->component, v->monomial));
      }
    }
  }
  const EigenData e = EigenData::from_family(fam);
  Family work = fam;
  Germ psi = Germ::identity(n, D);
  std::vector<EliminationStep> log;

  for (int d = 2; d <= D; ++d) {
    std::vector<TruncatedSeries> H;
    for (int m = 0; m < n; ++m) H.emplace_back(n, D);
    std::map<std::pair<int, MultiIndex>, bool> handled;
    for (int m = 0; m < n; ++m) {
      for (const auto& gamma : monomials_of_degree(n, d)) {
        if (handled.count({m, gamma}) != 0) continue;
        if (e.is_resonant(m, gamma)) continue;
        int chosen = -1;
        for (int i = 0; i < e.p && chosen < 0; ++i) {
          if (e.product(i, gamma) != e.at(i, m)) chosen = i;
        }
        const GaussianRational c = work.germ(chosen).component(m).coeff(gamma);
        bool present = !c.is_zero();
        for (int i = 0; i < e.p && !present; ++i) present = !work.germ(i).component(m).coeff(gamma).is_zero();
        if (!present) continue;
        const GaussianRational divisor = e.product(chosen, gamma) - e.at(chosen, m);
        const GaussianRational h = c / divisor;
        H[static_cast<std::size_t>(m)].add_term(gamma, h);
        handled[{m, gamma}] = true;
        log.push_back({d, m, gamma, c, divisor, chosen, h});
        if (options.rho_equivariant) {
          const int pm = sigma[static_cast<std::size_t>(m)];
          const MultiIndex pg = permute_index(gamma, sigma);
          if (pm != m || pg != gamma) {
            const GaussianRational pc = work.germ(chosen).component(pm).coeff(pg);
            const GaussianRational pdiv = e.product(chosen, pg) - e.at(chosen, pm);
            H[static_cast<std::size_t>(pm)].add_term(pg, h.conj());
            handled[{pm, pg}] = true;
            log.push_back({d, pm, pg, pc, pdiv, chosen, h.conj()});
          }
        }
      }
    }
    bool any = false;
    for (const auto& h : H) any = any || !h.is_zero();
    if (!any) continue;
    std::vector<TruncatedSeries> step_comps;
    for (int m = 0; m < n; ++m) step_comps.push_back(TruncatedSeries::variable(n, D, m) + H[static_cast<std::size_t>(m)]);
    const Germ step(std::move(step_comps));
    work = conjugate(work, step);
    psi = compose_germ(psi, step);
    for (int m = 0; m < n; ++m) {
      for (const auto& [gamma, h] : H[static_cast<std::size_t>(m)].terms()) {
        for (int i = 0; i < e.p; ++i) {
          if (!work.germ(i).component(m).coeff(gamma).is_zero()) {
            throw NormalizationError("term survived elimination in map " + std::to_string(i + 1) + " at " +
                                     describe(m, gamma));
          }
        }
      }
    }
  }
  if (const auto off = verify_pd_nf(work)) {
    throw NormalizationError("normalized family still carries a non-resonant term in map " +
                             std::to_string(off->germ + 1) + " at " + describe(off->component, off->monomial));
  }
  return {std::move(work), std::move(psi), std::move(log)};
}

}  // namespace germnf
