#include "germnf/normalform/realcase.hpp"

#include "germnf/normalform/normalize.hpp"

namespace germnf {

namespace {

std::string entry_name(int r, int c) { return "(" + std::to_string(r + 1) + ", " + std::to_string(c + 1) + ")"; }

Germ linear_germ(int D, const GaussianMatrix& A) { return Germ::linear(D, A); }

Germ to_real(const Germ& g, const std::vector<int>& sigma, int which) {
  const int n = g.n();
  const int D = g.degree_bound();
  const GaussianMatrix P = real_coordinates(sigma);
  const Germ out = compose_germ(linear_germ(D, P), compose_germ(g, linear_germ(D, P.inverse())));
  for (int m = 0; m < n; ++m) {
    for (const auto& [a, c] : out.component(m).terms()) {
      if (!c.is_real()) {
        throw RealFormError("map " + std::to_string(which + 1) + " is not real after the change of coordinates: component " +
                            std::to_string(m + 1) + ", monomial " + monomial_string(a) + ", coefficient " + c.to_string());
      }
    }
  }
  return out;
}

}  // namespace

GaussianMatrix real_coordinates(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  require_involution(sigma, n);
  GaussianMatrix P(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  const GaussianRational half(make_rational(1, 2));
  const GaussianRational ihalf(Rational(0), make_rational(1, 2));
  for (int j = 0; j < n; ++j) {
    const int k = sigma[static_cast<std::size_t>(j)];
    const auto uj = static_cast<std::size_t>(j);
    const auto uk = static_cast<std::size_t>(k);
    if (k == j) {
      P(uj, uj) = 1;
    } else if (j < k) {
      P(uj, uj) = half;
      P(uj, uk) = half;
      P(uk, uj) = -ihalf;
      P(uk, uk) = ihalf;
    }
  }
  return P;
}

ComplexifiedFamily complexify_real_family(const Family& fam) {
  const int n = fam.n();
  for (int i = 0; i < fam.p(); ++i) {
    if (!fam.germ(i).is_real()) throw RealFormError("map " + std::to_string(i + 1) + " has non-real coefficients");
  }
  std::vector<GaussianMatrix> A;
  for (const auto& g : fam.germs()) A.push_back(g.linear_matrix());
  auto at = [&](int i, int r, int c) -> const GaussianRational& {
    return A[static_cast<std::size_t>(i)](static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  };

  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (int j = 0; j < n;) {
    bool block = false;
    if (j + 1 < n) {
      for (int i = 0; i < fam.p(); ++i) block = block || !at(i, j, j + 1).is_zero() || !at(i, j + 1, j).is_zero();
    }
    if (block) {
      sigma[static_cast<std::size_t>(j)] = j + 1;
      sigma[static_cast<std::size_t>(j + 1)] = j;
      for (int i = 0; i < fam.p(); ++i) {
        if (at(i, j, j) != at(i, j + 1, j + 1) || at(i, j, j + 1) != -at(i, j + 1, j)) {
          throw RealFormError("map " + std::to_string(i + 1) + " has a malformed rotation-scaling block at rows " +
                              std::to_string(j + 1) + " and " + std::to_string(j + 2));
        }
      }
      j += 2;
    } else {
      sigma[static_cast<std::size_t>(j)] = j;
      j += 1;
    }
  }
  for (int i = 0; i < fam.p(); ++i) {
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        if (r == c || c == sigma[static_cast<std::size_t>(r)] || at(i, r, c).is_zero()) continue;
        throw RealFormError("map " + std::to_string(i + 1) + " has a linear entry " + entry_name(r, c) +
                            " outside its blocks");
      }
    }
  }

  const GaussianMatrix P = real_coordinates(sigma);
  const int D = fam.degree_bound();
  const Germ to_x = linear_germ(D, P);
  const Germ to_z = linear_germ(D, P.inverse());
  std::vector<Germ> out;
  for (const auto& g : fam.germs()) out.push_back(compose_germ(to_z, compose_germ(g, to_x)));
  return {Family(std::move(out)), P, sigma};
}

Family realify_normal_form(const Family& nf, const std::vector<int>& sigma) {
  require_involution(sigma, nf.n());
  std::vector<Germ> out;
  for (int i = 0; i < nf.p(); ++i) {
    if (const auto v = rho_violation(nf.germ(i), sigma)) {
      throw RealFormError("map " + std::to_string(i + 1) + " is not rho-equivariant: component " +
                          std::to_string(v->component + 1) + ", monomial " + monomial_string(v->monomial) +
                          " has coefficient " + v->coefficient.to_string() + " but its pair has " +
                          v->paired_coefficient.to_string());
    }
    out.push_back(to_real(nf.germ(i), sigma, i));
  }
  return Family(std::move(out));
}

Germ realify_germ(const Germ& psi, const std::vector<int>& sigma) {
  require_involution(sigma, psi.n());
  return to_real(psi, sigma, 0);
}

}  // namespace germnf
