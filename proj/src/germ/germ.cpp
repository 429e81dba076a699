#include "germnf/germ/germ.hpp"

#include <sstream>
#include <stdexcept>

namespace germnf {

Germ::Germ(std::vector<TruncatedSeries> components) : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("germ needs at least one component");
  const int n = static_cast<int>(components_.size());
  for (std::size_t m = 0; m < components_.size(); ++m) {
    const auto& c = components_[m];
    if (c.n() != n) {
      throw std::invalid_argument("germ component " + std::to_string(m + 1) + " has " + std::to_string(c.n()) +
                                  " variables, expected " + std::to_string(n));
    }
    require_same_shape(c, components_.front());
    if (!c.constant_term().is_zero()) {
      throw std::invalid_argument("germ component " + std::to_string(m + 1) + " has a nonzero constant term");
    }
  }
  if (degree_bound() < 1) throw std::invalid_argument("germ truncation degree must be at least 1");
  if (linear_matrix().rank() != static_cast<std::size_t>(n)) {
    throw std::domain_error("germ linear part is singular");
  }
}

Germ Germ::identity(int n, int D) {
  std::vector<TruncatedSeries> comps;
  for (int m = 0; m < n; ++m) comps.push_back(TruncatedSeries::variable(n, D, m));
  return Germ(std::move(comps));
}

Germ Germ::diagonal(int D, const std::vector<GaussianRational>& mu) {
  const int n = static_cast<int>(mu.size());
  std::vector<TruncatedSeries> comps;
  for (int m = 0; m < n; ++m) comps.push_back(TruncatedSeries::monomial(n, D, unit_index(n, m), mu[m]));
  return Germ(std::move(comps));
}

Germ Germ::linear(int D, const GaussianMatrix& A) {
  const int n = static_cast<int>(A.rows());
  std::vector<TruncatedSeries> comps;
  for (int m = 0; m < n; ++m) {
    TruncatedSeries s(n, D);
    for (int j = 0; j < n; ++j) s.add_term(unit_index(n, j), A(m, j));
    comps.push_back(std::move(s));
  }
  return Germ(std::move(comps));
}

GaussianMatrix Germ::linear_matrix() const {
  const auto n = static_cast<std::size_t>(this->n());
  GaussianMatrix A(n, n);
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t j = 0; j < n; ++j) A(m, j) = components_[m].coeff(unit_index(static_cast<int>(n), static_cast<int>(j)));
  }
  return A;
}

bool Germ::has_diagonal_linear_part() const { return linear_matrix().is_diagonal(); }

std::vector<GaussianRational> Germ::linear_diag() const {
  const GaussianMatrix A = linear_matrix();
  if (!A.is_diagonal()) throw std::invalid_argument("linear part is not diagonal");
  std::vector<GaussianRational> out;
  for (std::size_t m = 0; m < A.rows(); ++m) out.push_back(A(m, m));
  return out;
}

bool Germ::is_linear() const {
  for (const auto& c : components_) {
    for (const auto& [a, coeff] : c.terms()) {
      if (degree(a) > 1) return false;
    }
  }
  return true;
}

bool Germ::is_identity() const { return *this == identity(n(), degree_bound()); }

bool Germ::is_real() const {
  for (const auto& c : components_) {
    if (!c.is_real()) return false;
  }
  return true;
}

Germ Germ::truncated(int D2) const {
  std::vector<TruncatedSeries> comps;
  for (const auto& c : components_) comps.push_back(c.truncated(D2));
  return Germ(std::move(comps));
}

std::vector<TruncatedSeries> Germ::nonlinear_part() const {
  std::vector<TruncatedSeries> out;
  for (const auto& c : components_) out.push_back(c.degree_range(2, degree_bound()));
  return out;
}

std::string Germ::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t m = 0; m < components_.size(); ++m) {
    if (m != 0) os << ", ";
    os << components_[m].to_string();
  }
  os << ')';
  return os.str();
}

Family::Family(std::vector<Germ> germs) : germs_(std::move(germs)) {
  if (germs_.empty()) throw std::invalid_argument("family needs at least one germ");
  for (std::size_t i = 1; i < germs_.size(); ++i) {
    if (germs_[i].n() != n()) throw std::invalid_argument("family germs disagree on dimension");
    if (germs_[i].degree_bound() != degree_bound()) throw std::invalid_argument("family germs disagree on degree");
  }
  if (p() > n()) throw std::invalid_argument("family has more germs than dimensions (p > n)");
}

bool Family::has_diagonal_linear_parts() const {
  for (const auto& g : germs_) {
    if (!g.has_diagonal_linear_part()) return false;
  }
  return true;
}

Family Family::truncated(int D2) const {
  std::vector<Germ> out;
  for (const auto& g : germs_) out.push_back(g.truncated(D2));
  return Family(std::move(out));
}

namespace {

void require_same_germ_shape(const Germ& f, const Germ& g) {
  if (f.n() != g.n()) throw std::invalid_argument("germ dimension mismatch");
  if (f.degree_bound() != g.degree_bound()) throw std::invalid_argument("germ truncation degree mismatch");
}

}  // namespace

std::vector<TruncatedSeries> apply_linear(const GaussianMatrix& A, const std::vector<TruncatedSeries>& v) {
  std::vector<TruncatedSeries> out;
  for (std::size_t m = 0; m < A.rows(); ++m) {
    TruncatedSeries s(v.front().n(), v.front().degree_bound());
    for (std::size_t j = 0; j < A.cols(); ++j) {
      if (!A(m, j).is_zero()) s += v[j] * A(m, j);
    }
    out.push_back(std::move(s));
  }
  return out;
}

Germ compose_germ(const Germ& f, const Germ& g) {
  require_same_germ_shape(f, g);
  Substitution sub(g.components());
  std::vector<TruncatedSeries> comps;
  for (const auto& c : f.components()) comps.push_back(sub.apply(c));
  return Germ(std::move(comps));
}

Germ invert_germ(const Germ& f) {
  const int n = f.n();
  const int D = f.degree_bound();
  const GaussianMatrix Ainv = f.linear_matrix().inverse();
  const auto N = f.nonlinear_part();
  std::vector<TruncatedSeries> x;
  for (int m = 0; m < n; ++m) x.push_back(TruncatedSeries::variable(n, D, m));
  // g = A^{-1}(x - N∘g); each pass fixes one more degree.
  std::vector<TruncatedSeries> g = apply_linear(Ainv, x);
  for (int pass = 2; pass <= D; ++pass) {
    Substitution sub(g);
    std::vector<TruncatedSeries> rhs;
    for (int m = 0; m < n; ++m) rhs.push_back(x[m] - sub.apply(N[m]));
    g = apply_linear(Ainv, rhs);
  }
  return Germ(std::move(g));
}

Germ conjugate(const Germ& f, const Germ& psi) {
  require_same_germ_shape(f, psi);
  const int n = f.n();
  const int D = f.degree_bound();
  // psi = L + H. Solve psi∘F = f∘psi for F by F = L^{-1}(f∘psi - H∘F).
  const GaussianMatrix Linv = psi.linear_matrix().inverse();
  const auto H = psi.nonlinear_part();
  std::vector<std::size_t> active;
  for (int m = 0; m < n; ++m) {
    if (!H[m].is_zero()) active.push_back(static_cast<std::size_t>(m));
  }
  const Germ G = compose_germ(f, psi);
  std::vector<TruncatedSeries> F = apply_linear(Linv, G.components());
  if (active.empty()) return Germ(std::move(F));
  const int h_order = [&] {
    int o = D + 1;
    for (auto m : active) o = std::min(o, H[m].order());
    return o;
  }();
  // Each pass gains h_order - 1 >= 1 correct degrees.
  const int passes = (D - 1) / std::max(1, h_order - 1) + 1;
  for (int pass = 0; pass < passes; ++pass) {
    Substitution sub(F);
    std::vector<TruncatedSeries> rhs = G.components();
    for (auto m : active) rhs[m] -= sub.apply(H[m]);
    std::vector<TruncatedSeries> next = apply_linear(Linv, rhs);
    if (next == F) break;
    F = std::move(next);
  }
  return Germ(std::move(F));
}

Family conjugate(const Family& fam, const Germ& psi) {
  std::vector<Germ> out;
  for (const auto& g : fam.germs()) out.push_back(conjugate(g, psi));
  return Family(std::move(out));
}

std::optional<CommutativityDefect> commutativity_defect(const Germ& f, const Germ& g) {
  require_same_germ_shape(f, g);
  const Germ fg = compose_germ(f, g);
  const Germ gf = compose_germ(g, f);
  std::optional<CommutativityDefect> best;
  for (int m = 0; m < f.n(); ++m) {
    const TruncatedSeries diff = fg.component(m) - gf.component(m);
    if (diff.is_zero()) continue;
    const auto& [a, c] = *diff.terms().begin();
    const int d = degree(a);
    if (!best || d < best->degree) best = CommutativityDefect{d, m, a, c};
  }
  return best;
}

std::optional<FamilyDefect> family_commutativity_defect(const Family& fam) {
  for (int i = 0; i < fam.p(); ++i) {
    for (int j = i + 1; j < fam.p(); ++j) {
      if (auto d = commutativity_defect(fam.germ(i), fam.germ(j))) return FamilyDefect{i, j, *d};
    }
  }
  return std::nullopt;
}

}  // namespace germnf
