#include "germnf/classify/classify.hpp"

#include "germnf/classify/exact_lp.hpp"
#include "germnf/classify/log_poly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace germnf {

std::string truth_name(Truth t) {
  switch (t) {
    case Truth::Yes:
      return "yes";
    case Truth::No:
      return "no";
    case Truth::Indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

Json Verdict::to_json() const {
  Json out{{"verdict", truth_name(value)}, {"method", method}, {"witness", witness}, {"bounds_used", bounds_used}};
  if (!reason.empty()) out["reason"] = reason;
  return out;
}

BranchChoice BranchChoice::principal(int p, int n) {
  BranchChoice out;
  out.b.assign(static_cast<std::size_t>(p), std::vector<Integer>(static_cast<std::size_t>(n), Integer(0)));
  return out;
}

Json BranchChoice::to_json() const {
  Json rows = Json::array();
  for (const auto& row : b) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_long(x));
    rows.push_back(r);
  }
  return rows;
}

Json GeneratorSearch::to_json() const {
  Json out{{"status", status == Truth::Yes ? "found" : status == Truth::No ? "none" : "indeterminate"}};
  out["branches"] = branches ? branches->to_json() : Json();
  out["certificate"] = certificate;
  if (!reason.empty()) out["reason"] = reason;
  return out;
}

namespace {

Json index_json(const MultiIndex& a) { return Json(a); }

Json index_list_json(const std::vector<MultiIndex>& v) {
  Json out = Json::array();
  for (const auto& a : v) out.push_back(index_json(a));
  return out;
}

Json precision_bounds(const PrecisionPolicy& policy) { return {{"precision_bits_max", policy.cap()}}; }

std::vector<std::vector<LogModulusVector>> log_moduli(const EigenData& e) {
  std::vector<std::vector<LogModulusVector>> out(static_cast<std::size_t>(e.p));
  for (int i = 0; i < e.p; ++i) {
    for (int m = 0; m < e.n; ++m) out[static_cast<std::size_t>(i)].push_back(log_modulus(e.at(i, m)));
  }
  return out;
}

// Greedy choice of independent points, in the given order.
std::vector<MultiIndex> independent_subset(const std::vector<MultiIndex>& points, int n, std::size_t want) {
  std::vector<MultiIndex> chosen;
  IntMatrix rows;
  for (const auto& v : points) {
    if (chosen.size() == want) break;
    rows.push_back(to_int_vector(v));
    if (rational_rank(rows, static_cast<std::size_t>(n)) == rows.size()) {
      chosen.push_back(v);
    } else {
      rows.pop_back();
    }
  }
  return chosen;
}

Integer sup_norm(const IntVector& v) {
  Integer best = 0;
  for (const auto& x : v) best = std::max(best, Integer(abs(x)));
  return best;
}

struct ComplexInterval {
  Interval re;
  Interval im;
};

ComplexInterval cmul(const ComplexInterval& a, const ComplexInterval& b) {
  Interval rr = a.re;
  rr *= b.re;
  Interval ii = a.im;
  ii *= b.im;
  Interval ri = a.re;
  ri *= b.im;
  Interval ir = a.im;
  ir *= b.re;
  rr -= ii;
  ri += ir;
  return {std::move(rr), std::move(ri)};
}

ComplexInterval complex_determinant(const std::vector<std::vector<ComplexInterval>>& M, mpfr_prec_t prec) {
  const std::size_t k = M.size();
  if (k == 1) return M[0][0];
  ComplexInterval total{Interval::from_rational(Rational(0), prec), Interval::from_rational(Rational(0), prec)};
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::vector<ComplexInterval>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<ComplexInterval> row;
      for (std::size_t cc = 0; cc < k; ++cc) {
        if (cc != c) row.push_back(M[r][cc]);
      }
      minor.push_back(std::move(row));
    }
    const ComplexInterval term = cmul(M[0][c], complex_determinant(minor, prec));
    if (c % 2 == 0) {
      total.re += term.re;
      total.im += term.im;
    } else {
      total.re -= term.re;
      total.im -= term.im;
    }
  }
  return total;
}

// Linear independence over C of the logarithm rows
// lambda_im = ln|mu_im| + i pi (Arg mu_im / pi + 2 b_im), given that every
// row annihilates the rank-r lattice W.
GeneratorSearch generator_independence(const EigenData& e, const BranchChoice& b, std::size_t lattice_rank,
                                       const PrecisionPolicy& policy) {
  GeneratorSearch out;
  if (static_cast<std::size_t>(e.n) - lattice_rank < static_cast<std::size_t>(e.p)) {
    out.status = Truth::No;
    out.certificate = {{"reason", "every admissible logarithm row annihilates the lattice, leaving dimension " +
                                      std::to_string(static_cast<std::size_t>(e.n) - lattice_rank) + " < p"}};
    return out;
  }
  for (int i = 0; i < e.p; ++i) {
    bool zero_row = true;
    for (int m = 0; m < e.n; ++m) {
      zero_row = zero_row && e.at(i, m).is_one() && b.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] == 0;
    }
    if (zero_row) {
      out.status = Truth::No;
      out.certificate = {{"reason", "logarithm row " + std::to_string(i + 1) + " is zero"}};
      return out;
    }
  }
  const auto lm = log_moduli(e);
  for (const mpfr_prec_t prec : policy.levels()) {
    std::vector<std::vector<ComplexInterval>> lambda(static_cast<std::size_t>(e.p));
    for (int i = 0; i < e.p; ++i) {
      for (int m = 0; m < e.n; ++m) {
        Interval im = argument_over_pi(e.at(i, m)).evaluate(prec);
        im += Interval::from_rational(Rational(2 * b.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)]), prec);
        im *= Interval::pi(prec);
        lambda[static_cast<std::size_t>(i)].push_back(
            {LogPolynomial::from_log_modulus(lm[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)]).evaluate(prec),
             std::move(im)});
      }
    }
    for (const auto& S : subsets(e.n, e.p)) {
      std::vector<std::vector<ComplexInterval>> M;
      for (int i = 0; i < e.p; ++i) {
        std::vector<ComplexInterval> row;
        for (int m : S) row.push_back(lambda[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)]);
        M.push_back(std::move(row));
      }
      const ComplexInterval det = complex_determinant(M, prec);
      if (det.re.certainly_nonzero() || det.im.certainly_nonzero()) {
        Json cols = Json::array();
        for (int m : S) cols.push_back(m + 1);
        out.status = Truth::Yes;
        out.certificate = {{"nonzero_minor", cols}, {"precision_bits", prec}};
        return out;
      }
    }
  }
  out.status = Truth::Indeterminate;
  out.reason = "independence of the logarithm rows could not be certified";
  return out;
}

GeneratorSearch solve_branches(const EigenData& e, const std::vector<MultiIndex>& W, int bound,
                               const PrecisionPolicy& policy, const std::string& lattice_name) {
  GeneratorSearch out;
  const auto n = static_cast<std::size_t>(e.n);
  Json base{{"lattice", lattice_name}, {"lattice_basis", index_list_json(W)}, {"branch_bound", bound}};
  BranchChoice chosen = BranchChoice::principal(e.p, e.n);
  if (W.empty()) {
    const GeneratorSearch indep = generator_independence(e, chosen, 0, policy);
    base["independence"] = indep.certificate;
    out.status = indep.status;
    out.reason = indep.reason;
    if (indep.status == Truth::Yes) out.branches = chosen;
    out.certificate = base;
    return out;
  }
  IntMatrix Wm;
  for (const auto& w : W) Wm.push_back(to_int_vector(w));
  const IntMatrix kernel = integer_kernel(Wm, n);
  const BranchChoice principal = BranchChoice::principal(e.p, e.n);
  for (int i = 0; i < e.p; ++i) {
    IntVector rhs;
    for (const auto& w : W) {
      const auto K = winding_numbers(e, principal, w, policy);
      if (!K) {
        out.status = Truth::Indeterminate;
        out.reason = "certified rounding exhausted the precision budget";
        out.certificate = base;
        return out;
      }
      rhs.push_back(-(*K)[static_cast<std::size_t>(i)]);
    }
    Json row_cert = base;
    row_cert["row"] = i + 1;
    Json k0 = Json::array();
    for (const auto& r : rhs) k0.push_back(to_long(Integer(-r)));
    row_cert["principal_K"] = k0;
    const auto x0 = solve_integer(Wm, n, rhs);
    if (!x0) {
      out.status = Truth::No;
      row_cert["reason"] = "W b = -K has no integer solution";
      out.certificate = row_cert;
      return out;
    }
    IntVector lo(n), hi(n);
    Integer sum_lo = 0, sum_hi = 0;
    for (std::size_t m = 0; m < n; ++m) {
      lo[m] = -bound - (*x0)[m];
      hi[m] = bound - (*x0)[m];
      sum_lo += lo[m];
      sum_hi += hi[m];
    }
    const auto shifts = enumerate_box(kernel, lo, hi, sum_lo, sum_hi);
    if (shifts.empty()) {
      out.status = Truth::No;
      row_cert["reason"] = "no integer solution with sup-norm within the branch bound";
      row_cert["particular_solution"] = to_multi_index(*x0);
      Json kern = Json::array();
      for (const auto& v : kernel) kern.push_back(to_multi_index(v));
      row_cert["solution_kernel"] = kern;
      out.certificate = row_cert;
      return out;
    }
    IntVector best;
    Integer best_norm = -1;
    for (const auto& v : shifts) {
      IntVector b(n);
      for (std::size_t m = 0; m < n; ++m) b[m] = (*x0)[m] + v[m];
      const Integer norm = sup_norm(b);
      if (best_norm < 0 || norm < best_norm) {
        best_norm = norm;
        best = b;
      }
    }
    chosen.b[static_cast<std::size_t>(i)] = best;
  }
  for (const auto& w : W) {
    const auto K = winding_numbers(e, chosen, w, policy);
    if (!K) {
      out.status = Truth::Indeterminate;
      out.reason = "certified rounding exhausted the precision budget";
      return out;
    }
    for (const auto& k : *K) {
      if (k != 0) throw std::logic_error("branch solution failed re-verification");
    }
  }
  IntMatrix Wrows;
  for (const auto& w : W) Wrows.push_back(to_int_vector(w));
  const GeneratorSearch indep = generator_independence(e, chosen, rational_rank(Wrows, n), policy);
  base["independence"] = indep.certificate;
  out.status = indep.status;
  out.reason = indep.reason;
  if (indep.status == Truth::Yes) out.branches = chosen;
  out.certificate = base;
  return out;
}

LogModulusVector negated(const LogModulusVector& v) { return v.scaled(Rational(-1)); }

}  // namespace

Verdict is_nondegenerate(const EigenData& e, int q, int omega_bound) {
  Verdict v;
  v.method = "exact";
  v.bounds_used = {{"omega_bound", omega_bound}};
  if (q <= 0) {
    v.value = Truth::Yes;
    v.witness = Json::array();
    return v;
  }
  const auto omega = enumerate_omega(e, omega_bound);
  const auto chosen = independent_subset(omega.points, e.n, static_cast<std::size_t>(q));
  v.witness = index_list_json(chosen);
  v.value = static_cast<int>(chosen.size()) >= q ? Truth::Yes : Truth::No;
  if (v.value == Truth::No) v.reason = "fewer than q independent Omega points up to the bound";
  return v;
}

Verdict is_nondegenerate(const Family& fam, int omega_bound) {
  return is_nondegenerate(EigenData::from_family(fam), fam.q(), omega_bound);
}

Verdict is_projectively_hyperbolic(const EigenData& e, const PrecisionPolicy& policy) {
  Verdict v;
  v.bounds_used = precision_bounds(policy);
  const auto lm = log_moduli(e);
  if (e.p == 1) {
    v.method = "exact";
    for (int m = 0; m < e.n; ++m) {
      if (!lm[0][static_cast<std::size_t>(m)].is_zero()) {
        v.value = Truth::Yes;
        v.witness = {{"component", m + 1}, {"log_modulus", lm[0][static_cast<std::size_t>(m)].to_string()}};
        return v;
      }
    }
    v.value = Truth::No;
    v.witness = {{"all_unit_modulus", true}};
    return v;
  }
  const MinorSearch s = full_row_rank(lm, policy);
  switch (s.status) {
    case RankCertificate::Certified: {
      v.value = Truth::Yes;
      v.method = "symbolic+interval";
      Json cols = Json::array();
      for (int c : s.columns) cols.push_back(c + 1);
      v.witness = {{"minor_columns", cols}, {"precision_bits", s.precision}};
      break;
    }
    case RankCertificate::SymbolicallyDeficient:
      v.value = Truth::No;
      v.method = "exact";
      v.witness = {{"minors_checked", s.minors_checked}, {"all_minors_symbolically_zero", true}};
      break;
    case RankCertificate::Unresolved:
      v.value = Truth::Indeterminate;
      v.method = "symbolic+interval";
      v.reason = "no minor certified nonzero within the precision budget";
      break;
  }
  return v;
}

std::optional<std::vector<Integer>> winding_numbers(const EigenData& e, const BranchChoice& b, const MultiIndex& k,
                                                    const PrecisionPolicy& policy) {
  std::vector<Integer> out;
  for (int i = 0; i < e.p; ++i) {
    ArctanCombination sum;
    for (int m = 0; m < e.n; ++m) {
      const int km = k[static_cast<std::size_t>(m)];
      if (km == 0) continue;
      sum += argument_turns(e.at(i, m)).scaled(Rational(km));
      sum.add_rational(Rational(b.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] * km));
    }
    auto K = certified_round_to_integer(sum, policy);
    if (!K) return std::nullopt;
    out.push_back(*K);
  }
  return out;
}

Verdict weak_resonance(const EigenData& e, const BranchChoice& b, const PrecisionPolicy& policy) {
  Verdict v;
  v.method = "exact";
  v.bounds_used = precision_bounds(policy);
  const RelationLattice lat = relation_lattice(e);
  // L0: lattice vectors whose modulus part vanishes for every row.
  std::vector<MultiIndex> l0;
  for (const auto& k : lat.basis) {
    bool modulus_zero = true;
    for (int i = 0; i < e.p && modulus_zero; ++i) {
      LogModulusVector sum;
      for (int m = 0; m < e.n; ++m) sum += log_modulus(e.at(i, m)).scaled(Rational(k[static_cast<std::size_t>(m)]));
      modulus_zero = sum.is_zero();
    }
    if (modulus_zero) l0.push_back(k);
  }
  Json checked = Json::array();
  for (const auto& k : l0) {
    const auto K = winding_numbers(e, b, k, policy);
    if (!K) {
      v.value = Truth::Indeterminate;
      v.method = "symbolic+interval";
      v.reason = "certified rounding exhausted the precision budget";
      return v;
    }
    Json Kj = Json::array();
    bool nonzero = false;
    for (const auto& x : *K) {
      Kj.push_back(to_long(x));
      nonzero = nonzero || x != 0;
    }
    if (nonzero) {
      v.value = Truth::Yes;
      v.witness = {{"k", index_json(k)}, {"K", Kj}, {"branches", b.to_json()}};
      return v;
    }
    checked.push_back({{"k", index_json(k)}, {"K", Kj}});
  }
  v.value = Truth::No;
  v.witness = {{"l0_basis", index_list_json(l0)}, {"checked", checked}, {"branches", b.to_json()}};
  return v;
}

GeneratorSearch find_infinitesimal_generators(const EigenData& e, int branch_bound, int omega_bound,
                                              const PrecisionPolicy& policy) {
  if (branch_bound < 0) throw std::invalid_argument("branch bound must be non-negative");
  const auto omega = enumerate_omega(e, omega_bound);
  return solve_branches(e, lattice_hnf(omega.points, e.n), branch_bound, policy, "omega");
}

GeneratorSearch find_weakly_nonresonant_generators(const EigenData& e, int branch_bound,
                                                   const PrecisionPolicy& policy) {
  if (branch_bound < 0) throw std::invalid_argument("branch bound must be non-negative");
  return solve_branches(e, relation_lattice(e).basis, branch_bound, policy, "relation");
}

Verdict is_hyperbolic(const EigenData& e, const PrecisionPolicy& policy) {
  Verdict v;
  v.method = "exact";
  v.bounds_used = precision_bounds(policy);
  const auto lm = log_moduli(e);
  Json certified = Json::array();
  bool unresolved = false;
  for (const auto& S : subsets(e.n, e.p)) {
    std::vector<std::vector<LogModulusVector>> rows;
    for (int i = 0; i < e.p; ++i) {
      std::vector<LogModulusVector> r;
      for (int m : S) r.push_back(lm[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)]);
      rows.push_back(std::move(r));
    }
    Json subset = Json::array();
    for (int m : S) subset.push_back(m + 1);
    const MinorSearch s = full_row_rank(rows, policy);
    if (s.status == RankCertificate::SymbolicallyDeficient) {
      v.value = Truth::No;
      v.method = "exact";
      v.witness = {{"dependent_covectors", subset}};
      return v;
    }
    if (s.status == RankCertificate::Unresolved) {
      unresolved = true;
    } else {
      v.method = "symbolic+interval";
      certified.push_back(subset);
    }
  }
  if (unresolved) {
    v.value = Truth::Indeterminate;
    v.method = "symbolic+interval";
    v.reason = "some covector minor neither symbolically zero nor certified nonzero";
    return v;
  }
  v.value = Truth::Yes;
  v.witness = {{"independent_subsets", certified}};
  return v;
}

Verdict is_weakly_hyperbolic(const EigenData& e, const PrecisionPolicy& policy) {
  Verdict v;
  v.method = "exact";
  v.bounds_used = precision_bounds(policy);
  const auto lm = log_moduli(e);
  Json separators = Json::array();
  bool unresolved = false;
  for (const auto& S : subsets(e.n, e.p)) {
    Json subset = Json::array();
    for (int m : S) subset.push_back(m + 1);
    // Lift each covector entry to its coordinates over the log-primes.
    std::vector<std::pair<int, Integer>> keys;
    for (int i = 0; i < e.p; ++i) {
      std::set<Integer> primes;
      for (int m : S) {
        for (const auto& [pr, c] : lm[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)].coords) primes.insert(pr);
      }
      for (const auto& pr : primes) keys.emplace_back(i, pr);
    }
    const std::size_t s = S.size();
    RationalMatrix lift(keys.size(), s);
    for (std::size_t r = 0; r < keys.size(); ++r) {
      for (std::size_t j = 0; j < s; ++j) {
        const auto& coords = lm[static_cast<std::size_t>(keys[r].first)][static_cast<std::size_t>(S[j])].coords;
        const auto it = coords.find(keys[r].second);
        if (it != coords.end()) lift(r, j) = it->second;
      }
    }
    const std::size_t rank = lift.rank();
    bool rank_ok = rank == 0;
    for (const auto& R : subsets(e.p, static_cast<int>(rank))) {
      if (rank_ok) break;
      std::vector<std::vector<LogModulusVector>> rows;
      for (int i : R) {
        std::vector<LogModulusVector> row;
        for (int m : S) row.push_back(lm[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)]);
        rows.push_back(std::move(row));
      }
      if (full_row_rank(rows, policy).status == RankCertificate::Certified) {
        rank_ok = true;
        if (rank > 0 && e.p > 1) v.method = "symbolic+interval";
      }
    }
    if (!rank_ok) {
      unresolved = true;
      continue;
    }
    // Origin in the hull: lambda >= 0, sum lambda = 1, lift * lambda = 0.
    RationalMatrix A(keys.size() + 1, s);
    std::vector<Rational> b(keys.size() + 1, Rational(0));
    for (std::size_t r = 0; r < keys.size(); ++r) {
      for (std::size_t j = 0; j < s; ++j) A(r, j) = lift(r, j);
    }
    for (std::size_t j = 0; j < s; ++j) A(keys.size(), j) = 1;
    b[keys.size()] = 1;
    if (const auto lambda = find_feasible_point(A, b)) {
      Json lj = Json::array();
      for (const auto& x : *lambda) lj.push_back(x.get_str());
      v.value = Truth::No;
      v.witness = {{"subset", subset}, {"hull_coefficients", lj}};
      return v;
    }
    // Separator y with y . lift_j >= 1 for every j (y = y+ - y-).
    const std::size_t L = keys.size();
    RationalMatrix G(s, 2 * L + s);
    std::vector<Rational> ones(s, Rational(1));
    for (std::size_t j = 0; j < s; ++j) {
      for (std::size_t r = 0; r < L; ++r) {
        G(j, r) = lift(r, j);
        G(j, L + r) = -lift(r, j);
      }
      G(j, 2 * L + j) = -1;
    }
    const auto sep = find_feasible_point(G, ones);
    if (!sep) throw std::logic_error("neither a hull point nor a separator exists");
    Json yj = Json::array();
    for (std::size_t r = 0; r < L; ++r) {
      const Rational y = (*sep)[r] - (*sep)[L + r];
      yj.push_back({{"row", keys[r].first + 1}, {"prime", keys[r].second.get_str()}, {"y", y.get_str()}});
    }
    separators.push_back({{"subset", subset}, {"separator", yj}, {"lifted_rank", rank}});
  }
  if (unresolved) {
    v.value = Truth::Indeterminate;
    v.method = "symbolic+interval";
    v.reason = "lifted rational rank could not be matched by a certified real rank";
    return v;
  }
  v.value = Truth::Yes;
  v.witness = {{"separators", separators}};
  return v;
}

Json PoincareTypeCertificate::to_json() const {
  Json a = Json::object();
  for (const auto& [m, al] : alpha) a[std::to_string(m + 1)] = al;
  Json b = Json::array();
  for (const auto& bp : beta) {
    b.push_back({{"i", bp.i + 1}, {"j", bp.j + 1}, {"beta_i", bp.beta_i}, {"beta_j", bp.beta_j}});
  }
  Json cj = Json::object();
  for (const auto& [p, x] : c.coords) cj[p.get_str()] = x.get_str();
  return {{"log_d", cj}, {"k", k}, {"alpha", a}, {"beta", b}, {"M", M}};
}

PoincareResult poincare_type_single(const EigenData& e, const OmegaEnumeration& omega, int torsion_bound) {
  if (e.p != 1) throw std::invalid_argument("poincare_type_single requires a single diffeomorphism (p = 1)");
  PoincareResult out;
  Verdict& v = out.verdict;
  v.method = "exact";
  v.bounds_used = {{"torsion_bound", torsion_bound}, {"omega_bound", omega.bound}};
  const auto n = static_cast<std::size_t>(e.n);
  std::vector<LogModulusVector> lm;
  bool off_circle = false;
  for (int m = 0; m < e.n; ++m) {
    lm.push_back(log_modulus(e.at(0, m)));
    off_circle = off_circle || !lm.back().is_zero();
  }
  if (!off_circle) {
    v.value = Truth::No;
    v.witness = {{"all_unit_modulus", true}};
    v.reason = "every eigenvalue lies on the unit circle";
    return out;
  }
  const auto L = independent_subset(omega.points, e.n, n - 1);
  if (L.size() + 1 < n) {
    throw std::invalid_argument("poincare_type_single needs n-1 independent Omega points; found " +
                                std::to_string(L.size()));
  }
  IntMatrix Lm;
  for (const auto& l : L) Lm.push_back(to_int_vector(l));
  const IntMatrix ker = integer_kernel(Lm, n);
  if (ker.size() != 1) throw std::logic_error("kernel of the Omega matrix is not one-dimensional");
  PoincareTypeCertificate cert;
  for (const auto& x : ker.front()) cert.k.push_back(to_long(x));
  std::size_t pivot = 0;
  while (cert.k[pivot] == 0) ++pivot;
  cert.c = lm[pivot].scaled(Rational(1, 1) / Rational(cert.k[pivot]));
  for (std::size_t m = 0; m < n; ++m) {
    if (!(lm[m] == cert.c.scaled(Rational(cert.k[m])))) {
      v.value = Truth::Indeterminate;
      v.reason = "log-modulus vector is not a multiple of the Omega kernel";
      return out;
    }
  }
  for (std::size_t m = 0; m < n; ++m) {
    if (lm[m].is_zero()) continue;
    const bool expanding = e.at(0, static_cast<int>(m)).norm() > 1;
    if (expanding != (cert.k[m] > 0)) {
      for (auto& x : cert.k) x = -x;
      cert.c = negated(cert.c);
    }
    break;
  }
  long M = 0;
  for (std::size_t m = 0; m < n; ++m) {
    if (cert.k[m] != 0) continue;
    long found = 0;
    GaussianRational power(1);
    for (long a = 1; a <= torsion_bound; ++a) {
      power *= e.at(0, static_cast<int>(m));
      if (power.is_one()) {
        found = a;
        break;
      }
    }
    if (found == 0) {
      v.value = Truth::Indeterminate;
      v.reason = "torsion order of eigenvalue " + std::to_string(m + 1) + " not found within the bound";
      return out;
    }
    cert.alpha[static_cast<int>(m)] = found;
    M = std::max(M, found);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cert.k[i] >= 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (cert.k[j] <= 0) continue;
      const long g = std::gcd(-cert.k[i], cert.k[j]);
      const long bi = cert.k[j] / g;
      const long bj = -cert.k[i] / g;
      long found = 0;
      for (long t = 1; t <= torsion_bound; ++t) {
        const GaussianRational prod = pow(e.at(0, static_cast<int>(i)), t * bi) * pow(e.at(0, static_cast<int>(j)), t * bj);
        if (prod.is_one()) {
          found = t;
          break;
        }
      }
      if (found == 0) {
        v.value = Truth::Indeterminate;
        v.reason = "no beta pair for eigenvalues " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                   " within the bound";
        return out;
      }
      cert.beta.push_back({static_cast<int>(i), static_cast<int>(j), found * bi, found * bj});
      M = std::max({M, found * bi, found * bj});
    }
  }
  cert.M = M + 1;
  if (!verify_poincare_certificate(e, cert)) throw std::logic_error("Poincare certificate failed re-verification");
  v.value = Truth::Yes;
  v.witness = cert.to_json();
  out.certificate = cert;
  return out;
}

bool verify_poincare_certificate(const EigenData& e, const PoincareTypeCertificate& cert) {
  if (e.p != 1 || static_cast<int>(cert.k.size()) != e.n || cert.c.is_zero()) return false;
  for (int m = 0; m < e.n; ++m) {
    const long km = cert.k[static_cast<std::size_t>(m)];
    if (!(log_modulus(e.at(0, m)) == cert.c.scaled(Rational(km)))) return false;
    if (km != 0 && (e.at(0, m).norm() > 1) != (km > 0)) return false;
    if (km == 0) {
      const auto it = cert.alpha.find(m);
      if (it == cert.alpha.end() || it->second < 1 || it->second >= cert.M) return false;
      if (!pow(e.at(0, m), it->second).is_one()) return false;
    }
  }
  for (const auto& bp : cert.beta) {
    const long ki = cert.k[static_cast<std::size_t>(bp.i)];
    const long kj = cert.k[static_cast<std::size_t>(bp.j)];
    if (!(ki < 0 && kj > 0) || bp.beta_i < 1 || bp.beta_j < 1) return false;
    if (bp.beta_i * ki + bp.beta_j * kj != 0) return false;
    if (bp.beta_i >= cert.M || bp.beta_j >= cert.M) return false;
    if (!(pow(e.at(0, bp.i), bp.beta_i) * pow(e.at(0, bp.j), bp.beta_j)).is_one()) return false;
  }
  for (int i = 0; i < e.n; ++i) {
    for (int j = 0; j < e.n; ++j) {
      if (cert.k[static_cast<std::size_t>(i)] >= 0 || cert.k[static_cast<std::size_t>(j)] <= 0) continue;
      const bool listed = std::any_of(cert.beta.begin(), cert.beta.end(),
                                      [&](const BetaPair& bp) { return bp.i == i && bp.j == j; });
      if (!listed) return false;
    }
  }
  return true;
}

MultiIndex reduce_exponent(const PoincareTypeCertificate& cert, const MultiIndex& s) {
  if (s.size() != cert.k.size()) throw std::invalid_argument("reduce_exponent: dimension mismatch");
  MultiIndex out = s;
  for (const auto& [m, a] : cert.alpha) out[static_cast<std::size_t>(m)] %= static_cast<int>(a);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& bp : cert.beta) {
      int& si = out[static_cast<std::size_t>(bp.i)];
      int& sj = out[static_cast<std::size_t>(bp.j)];
      if (si > cert.M && sj > cert.M) {
        const long t = std::min(si / bp.beta_i, sj / bp.beta_j);
        si -= static_cast<int>(t * bp.beta_i);
        sj -= static_cast<int>(t * bp.beta_j);
        changed = true;
      }
    }
  }
  return out;
}

Truth ClassificationReport::normal_form_hypothesis() const {
  if (projectively_hyperbolic.value == Truth::Yes || weakly_nonresonant_generators.status == Truth::Yes) {
    return Truth::Yes;
  }
  if (projectively_hyperbolic.value == Truth::No && weakly_nonresonant_generators.status == Truth::No) {
    return Truth::No;
  }
  return Truth::Indeterminate;
}

bool ClassificationReport::any_indeterminate() const {
  for (const Verdict* v : {&nondegenerate, &projectively_hyperbolic, &weakly_resonant, &hyperbolic, &weakly_hyperbolic}) {
    if (v->value == Truth::Indeterminate) return true;
  }
  if (infinitesimal_generators.status == Truth::Indeterminate) return true;
  if (weakly_nonresonant_generators.status == Truth::Indeterminate) return true;
  return poincare && poincare->verdict.value == Truth::Indeterminate;
}

Json ClassificationReport::to_json() const {
  Json out{{"nondegenerate", nondegenerate.to_json()},
           {"projectively_hyperbolic", projectively_hyperbolic.to_json()},
           {"weakly_resonant", weakly_resonant.to_json()},
           {"infinitesimal_generators", infinitesimal_generators.to_json()},
           {"weakly_nonresonant_generators", weakly_nonresonant_generators.to_json()},
           {"hyperbolic", hyperbolic.to_json()},
           {"weakly_hyperbolic", weakly_hyperbolic.to_json()},
           {"normal_form_hypothesis", truth_name(normal_form_hypothesis())},
           {"omega_bound", omega_bound}};
  out["poincare_type"] = poincare ? poincare->verdict.to_json() : Json{{"applicable", false}};
  return out;
}

ClassificationReport classify_family(const Family& fam, const ClassifyOptions& options) {
  const EigenData e = EigenData::from_family(fam);
  ClassificationReport r;
  r.omega_bound = options.omega_bound > 0 ? options.omega_bound : 2 * fam.degree_bound();
  r.nondegenerate = is_nondegenerate(e, fam.q(), r.omega_bound);
  r.projectively_hyperbolic = is_projectively_hyperbolic(e, options.policy);
  r.weakly_resonant = weak_resonance(e, BranchChoice::principal(e.p, e.n), options.policy);
  r.infinitesimal_generators = find_infinitesimal_generators(e, options.branch_bound, r.omega_bound, options.policy);
  r.weakly_nonresonant_generators = find_weakly_nonresonant_generators(e, options.branch_bound, options.policy);
  r.hyperbolic = is_hyperbolic(e, options.policy);
  r.weakly_hyperbolic = is_weakly_hyperbolic(e, options.policy);
  if (e.p == 1) {
    const auto omega = enumerate_omega(e, r.omega_bound);
    const auto indep = independent_subset(omega.points, e.n, static_cast<std::size_t>(e.n - 1));
    if (static_cast<int>(indep.size()) == e.n - 1) r.poincare = poincare_type_single(e, omega, options.torsion_bound);
  }
  return r;
}

}  // namespace germnf
