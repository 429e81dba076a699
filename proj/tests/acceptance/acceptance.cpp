#include "../support/workloads.hpp"

#include "germnf/classify/classify.hpp"
#include "germnf/classify/log_poly.hpp"
#include "germnf/normalform/integrable.hpp"
#include "germnf/normalform/normalize.hpp"
#include "germnf/normalform/realcase.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

using namespace germnf;
using namespace germnf::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

MultiIndex mi(std::initializer_list<int> v) { return MultiIndex(v); }

TruncatedSeries monomial_series(int n, int D, const MultiIndex& a) { return TruncatedSeries::monomial(n, D, a, 1); }

Outcome criterion1() {
  Outcome o;
  const Family fam = load_fixture("saddle_torsion.json");
  const EigenData e = EigenData::from_family(fam);
  const RelationLattice lat = relation_lattice(e);
  o.require(lat.basis == std::vector<MultiIndex>{mi({2, 2})}, "relation lattice basis is not {(2,2)}");
  const auto fi = first_integrals(fam, 4);
  o.require(fi.size() == 1 && fi[0] == monomial_series(2, 4, mi({2, 2})), "first integrals at D=4 are not span{x^2y^2}");
  o.require(is_projectively_hyperbolic(e).value == Truth::Yes, "projective hyperbolicity is not Yes");
  const auto gen = find_infinitesimal_generators(e, 10, 8);
  o.require(gen.status == Truth::No, "infinitesimal generators with B=10 are not None");
  o.require(weak_resonance(e, BranchChoice::principal(1, 2)).value == Truth::Yes, "weak resonance is not Yes");
  if (o.pass) o.detail = "lattice {(2,2)}, F = x^2y^2, PH yes, generators none, weakly resonant";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const Family fam = load_fixture("nondivisible_pair.json");
  const EigenData e = EigenData::from_family(fam);
  o.require(!family_commutativity_defect(fam).has_value(), "the pair does not commute");
  o.require(!verify_pd_nf(fam).has_value(), "the pair is not in Poincare-Dulac normal form");
  const auto fail = first_division_failure(fam);
  o.require(fail && fail->germ == 0 && fail->component == 1 && fail->offending == mi({2, 0}),
            "division does not fail at (map 1, component 2, x^2)");
  const Verdict ph = is_projectively_hyperbolic(e);
  o.require(ph.value == Truth::No && ph.method == "exact", "projective hyperbolicity is not an exact No");
  const auto wnr = find_weakly_nonresonant_generators(e, 10);
  o.require(wnr.status == Truth::No, "weakly non-resonant generators were reported");
  o.require(weak_resonance(e, BranchChoice::principal(2, 2)).value == Truth::Yes,
            "principal generators are not weakly resonant");
  ClassifyOptions opt;
  o.require(classify_family(fam, opt).normal_form_hypothesis() == Truth::No, "normal form hypothesis is not No");
  if (o.pass) o.detail = "commuting, PD-NF, division fails at x^2, PH exact no, no weakly non-resonant generators";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const Family fam = load_fixture("rotation_i.json");
  const EigenData e = EigenData::from_family(fam);
  const auto omega = enumerate_omega(e, 4);
  std::set<MultiIndex> got(omega.points.begin(), omega.points.end());
  const std::set<MultiIndex> want{mi({1, 1}), mi({2, 2}), mi({4, 0}), mi({0, 4})};
  o.require(got == want && omega.points.size() == 4, "Omega up to 4 is not {(1,1),(2,2),(4,0),(0,4)}");
  o.require(vect_omega_rank(relation_lattice(e), 4) == std::make_pair(2, 2), "Vect Omega rank is not (2,2)");
  o.require(weak_resonance(e, BranchChoice::principal(1, 2)).value == Truth::Yes, "weak resonance is not Yes");
  o.require(is_projectively_hyperbolic(e).value == Truth::No, "projective hyperbolicity is not No");
  if (o.pass) o.detail = "Omega(4) matches, rank (2,2), weakly resonant, PH no";
  return o;
}

struct NormalizedCase {
  std::string name;
  Family normalized;
};

std::vector<NormalizedCase> g_normalized;

Outcome criterion4() {
  Outcome o;
  int cases = 0;
  std::size_t eliminated = 0, surviving = 0;
  for (int k = 0; k < 100 && o.pass; ++k) {
    const RoundTripCase c = make_round_trip_case(k);
    const std::string tag = "case " + std::to_string(k) + " (" + c.name + "): ";
    o.require(!family_commutativity_defect(c.normal_form).has_value(), tag + "generated family does not commute");
    o.require(!family_commutativity_defect(c.input).has_value(), tag + "conjugated family does not commute");
    const NormalizationResult res = poincare_dulac_normalize(c.input);
    o.require(conjugate(c.input, res.psi) == res.normalized, tag + "psi does not conjugate input to the output");
    o.require(!family_commutativity_defect(res.normalized).has_value(), tag + "normalized family does not commute");
    if (!o.pass) break;
    const auto cert = extract_integrable_certificate(res.normalized, c.lattice);
    o.require(cert.all_zero(), tag + "certificate has nonzero residuals");
    g_normalized.push_back({c.name, res.normalized});
    eliminated += res.elimination_log.size();
    for (const auto& g : res.normalized.germs()) {
      for (const auto& comp : g.nonlinear_part()) surviving += comp.size();
    }
    ++cases;
  }
  if (o.pass) {
    o.detail = std::to_string(cases) + " seeded cases, " + std::to_string(eliminated) + " eliminations, " +
               std::to_string(surviving) + " resonant terms, all residuals zero";
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  int checked = 0, flagged = 0;
  for (const auto& c : g_normalized) {
    const EigenData e = EigenData::from_family(c.normalized);
    ClassifyOptions opt;
    const ClassificationReport rep = classify_family(c.normalized, opt);
    if (rep.normal_form_hypothesis() != Truth::Yes) continue;
    ++flagged;
    const int D = c.normalized.degree_bound();
    const auto omega = omega_from_lattice(relation_lattice(e), D / 2);
    for (const auto& G : omega.points) {
      const TruncatedSeries g = monomial_series(e.n, D, G);
      for (const auto& phi : c.normalized.germs()) {
        o.require(compose(g, phi.components()) == g, c.name + ": " + monomial_string(G) + " is not invariant");
        ++checked;
      }
    }
  }
  o.require(flagged == static_cast<int>(g_normalized.size()), "a round-trip family was not flagged by classify");
  if (o.pass) {
    o.detail = std::to_string(flagged) + " flagged families, " + std::to_string(checked) + " invariance checks";
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::vector<EigenData> data;
  for (const char* f : {"saddle_torsion.json", "nondivisible_pair.json", "rotation_i.json", "quadratic_nonresonant.json",
                        "poincare_three.json", "commuting_pair.json"}) {
    data.push_back(EigenData::from_family(load_fixture(f)));
  }
  Sampler s(20261016);
  for (int k = 0; k < 50; ++k) {
    const int n = s.uniform(1, 4);
    data.push_back(s.eigendata(s.uniform(1, std::min(n, 2)), n));
  }
  long compared = 0;
  for (std::size_t k = 0; k < data.size() && o.pass; ++k) {
    const EigenData& e = data[k];
    const RelationLattice lat = relation_lattice(e);
    for (int bound = 1; bound <= 6; ++bound) {
      const auto box = brute_force_box(e.n, 1, bound);
      std::vector<MultiIndex> omega;
      for (const auto& v : box) {
        if (e.is_relation(v)) omega.push_back(v);
      }
      o.require(omega_from_lattice(lat, bound).points == omega, "Omega disagrees on eigendata " + std::to_string(k));
      for (int m = 0; m < e.n; ++m) {
        std::vector<MultiIndex> res;
        for (const auto& v : box) {
          if (degree(v) >= 2 && e.is_resonant(m, v)) res.push_back(v);
        }
        o.require(resonant_set(e, lat, m, bound).points == res,
                  "R_" + std::to_string(m + 1) + " disagrees on eigendata " + std::to_string(k));
      }
      compared += static_cast<long>(box.size());
    }
  }
  if (o.pass) o.detail = std::to_string(data.size()) + " eigendata, " + std::to_string(compared) + " box points";
  return o;
}

Outcome criterion7() {
  Outcome o;
  Sampler s(7);
  int checks = 0;
  for (int k = 0; k < 50 && o.pass; ++k) {
    const int n = s.uniform(1, 3);
    const int D = s.uniform(3, 6);
    const Germ f = s.division_passing(n, D);
    MultiIndex l(static_cast<std::size_t>(n), 0);
    const int dl = s.uniform(1, D - 1);
    for (int t = 0; t < dl; ++t) ++l[static_cast<std::size_t>(s.uniform(0, n - 1))];
    const TruncatedSeries direct = compose(monomial_series(n, D, l), f.components());
    for (int order = 1; degree(l) + order <= D; ++order) {
      o.require(pushforward_leading(l, f, order) == direct.homogeneous_part(degree(l) + order),
                "germ " + std::to_string(k) + ", order " + std::to_string(order) + " disagrees");
      ++checks;
    }
  }
  if (o.pass) o.detail = "50 germs, " + std::to_string(checks) + " homogeneous parts agree";
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (int k = 0; k < 20 && o.pass; ++k) {
    const RealRoundTripCase c = make_real_case(k);
    const std::string tag = "case " + std::to_string(k) + " (" + c.name + "): ";
    const ComplexifiedFamily cx = complexify_real_family(c.input);
    o.require(cx.sigma == c.sigma, tag + "block pairing not recognized");
    NormalizeOptions opt;
    opt.rho_equivariant = true;
    opt.sigma = cx.sigma;
    const NormalizationResult res = poincare_dulac_normalize(cx.family, opt);
    o.require(!rho_violation(res.psi, cx.sigma).has_value(), tag + "psi is not rho-equivariant");
    const Family real_nf = realify_normal_form(res.normalized, cx.sigma);
    for (const auto& g : real_nf.germs()) o.require(g.is_real(), tag + "realified family is not real");
    const Germ R = realify_germ(res.psi, cx.sigma);
    o.require(R.is_real(), tag + "real conjugator is not real");
    o.require(conjugate(c.input, R) == real_nf, tag + "real conjugator does not conjugate input to output");
  }
  if (o.pass) o.detail = "20 real families, real normal forms and real conjugators verified";
  return o;
}

Outcome criterion9() {
  Outcome o;
  Sampler s(9);
  int reductions = 0;
  const std::vector<EigenData> cases{EigenData::from_family(load_fixture("saddle_torsion.json")),
                                     EigenData::from_family(load_fixture("poincare_three.json"))};
  for (const auto& e : cases) {
    const auto omega = enumerate_omega(e, 2 * e.n + 4);
    const PoincareResult r = poincare_type_single(e, omega);
    o.require(r.verdict.value == Truth::Yes && r.certificate.has_value(), "Poincare type is not Yes");
    if (!o.pass) break;
    o.require(verify_poincare_certificate(e, *r.certificate), "certificate re-verification failed");
    for (int t = 0; t < 100; ++t) {
      MultiIndex v(static_cast<std::size_t>(e.n));
      for (auto& x : v) x = s.uniform(0, 50);
      const MultiIndex red = reduce_exponent(*r.certificate, v);
      o.require(is_nonnegative(red) && e.product(0, red) == e.product(0, v), "reduction changed the product");
      ++reductions;
    }
  }
  if (o.pass) o.detail = "2 certificates verified, " + std::to_string(reductions) + " reductions preserve products";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::function<Outcome()> run;
    double limit_s;
  };
  const std::vector<Criterion> criteria{{1, criterion1, 1.0},   {2, criterion2, 1.0}, {3, criterion3, 1.0},
                                        {4, criterion4, 120.0}, {5, criterion5, 0.0}, {6, criterion6, 30.0},
                                        {7, criterion7, 0.0},   {8, criterion8, 0.0}, {9, criterion9, 0.0}};
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s && o.pass) {
      o.pass = false;
      o.detail = "time limit exceeded: " + o.detail;
    }
    std::ostringstream limit;
    if (c.limit_s > 0) limit << " limit " << c.limit_s << " s";
    std::printf("criterion %d: %s  %s (%.3f s%s)\n", c.id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs,
                limit.str().c_str());
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
