#include "germnf/classify/classify.hpp"
#include "germnf/normalform/integrable.hpp"
#include "germnf/normalform/normalize.hpp"
#include "germnf/normalform/realcase.hpp"

#include "../support/workloads.hpp"

#include <doctest.h>

using namespace germnf;
using germnf::testing::make_real_case;
using germnf::testing::make_round_trip_case;

namespace {

constexpr int kCases = 30;

bool all_resonant(const Family& fam) {
  const EigenData e = EigenData::from_family(fam);
  for (const auto& g : fam.germs()) {
    for (int m = 0; m < fam.n(); ++m) {
      for (const auto& [a, c] : g.component(m).terms()) {
        if (degree(a) >= 2 && !e.is_resonant(m, a)) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("normalization is sound on conjugated integrable normal forms") {
  for (int k = 0; k < kCases; ++k) {
    const auto c = make_round_trip_case(k);
    CAPTURE(c.name);
    REQUIRE(!family_commutativity_defect(c.input).has_value());
    const auto r = poincare_dulac_normalize(c.input);
    CHECK(conjugate(c.input, r.psi) == r.normalized);
    CHECK(all_resonant(r.normalized));
    CHECK(!family_commutativity_defect(r.normalized).has_value());
    for (const auto& s : r.elimination_log) {
      CHECK(!s.divisor.is_zero());
      CHECK(s.h * s.divisor == s.coefficient);
    }
    CHECK(extract_integrable_certificate(r.normalized, c.lattice).all_zero());
  }
}

TEST_CASE("first integrals are transported by the normalizing map") {
  for (int k = 0; k < kCases; k += 3) {
    const auto c = make_round_trip_case(k);
    CAPTURE(c.name);
    const int D = c.input.degree_bound();
    const auto r = poincare_dulac_normalize(c.input);
    std::vector<TruncatedSeries> moved;
    for (const auto& F : first_integrals(c.input, D)) moved.push_back(compose(F, r.psi.components()));
    const auto target = first_integrals(r.normalized, D);
    CHECK(echelonize(moved) == echelonize(target));
    for (const auto& F : target) CHECK(!verify_first_integral_support(r.normalized, F).has_value());
  }
}

TEST_CASE("Omega monomials are first integrals of normalized families") {
  for (int k = 0; k < kCases; ++k) {
    const auto c = make_round_trip_case(k);
    CAPTURE(c.name);
    const int D = c.input.degree_bound();
    const auto r = poincare_dulac_normalize(c.input);
    for (const auto& l : omega_from_lattice(c.lattice, D / 2).points) {
      const auto G = TruncatedSeries::monomial(c.input.n(), D, l, 1);
      for (const auto& g : r.normalized.germs()) CHECK(compose(G, g.components()) == G);
    }
  }
}

TEST_CASE("generation is deterministic in the seed") {
  const auto a = make_round_trip_case(4), b = make_round_trip_case(4);
  CHECK(a.input == b.input);
  CHECK(a.normal_form == b.normal_form);
  const EigenData e({{GaussianRational(-2), make_rational(1, 2)}});
  const auto lat = relation_lattice(e);
  CHECK(generate_integrable_nf(e, lat, 6, 11) == generate_integrable_nf(e, lat, 6, 11));
}

TEST_CASE("rho-equivariant normalization commutes with the involution") {
  for (int k = 0; k < 10; ++k) {
    const auto c = make_real_case(k);
    CAPTURE(c.name);
    const auto cx = complexify_real_family(c.input);
    CHECK(cx.sigma == c.sigma);
    NormalizeOptions opt;
    opt.rho_equivariant = true;
    opt.sigma = cx.sigma;
    const auto r = poincare_dulac_normalize(cx.family, opt);
    CHECK(!rho_violation(r.psi, cx.sigma).has_value());
    CHECK(conjugate(cx.family, r.psi) == r.normalized);
    const Germ real_psi = realify_germ(r.psi, cx.sigma);
    CHECK(real_psi.is_real());
    CHECK(conjugate(c.input, real_psi) == realify_normal_form(r.normalized, cx.sigma));
  }
}

TEST_CASE("certificates re-verify on the hypothesis pool") {
  for (const auto& c : germnf::testing::hypothesis_pool()) {
    CAPTURE(c.name);
    const Verdict ph = is_projectively_hyperbolic(c.eigen);
    const GeneratorSearch wnr = find_weakly_nonresonant_generators(c.eigen, 10);
    CHECK((ph.value == Truth::Yes || wnr.status == Truth::Yes));
    if (wnr.status == Truth::Yes) {
      const Verdict wr = weak_resonance(c.eigen, *wnr.branches);
      CHECK(wr.value == Truth::No);
    }
    for (const auto& b : relation_lattice(c.eigen).basis) CHECK(c.eigen.is_relation(b));
  }
}
