#include "germnf/classify/classify.hpp"

#include "../support/workloads.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace germnf;
using germnf::testing::Sampler;

namespace {

GaussianRational q(long a, long b = 1) { return make_rational(a, b); }
const GaussianRational I = GaussianRational::i();
EigenData eig(std::vector<std::vector<GaussianRational>> rows) { return EigenData(std::move(rows)); }

std::complex<double> approx(const GaussianRational& z) { return {z.re().get_d(), z.im().get_d()}; }

// K_i(k) in floating point, rounded only at the end.
double winding_oracle(const EigenData& e, const BranchChoice& b, int i, const MultiIndex& k) {
  double s = 0;
  for (int m = 0; m < e.n; ++m) {
    const double arg = std::arg(approx(e.at(i, m)));
    s += k[static_cast<std::size_t>(m)] * (arg / (2 * M_PI) + b.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)].get_d());
  }
  return s;
}

GaussianRational product(const EigenData& e, int i, const MultiIndex& k) {
  GaussianRational out = 1;
  for (int m = 0; m < e.n; ++m) out *= pow(e.at(i, m), k[static_cast<std::size_t>(m)]);
  return out;
}

BranchChoice branches(std::vector<std::vector<long>> rows) {
  BranchChoice b;
  for (const auto& r : rows) b.b.emplace_back(r.begin(), r.end());
  return b;
}

}  // namespace

TEST_CASE("non-degeneracy") {
  const Verdict saddle = is_nondegenerate(germnf::testing::load_fixture("saddle_torsion.json"), 8);
  CHECK(saddle.value == Truth::Yes);
  CHECK(saddle.witness == Json::parse("[[2,2]]"));
  CHECK(is_nondegenerate(eig({{q(2), q(3)}}), 1, 8).value == Truth::No);
  const Verdict rot = is_nondegenerate(eig({{I, -I}}), 1, 8);
  CHECK(rot.value == Truth::Yes);
  CHECK(rot.witness == Json::parse("[[1,1]]"));
  CHECK(is_nondegenerate(eig({{I, -I}}), 2, 8).value == Truth::Yes);
  CHECK(is_nondegenerate(eig({{I, -I}}), 2, 2).value == Truth::No);
  const Family nondiag({Germ({TruncatedSeries::variable(2, 2, 0) + TruncatedSeries::variable(2, 2, 1),
                              TruncatedSeries::variable(2, 2, 1)})});
  CHECK_THROWS_AS(is_nondegenerate(nondiag, 8), std::invalid_argument);
}

TEST_CASE("projective hyperbolicity") {
  CHECK(is_projectively_hyperbolic(eig({{q(-2), q(1, 2)}})).value == Truth::Yes);
  const Verdict pair = is_projectively_hyperbolic(eig({{q(2), q(4)}, {q(-3), q(9)}}));
  CHECK(pair.value == Truth::No);
  CHECK(pair.method == "exact");
  CHECK(is_projectively_hyperbolic(eig({{I, -I}})).value == Truth::No);
  const Verdict two = is_projectively_hyperbolic(eig({{q(2), q(3), q(1, 6)}, {q(3), q(2), q(1, 6)}}));
  CHECK(two.value == Truth::Yes);
  CHECK(two.method == "symbolic+interval");
}

TEST_CASE("projective hyperbolicity is invariant under permutation and equal-norm replacement") {
  const std::vector<std::vector<std::vector<GaussianRational>>> cases{
      {{q(2), q(3), q(1, 6)}, {q(3), q(2), q(1, 6)}},
      {{q(2), q(4)}, {q(-3), q(9)}},
      {{q(2), q(1, 2), q(-1)}},
  };
  for (const auto& rows : cases) {
    const Truth base = is_projectively_hyperbolic(eig(rows)).value;
    auto rev = rows;
    for (auto& r : rev) std::reverse(r.begin(), r.end());
    CHECK(is_projectively_hyperbolic(eig(rev)).value == base);
    auto neg = rows;
    for (auto& r : neg) r[0] = -r[0];
    CHECK(is_projectively_hyperbolic(eig(neg)).value == base);
    auto rot = rows;
    for (auto& r : rot) r.back() = r.back() * I;
    CHECK(is_projectively_hyperbolic(eig(rot)).value == base);
  }
}

TEST_CASE("winding numbers match a floating-point oracle") {
  Sampler s(31);
  for (int t = 0; t < 100; ++t) {
    const EigenData e = s.eigendata(1 + t % 2, 2 + t % 2);
    BranchChoice b = BranchChoice::principal(e.p, e.n);
    for (auto& row : b.b) {
      for (auto& v : row) v = s.uniform(-2, 2);
    }
    const RelationLattice lat = relation_lattice(e);
    MultiIndex k(static_cast<std::size_t>(e.n), 0);
    for (const auto& row : lat.basis) {
      const int c = s.uniform(-3, 3);
      for (int m = 0; m < e.n; ++m) k[static_cast<std::size_t>(m)] += c * row[static_cast<std::size_t>(m)];
    }
    const auto K = winding_numbers(e, b, k);
    REQUIRE(K.has_value());
    for (int i = 0; i < e.p; ++i) CHECK((*K)[static_cast<std::size_t>(i)] == static_cast<long>(std::lround(winding_oracle(e, b, i, k))));
  }
}

TEST_CASE("weak resonance") {
  const EigenData saddle = eig({{q(-2), q(1, 2)}});
  for (int b1 = -3; b1 <= 3; ++b1) {
    for (int b2 = -3; b2 <= 3; ++b2) {
      const Verdict v = weak_resonance(saddle, branches({{b1, b2}}));
      CHECK(v.value == Truth::Yes);
      CHECK(v.witness["K"][0] == 2 * b1 + 2 * b2 + 1);
    }
  }
  const Verdict rot = weak_resonance(eig({{I, -I}}), BranchChoice::principal(1, 2));
  CHECK(rot.value == Truth::Yes);
  CHECK(weak_resonance(eig({{q(2), q(3)}}), BranchChoice::principal(1, 2)).value == Truth::No);
  CHECK(weak_resonance(eig({{q(1, 2), q(2)}}), BranchChoice::principal(1, 2)).value == Truth::No);
}

TEST_CASE("weak resonance verdict No means K vanishes on the checked basis") {
  Sampler s(12);
  int no_count = 0;
  for (int t = 0; t < 80; ++t) {
    const EigenData e = s.eigendata(1, 2 + t % 2);
    BranchChoice b = BranchChoice::principal(e.p, e.n);
    for (auto& row : b.b) {
      for (auto& v : row) v = s.uniform(-1, 1);
    }
    const Verdict v = weak_resonance(e, b);
    REQUIRE(v.value != Truth::Indeterminate);
    if (v.value == Truth::No) {
      ++no_count;
      for (const auto& kj : v.witness["l0_basis"]) {
        const MultiIndex k = kj.get<MultiIndex>();
        CHECK(e.is_relation(k));
        CHECK(std::abs(winding_oracle(e, b, 0, k)) < 1e-9);
      }
    } else {
      const MultiIndex k = v.witness["k"].get<MultiIndex>();
      CHECK(e.is_relation(k));
      CHECK(std::abs(winding_oracle(e, b, 0, k)) > 0.5);
    }
  }
  CHECK(no_count > 0);
}

TEST_CASE("generator searches") {
  const EigenData saddle = eig({{q(-2), q(1, 2)}});
  CHECK(find_infinitesimal_generators(saddle, 10, 8).status == Truth::No);
  CHECK(find_weakly_nonresonant_generators(saddle, 10).status == Truth::No);
  CHECK(find_infinitesimal_generators(eig({{I, -I}}), 10, 8).status == Truth::No);

  const GeneratorSearch half = find_infinitesimal_generators(eig({{q(1, 2), q(2)}}), 10, 8);
  REQUIRE(half.status == Truth::Yes);
  CHECK(half.branches->b == BranchChoice::principal(1, 2).b);

  const EigenData pair = eig({{q(2), q(4)}, {q(-3), q(9)}});
  CHECK(find_weakly_nonresonant_generators(pair, 10).status == Truth::No);

  // (-1, -1) needs b = (0, -1) or similar so that K(1,1) = 0.
  const EigenData neg = eig({{q(-1, 2), q(-2)}});
  const GeneratorSearch g = find_infinitesimal_generators(neg, 10, 8);
  REQUIRE(g.status == Truth::Yes);
  CHECK(std::abs(winding_oracle(neg, *g.branches, 0, {1, 1})) < 1e-9);
  CHECK(weak_resonance(neg, *g.branches).value == Truth::No);
}

TEST_CASE("hyperbolicity and weak hyperbolicity") {
  CHECK(is_hyperbolic(eig({{q(2), q(1, 2)}})).value == Truth::Yes);
  CHECK(is_weakly_hyperbolic(eig({{q(2), q(1, 2)}})).value == Truth::Yes);
  const EigenData pair = eig({{q(2), q(4)}, {q(-3), q(9)}});
  CHECK(is_hyperbolic(pair).value == Truth::No);
  const Verdict wh = is_weakly_hyperbolic(pair);
  CHECK(wh.value == Truth::Yes);
  CHECK(is_weakly_hyperbolic(eig({{q(2), q(1, 2), q(1)}})).value == Truth::No);
  CHECK(is_hyperbolic(eig({{q(2), q(1, 2), q(1)}})).value == Truth::No);
  // c1 = (ln2, ln2), c2 = (-ln2, -ln2): opposite rays, hull contains 0.
  const Verdict opp = is_weakly_hyperbolic(eig({{q(2), q(1, 2)}, {q(2), q(1, 2)}}));
  CHECK(opp.value == Truth::No);
}

TEST_CASE("Poincare-type certificates") {
  const EigenData saddle = eig({{q(-2), q(1, 2)}});
  const PoincareResult r = poincare_type_single(saddle, enumerate_omega(saddle, 8));
  REQUIRE(r.verdict.value == Truth::Yes);
  REQUIRE(r.certificate.has_value());
  CHECK(verify_poincare_certificate(saddle, *r.certificate));
  REQUIRE(r.certificate->beta.size() == 1);
  const BetaPair bp = r.certificate->beta[0];
  CHECK(bp.beta_i == 2);
  CHECK(bp.beta_j == 2);
  CHECK(reduce_exponent(*r.certificate, {5, 9}) == MultiIndex{1, 5});

  const EigenData three = eig({{q(2), q(1, 2), q(-1)}});
  const PoincareResult r3 = poincare_type_single(three, enumerate_omega(three, 8));
  REQUIRE(r3.certificate.has_value());
  CHECK(verify_poincare_certificate(three, *r3.certificate));
  CHECK(r3.certificate->alpha.at(2) == 2);
  CHECK(reduce_exponent(*r3.certificate, {0, 0, 7}) == MultiIndex{0, 0, 1});

  CHECK(poincare_type_single(eig({{I, -I}}), enumerate_omega(eig({{I, -I}}), 8)).verdict.value == Truth::No);
  CHECK_THROWS_AS(poincare_type_single(eig({{q(2), q(3)}, {q(3), q(2)}}), OmegaEnumeration{}), std::invalid_argument);

  // A tampered certificate is rejected.
  PoincareTypeCertificate bad = *r.certificate;
  bad.beta[0].beta_i = 1;
  bad.beta[0].beta_j = 1;
  CHECK(!verify_poincare_certificate(saddle, bad));
}

TEST_CASE("exponent reduction preserves the eigenvalue product") {
  const EigenData three = eig({{q(2), q(1, 2), q(-1)}});
  const auto cert = *poincare_type_single(three, enumerate_omega(three, 8)).certificate;
  const EigenData saddle = eig({{q(-2), q(1, 2)}});
  const auto cert2 = *poincare_type_single(saddle, enumerate_omega(saddle, 8)).certificate;
  Sampler s(4);
  for (int t = 0; t < 200; ++t) {
    const bool use3 = t % 2 == 0;
    const EigenData& e = use3 ? three : saddle;
    const auto& c = use3 ? cert : cert2;
    MultiIndex k(static_cast<std::size_t>(e.n));
    for (auto& v : k) v = s.uniform(0, 30);
    const MultiIndex r = reduce_exponent(c, k);
    CHECK(product(e, 0, r) == product(e, 0, k));
    for (auto v : r) CHECK(v >= 0);
    long contracting = 0, expanding = 0;
    bool c_bounded = true, e_bounded = true;
    for (int m = 0; m < e.n; ++m) {
      const Rational norm = e.at(0, m).norm();
      const long v = r[static_cast<std::size_t>(m)];
      if (norm < 1) contracting += v, c_bounded = c_bounded && v <= c.M;
      if (norm > 1) expanding += v, e_bounded = e_bounded && v <= c.M;
      if (norm == 1) CHECK(v < c.alpha.at(m));
    }
    CHECK((c_bounded || e_bounded));
    CHECK(std::min(contracting, expanding) <= c.M * e.n);
  }
}

TEST_CASE("classification report for the fixtures") {
  ClassifyOptions opt;
  const auto saddle = classify_family(germnf::testing::load_fixture("saddle_torsion.json"), opt);
  CHECK(saddle.omega_bound == 8);
  CHECK(saddle.nondegenerate.value == Truth::Yes);
  CHECK(saddle.projectively_hyperbolic.value == Truth::Yes);
  CHECK(saddle.infinitesimal_generators.status == Truth::No);
  CHECK(saddle.normal_form_hypothesis() == Truth::Yes);
  CHECK(saddle.poincare.has_value());
  CHECK(!saddle.any_indeterminate());

  const auto pair = classify_family(germnf::testing::load_fixture("nondivisible_pair.json"), opt);
  CHECK(pair.projectively_hyperbolic.value == Truth::No);
  CHECK(pair.weakly_nonresonant_generators.status == Truth::No);
  CHECK(pair.normal_form_hypothesis() == Truth::No);
  CHECK(pair.weakly_hyperbolic.value == Truth::Yes);
  CHECK(pair.hyperbolic.value == Truth::No);
  CHECK(!pair.poincare.has_value());

  const Json j = pair.to_json();
  for (const char* key : {"nondegenerate", "projectively_hyperbolic", "weakly_resonant", "hyperbolic", "weakly_hyperbolic"}) {
    CHECK(j.contains(key));
    CHECK(j[key].contains("verdict"));
    CHECK(j[key].contains("method"));
  }
}
