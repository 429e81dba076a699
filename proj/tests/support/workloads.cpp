#include "workloads.hpp"

#include "germnf/germ/family_io.hpp"

#include <algorithm>

namespace germnf::testing {

namespace {

GaussianRational gq(const std::string& s) { return GaussianRational::parse(s); }

std::vector<GaussianRational> row(std::initializer_list<const char*> items) {
  std::vector<GaussianRational> out;
  for (const char* s : items) out.push_back(gq(s));
  return out;
}

}  // namespace

std::string fixture_path(const std::string& name) { return std::string(GERMNF_FIXTURES) + "/" + name; }

Family load_fixture(const std::string& name) { return read_family_file(fixture_path(name)); }

Rational Sampler::rational(int height) {
  return make_rational(uniform(-height, height), uniform(1, height));
}

Rational Sampler::nonzero_rational(int height) {
  for (;;) {
    Rational q = rational(height);
    if (sgn(q) != 0) return q;
  }
}

GaussianRational Sampler::gaussian(int height, bool complex) {
  if (!complex) return rational(height);
  return {rational(height), rational(height)};
}

GaussianRational Sampler::eigenvalue() {
  static const std::vector<std::string> pool{
      "2",   "1/2", "-2",   "-1/2", "4",   "1/4",   "3",       "1/3",     "-3",    "6",     "1/6",
      "2/3", "3/2", "-1",   "1",    "8",   "1/8",   "0+1*i",   "0-1*i",   "0+2*i", "0-1/2*i", "1+1*i",
      "1-1*i", "1/2+1/2*i", "1/2-1/2*i", "3/5+4/5*i", "3/5-4/5*i", "5/7", "7/5", "-4/3"};
  if (uniform(0, 4) == 0) {
    return {rational(8), uniform(0, 1) == 0 ? Rational(0) : rational(8)};
  }
  for (;;) {
    const GaussianRational z = gq(pool[static_cast<std::size_t>(uniform(0, static_cast<int>(pool.size()) - 1))]);
    if (!z.is_zero()) return z;
  }
}

EigenData Sampler::eigendata(int p, int n) {
  std::vector<std::vector<GaussianRational>> rows(static_cast<std::size_t>(p));
  for (auto& r : rows) {
    for (int m = 0; m < n; ++m) {
      GaussianRational z = eigenvalue();
      while (z.is_zero()) z = eigenvalue();
      r.push_back(z);
    }
  }
  return EigenData(std::move(rows));
}

Germ Sampler::tangent_to_identity(int n, int D, int terms_per_component, bool complex) {
  std::vector<TruncatedSeries> comps;
  const auto monomials = monomials_in_range(n, 2, D);
  for (int m = 0; m < n; ++m) {
    TruncatedSeries s = TruncatedSeries::variable(n, D, m);
    for (int t = 0; t < terms_per_component; ++t) {
      const auto& a = monomials[static_cast<std::size_t>(uniform(0, static_cast<int>(monomials.size()) - 1))];
      s.add_term(a, gaussian(3, complex && uniform(0, 1) == 1));
    }
    comps.push_back(std::move(s));
  }
  return Germ(std::move(comps));
}

Germ Sampler::division_passing(int n, int D) {
  std::vector<TruncatedSeries> comps;
  const auto monomials = monomials_in_range(n, 1, D - 1);
  for (int m = 0; m < n; ++m) {
    GaussianRational mu = gaussian(5, uniform(0, 2) == 0);
    while (mu.is_zero()) mu = gaussian(5, false);
    TruncatedSeries s = TruncatedSeries::monomial(n, D, unit_index(n, m), mu);
    const int terms = uniform(0, 4);
    for (int t = 0; t < terms; ++t) {
      const auto& a = monomials[static_cast<std::size_t>(uniform(0, static_cast<int>(monomials.size()) - 1))];
      s.add_term(a + unit_index(n, m), mu * gaussian(4, uniform(0, 3) == 0));
    }
    comps.push_back(std::move(s));
  }
  return Germ(std::move(comps));
}

std::vector<EigenCase> hypothesis_pool() {
  return {
      {"(-2, 1/2)", EigenData({row({"-2", "1/2"})})},
      {"(2, 1/2)", EigenData({row({"2", "1/2"})})},
      {"(4, 1/2)", EigenData({row({"4", "1/2"})})},
      {"(2i, -i/2)", EigenData({row({"0+2*i", "0-1/2*i"})})},
      {"(1+i, 1/2-i/2)", EigenData({row({"1+1*i", "1/2-1/2*i"})})},
      {"(3/5+4i/5, 3/5-4i/5)", EigenData({row({"3/5+4/5*i", "3/5-4/5*i"})})},
      {"(2, 3, 1/6)", EigenData({row({"2", "3", "1/6"})})},
      {"(2, 1/2, -1)", EigenData({row({"2", "1/2", "-1"})})},
      {"(2, 2, 1/4)", EigenData({row({"2", "2", "1/4"})})},
      {"[(2, 3, 1/6), (3, 2, 1/6)]", EigenData({row({"2", "3", "1/6"}), row({"3", "2", "1/6"})})},
      {"[(2, 1/2, 3), (-1, -1, 5)]", EigenData({row({"2", "1/2", "3"}), row({"-1", "-1", "5"})})},
  };
}

std::vector<RealCase> real_pool() {
  return {
      {"rotation (1 +- i)", EigenData({row({"1+1*i", "1-1*i"})}), {1, 0}},
      {"unit rotation (3/5 +- 4i/5)", EigenData({row({"3/5+4/5*i", "3/5-4/5*i"})}), {1, 0}},
      {"rotation (3/5 +- 4i/5), tail 2", EigenData({row({"3/5+4/5*i", "3/5-4/5*i", "2"})}), {1, 0, 2}},
      {"scaled rotation (6/5 +- 8i/5), tail 1/4", EigenData({row({"6/5+8/5*i", "6/5-8/5*i", "1/4"})}), {1, 0, 2}},
      {"pair [(6/5 +- 8i/5, 1/4), (+-i, 1)]",
       EigenData({row({"6/5+8/5*i", "6/5-8/5*i", "1/4"}), row({"0+1*i", "0-1*i", "1"})}),
       {1, 0, 2}},
  };
}

std::vector<MultiIndex> brute_force_box(int n, int lo, int hi) {
  std::vector<MultiIndex> out;
  MultiIndex k(static_cast<std::size_t>(n), 0);
  // Odometer over [0, hi]^n, filtered by total degree.
  for (;;) {
    const int d = degree(k);
    if (d >= lo && d <= hi) out.push_back(k);
    std::size_t j = 0;
    while (j < k.size() && k[j] == hi) k[j++] = 0;
    if (j == k.size()) break;
    ++k[j];
  }
  std::sort(out.begin(), out.end(), GradedLexLess());
  return out;
}

}  // namespace germnf::testing

#include "germnf/normalform/integrable.hpp"
#include "germnf/normalform/realcase.hpp"

namespace germnf::testing {

RoundTripCase make_round_trip_case(int index) {
  const auto pool = hypothesis_pool();
  const EigenCase& ec = pool[static_cast<std::size_t>(index) % pool.size()];
  Sampler s(0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(index));
  const int n = ec.eigen.n;
  const int D = n == 2 ? s.uniform(3, 6) : s.uniform(3, 5) + (index % 10 == 0 ? 1 : 0);
  RelationLattice lat = relation_lattice(ec.eigen);
  Family nf = generate_integrable_nf(ec.eigen, lat, D, static_cast<std::uint64_t>(index) + 1);
  bool complex = false;
  for (const auto& r : ec.eigen.mu) {
    for (const auto& z : r) complex = complex || !z.is_real();
  }
  Germ chi = s.tangent_to_identity(n, D, s.uniform(2, 5), complex);
  Family input = conjugate(nf, chi);
  return {ec.name + ", D=" + std::to_string(D), ec.eigen, std::move(lat), std::move(nf), std::move(chi),
          std::move(input)};
}

RealRoundTripCase make_real_case(int index) {
  const auto pool = real_pool();
  const RealCase& rc = pool[static_cast<std::size_t>(index) % pool.size()];
  Sampler s(0x51ed270b27a3c1ULL + static_cast<std::uint64_t>(index));
  const int n = rc.eigen.n;
  const int D = n == 2 ? s.uniform(3, 5) : s.uniform(3, 4);
  const RelationLattice lat = relation_lattice(rc.eigen);
  const Family nf = generate_integrable_nf(rc.eigen, lat, D, static_cast<std::uint64_t>(index) + 7, rc.sigma);
  const Family real_nf = realify_normal_form(nf, rc.sigma);
  const Germ chi = s.tangent_to_identity(n, D, s.uniform(1, 3), false);
  return {rc.name + ", D=" + std::to_string(D), rc.sigma, conjugate(real_nf, chi)};
}

}  // namespace germnf::testing
