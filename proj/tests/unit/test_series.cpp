#include "germnf/series/series.hpp"

#include <doctest.h>

#include <random>

using namespace germnf;

namespace {

TruncatedSeries var(int n, int D, int m) { return TruncatedSeries::variable(n, D, m); }
TruncatedSeries one(int n, int D) { return TruncatedSeries::constant(n, D, 1); }
TruncatedSeries mono(int n, int D, MultiIndex a, GaussianRational c = 1) {
  return TruncatedSeries::monomial(n, D, a, c);
}

TruncatedSeries random_series(std::mt19937_64& rng, int n, int D, int lo, int terms) {
  const auto ms = monomials_in_range(n, lo, D);
  std::uniform_int_distribution<std::size_t> pick(0, ms.size() - 1);
  std::uniform_int_distribution<int> c(-5, 5);
  TruncatedSeries s(n, D);
  for (int t = 0; t < terms; ++t) s.add_term(ms[pick(rng)], GaussianRational(make_rational(c(rng), 1 + std::abs(c(rng))), c(rng) % 2));
  return s;
}

}  // namespace

TEST_CASE("multi-index helpers and graded-lex order") {
  CHECK(degree({2, 0, 1}) == 3);
  CHECK(unit_index(3, 1) == MultiIndex{0, 1, 0});
  CHECK(monomials_of_degree(2, 2) == std::vector<MultiIndex>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(monomials_in_range(2, 0, 1) == std::vector<MultiIndex>{{0, 0}, {1, 0}, {0, 1}});
  CHECK(monomial_string({2, 1}) == "x^2*y");
  CHECK(monomial_string({0, 0}) == "1");
  CHECK(monomial_string({1, 0, 0, 0, 1}) == "x1*x5");
  std::size_t total = 0;
  for (int d = 0; d <= 4; ++d) total += monomials_of_degree(3, d).size();
  CHECK(total == 35);
}

TEST_CASE("ring operations modulo the degree bound") {
  const auto x = var(2, 2, 0), y = var(2, 2, 1);
  CHECK((x + y) * (x - y) == mono(2, 2, {2, 0}) - mono(2, 2, {0, 2}));
  CHECK(mono(2, 3, {2, 0}) * mono(2, 3, {0, 2}) == TruncatedSeries(2, 3));
  const auto x3 = var(1, 3, 0);
  const auto geometric = one(1, 3) - x3 + x3 * x3 - x3 * x3 * x3;
  CHECK((one(1, 3) + x3) * geometric == one(1, 3));
  CHECK_THROWS_AS(add(var(2, 3, 0), var(2, 4, 0)), std::invalid_argument);
  CHECK_THROWS_AS(mul(var(2, 3, 0), var(3, 3, 0)), std::invalid_argument);
  TruncatedSeries z(2, 3);
  z.add_term({1, 0}, 1);
  z.add_term({1, 0}, -1);
  CHECK(z.is_zero());
  CHECK(z.size() == 0);
  CHECK_THROWS(z.add_term({-1, 2}, 1));
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + t % 3, D = 2 + t % 5;
    const auto a = random_series(rng, n, D, 0, 5), b = random_series(rng, n, D, 0, 5), c = random_series(rng, n, D, 0, 5);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
  }
}

TEST_CASE("composition") {
  const int n = 2, D = 4;
  const std::vector<TruncatedSeries> g{var(n, D, 0) * GaussianRational(-2), var(n, D, 1) * GaussianRational(make_rational(1, 2))};
  CHECK(compose(mono(n, D, {1, 1}), g) == mono(n, D, {1, 1}, -1));
  CHECK(compose(mono(n, D, {2, 2}), g) == mono(n, D, {2, 2}));
  std::mt19937_64 rng(9);
  const auto f = random_series(rng, n, D, 0, 6);
  CHECK(compose(f, {var(n, D, 0), var(n, D, 1)}) == f);
  CHECK_THROWS_AS(compose(f, {var(n, D, 0) + one(n, D), var(n, D, 1)}), std::domain_error);
}

TEST_CASE("composition is associative and truncation-coherent") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 25; ++t) {
    const int n = 1 + t % 3, D = 3 + t % 3;
    const auto f = random_series(rng, n, D, 0, 4);
    std::vector<TruncatedSeries> g, h;
    for (int m = 0; m < n; ++m) {
      g.push_back(var(n, D, m) + random_series(rng, n, D, 2, 2));
      h.push_back(var(n, D, m) * GaussianRational(m + 2) + random_series(rng, n, D, 1, 2));
    }
    std::vector<TruncatedSeries> gh;
    for (const auto& gi : g) gh.push_back(compose(gi, h));
    CHECK(compose(compose(f, g), h) == compose(f, gh));

    std::vector<TruncatedSeries> g_low;
    for (const auto& gi : g) g_low.push_back(gi.truncated(D - 1));
    CHECK(compose(f, g).truncated(D - 1) == compose(f.truncated(D - 1), g_low));
    CHECK((f * f).truncated(D - 1) == f.truncated(D - 1) * f.truncated(D - 1));
  }
}

TEST_CASE("logarithm and exponential") {
  CHECK(log1p(TruncatedSeries(1, 3)).is_zero());
  const auto x = var(1, 3, 0);
  CHECK(log1p(x) == x - mono(1, 3, {2}, make_rational(1, 2)) + mono(1, 3, {3}, make_rational(1, 3)));
  CHECK(exp0(TruncatedSeries(1, 2)) == one(1, 2));
  CHECK(exp0(var(1, 2, 0)) == one(1, 2) + var(1, 2, 0) + mono(1, 2, {2}, make_rational(1, 2)));
  CHECK_THROWS_AS(log1p(one(1, 3)), std::domain_error);
  CHECK_THROWS_AS(exp0(one(1, 3)), std::domain_error);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + t % 3, D = 2 + t % 5;
    const auto u = random_series(rng, n, D, 1, 4);
    CHECK(exp0(log1p(u)) - one(n, D) == u);
    CHECK(log1p(exp0(u) - one(n, D)) == u);
  }
}

TEST_CASE("homogeneous parts and shape changes") {
  const auto f = one(2, 3) + var(2, 3, 0) + mono(2, 3, {1, 1});
  CHECK(f.homogeneous_part(0) == one(2, 3));
  CHECK(f.homogeneous_part(2) == mono(2, 3, {1, 1}));
  CHECK(f.homogeneous_part(3).is_zero());
  CHECK_THROWS_AS(f.homogeneous_part(4), std::invalid_argument);
  CHECK(f.truncated(1) == one(2, 1) + var(2, 1, 0));
  CHECK(f.widened(5).truncated(3) == f);
  CHECK(f.order() == 0);
  CHECK(TruncatedSeries(2, 3).order() == -1);
  CHECK(f.to_string() == "1 + x + x*y");
  CHECK(mono(2, 2, {0, 1}, GaussianRational::i()).conj() == mono(2, 2, {0, 1}, -GaussianRational::i()));
}
