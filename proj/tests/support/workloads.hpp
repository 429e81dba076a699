#pragma once

#include "germnf/germ/germ.hpp"
#include "germnf/resonance/resonance.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace germnf::testing {

std::string fixture_path(const std::string& name);
Family load_fixture(const std::string& name);

/// Small deterministic source of test data.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Rational rational(int height);
  /// Nonzero rational with |num|, den <= height.
  Rational nonzero_rational(int height);
  GaussianRational gaussian(int height, bool complex);

  /// Eigenvalue pool entry with height <= 8 and a bias toward relations.
  GaussianRational eigenvalue();
  EigenData eigendata(int p, int n);

  /// id + a few random terms of degree 2..D.
  Germ tangent_to_identity(int n, int D, int terms_per_component, bool complex);
  /// mu_m x_m (1 + random terms), divisible by construction.
  Germ division_passing(int n, int D);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Eigendata for which the family is projectively hyperbolic or carries
/// weakly non-resonant generators.
struct EigenCase {
  std::string name;
  EigenData eigen;
};
std::vector<EigenCase> hypothesis_pool();

/// Complex eigendata of real families: the pairing swaps each block.
struct RealCase {
  std::string name;
  EigenData eigen;
  std::vector<int> sigma;
};
std::vector<RealCase> real_pool();

/// All k in N^n with lo <= |k| <= hi, graded-lex.
std::vector<MultiIndex> brute_force_box(int n, int lo, int hi);

}  // namespace germnf::testing

namespace germnf::testing {

/// One seeded instance of the round-trip workload: an integrable normal form
/// and its conjugate by a random tangent-to-identity germ chi.
struct RoundTripCase {
  std::string name;
  EigenData eigen;
  RelationLattice lattice;
  Family normal_form;
  Germ chi;
  Family input;
};
RoundTripCase make_round_trip_case(int index);

/// A real family with rotation-scaling blocks, built by realifying a
/// rho-equivariant normal form and conjugating it by a real germ.
struct RealRoundTripCase {
  std::string name;
  std::vector<int> sigma;
  Family input;
};
RealRoundTripCase make_real_case(int index);

}  // namespace germnf::testing
