#pragma once

#include "germnf/germ/germ.hpp"

#include <stdexcept>
#include <vector>

namespace germnf {

class RealFormError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ComplexifiedFamily {
  Family family;
  GaussianMatrix P;
  /// Involution on coordinates: each rotation block (j, j+1) is swapped.
  std::vector<int> sigma;
};

/// Coordinate change z -> x = P z: P = [[1/2, 1/2], [-i/2, i/2]] on each pair
/// {j, sigma(j)}, identity on fixed coordinates.
GaussianMatrix real_coordinates(const std::vector<int>& sigma);

/// P^{-1}∘f∘P for every germ, after recognizing the rotation-scaling blocks
/// of the linear parts.
ComplexifiedFamily complexify_real_family(const Family& fam);

/// P∘f∘P^{-1} for a rho-equivariant complex family, checked to be real.
Family realify_normal_form(const Family& nf, const std::vector<int>& sigma);

/// P∘psi∘P^{-1}, checked to be real.
Germ realify_germ(const Germ& psi, const std::vector<int>& sigma);

}  // namespace germnf
