#pragma once

#include "germnf/exactnum/matrix.hpp"

#include <optional>
#include <vector>

namespace germnf {

/// A point x >= 0 with A x = b, found by an exact phase-1 simplex with
/// Bland's rule, or nullopt when the polyhedron is empty.
std::optional<std::vector<Rational>> find_feasible_point(const RationalMatrix& A, const std::vector<Rational>& b);

/// A y, exact.
std::vector<Rational> multiply(const RationalMatrix& A, const std::vector<Rational>& y);

}  // namespace germnf
