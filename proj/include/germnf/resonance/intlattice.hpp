#pragma once

#include "germnf/exactnum/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace germnf {

using IntVector = std::vector<Integer>;
/// Row-major integer matrix as a list of rows.
using IntMatrix = std::vector<IntVector>;

/// Upper (row-style) Hermite normal form of the lattice spanned by the rows:
/// zero rows dropped, pivots strictly increasing and positive, entries above
/// each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(IntMatrix rows);

/// Z-basis of {k in Z^c : M k = 0} for an r x c matrix M (given with c
/// columns so that r may be zero). Returned in Hermite normal form.
IntMatrix integer_kernel(const IntMatrix& M, std::size_t cols);

/// Some x in Z^c with A x = b, or nullopt when no integer solution exists.
std::optional<IntVector> solve_integer(const IntMatrix& A, std::size_t cols, const IntVector& b);

/// Rank over Q.
std::size_t rational_rank(const IntMatrix& rows, std::size_t cols);

/// All points v = sum c_j basis_j with lo <= v <= hi coordinatewise and
/// sum_lo <= sum(v) <= sum_hi. The basis must be in Hermite normal form.
/// Output is in ascending lexicographic order of the coefficient vectors.
std::vector<IntVector> enumerate_box(const IntMatrix& hnf_basis, const IntVector& lo, const IntVector& hi,
                                     const Integer& sum_lo, const Integer& sum_hi);

}  // namespace germnf
