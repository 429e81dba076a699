#pragma once

#include <string>
#include <vector>

namespace germnf {

/// Exponent vector (l_1, ..., l_n) of the monomial x_1^l_1 ... x_n^l_n.
/// Entries are non-negative for monomials; lattice vectors reuse the type
/// and may carry negative entries.
using MultiIndex = std::vector<int>;

int degree(const MultiIndex& a);
bool is_nonnegative(const MultiIndex& a);

/// e_m (0-based m) in dimension n.
MultiIndex unit_index(int n, int m);

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);

/// Graded-lex order: lower degree first, then lexicographically larger
/// exponent vectors first. For two variables: 1, x, y, x^2, xy, y^2, ...
struct GradedLexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// All exponent vectors of degree exactly d, in graded-lex order.
std::vector<MultiIndex> monomials_of_degree(int n, int d);
/// All exponent vectors with lo <= degree <= hi, in graded-lex order.
std::vector<MultiIndex> monomials_in_range(int n, int lo, int hi);

/// Default variable names: x, y, z, w for n <= 4, else x1, x2, ...
std::string variable_name(int n, int m);
/// "x^2*y", "1" for the zero index.
std::string monomial_string(const MultiIndex& a);
/// "(2, 2)".
std::string index_string(const MultiIndex& a);

}  // namespace germnf
