#pragma once

#include "germnf/germ/germ.hpp"

#include <string>
#include <vector>

namespace germnf {

/// "Φ₁" style label with a subscript index (1-based).
std::string subscripted(const std::string& stem, int index);

/// "Φ₁ = (2*x + y^2, 3*y)".
std::string render_germ(const Germ& g, const std::string& label);
std::vector<std::string> render_family(const Family& fam, const std::string& stem = "Φ");

/// "(1, 2)" for 0-based integers shown 1-based.
std::string one_based(const std::vector<int>& v);

}  // namespace germnf
