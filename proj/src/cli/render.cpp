#include "germnf/cli/render.hpp"

namespace germnf {

std::string subscripted(const std::string& stem, int index) {
  static const char* const digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string out = stem;
  for (char c : std::to_string(index)) out += digits[c - '0'];
  return out;
}

std::string render_germ(const Germ& g, const std::string& label) {
  std::string out = label + " = (";
  for (int m = 0; m < g.n(); ++m) {
    if (m != 0) out += ", ";
    out += g.component(m).to_string();
  }
  return out + ")";
}

std::vector<std::string> render_family(const Family& fam, const std::string& stem) {
  std::vector<std::string> out;
  for (int i = 0; i < fam.p(); ++i) out.push_back(render_germ(fam.germ(i), subscripted(stem, i + 1)));
  return out;
}

std::string one_based(const std::vector<int>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k != 0) out += ", ";
    out += std::to_string(v[k] + 1);
  }
  return out + ")";
}

}  // namespace germnf
