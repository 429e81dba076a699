#include "germnf/series/multi_index.hpp"

#include <numeric>
#include <stdexcept>

namespace germnf {

int degree(const MultiIndex& a) { return std::accumulate(a.begin(), a.end(), 0); }

bool is_nonnegative(const MultiIndex& a) {
  for (int v : a) {
    if (v < 0) return false;
  }
  return true;
}

MultiIndex unit_index(int n, int m) {
  if (m < 0 || m >= n) throw std::out_of_range("unit_index: component out of range");
  MultiIndex e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(m)] = 1;
  return e;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) throw std::invalid_argument("multi-index dimension mismatch");
  MultiIndex out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) throw std::invalid_argument("multi-index dimension mismatch");
  MultiIndex out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

bool GradedLexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  const int da = degree(a);
  const int db = degree(b);
  if (da != db) return da < db;
  return a > b;
}

namespace {

void fill(int n, int pos, int remaining, MultiIndex& cur, std::vector<MultiIndex>& out) {
  if (pos == n - 1) {
    cur[static_cast<std::size_t>(pos)] = remaining;
    out.push_back(cur);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur[static_cast<std::size_t>(pos)] = v;
    fill(n, pos + 1, remaining - v, cur, out);
  }
}

}  // namespace

std::vector<MultiIndex> monomials_of_degree(int n, int d) {
  if (n <= 0 || d < 0) throw std::invalid_argument("monomials_of_degree: need n > 0 and d >= 0");
  std::vector<MultiIndex> out;
  MultiIndex cur(static_cast<std::size_t>(n), 0);
  fill(n, 0, d, cur, out);
  return out;
}

std::vector<MultiIndex> monomials_in_range(int n, int lo, int hi) {
  std::vector<MultiIndex> out;
  for (int d = lo; d <= hi; ++d) {
    auto part = monomials_of_degree(n, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::string variable_name(int n, int m) {
  static const char* kShort[] = {"x", "y", "z", "w"};
  if (n <= 4) return kShort[m];
  return "x" + std::to_string(m + 1);
}

std::string monomial_string(const MultiIndex& a) {
  const int n = static_cast<int>(a.size());
  std::string out;
  for (int m = 0; m < n; ++m) {
    const int e = a[static_cast<std::size_t>(m)];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += variable_name(n, m);
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string index_string(const MultiIndex& a) {
  std::string out = "(";
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k != 0) out += ", ";
    out += std::to_string(a[k]);
  }
  return out + ")";
}

}  // namespace germnf
