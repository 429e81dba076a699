#include "germnf/classify/log_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace germnf {

LogPolynomial LogPolynomial::constant(const Rational& c) {
  LogPolynomial out;
  out.add({}, c);
  return out;
}

LogPolynomial LogPolynomial::from_log_modulus(const LogModulusVector& v) {
  LogPolynomial out;
  for (const auto& [p, c] : v.coords) out.add({p}, c);
  return out;
}

void LogPolynomial::add(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  Rational& slot = terms_[m];
  slot += c;
  if (sgn(slot) == 0) terms_.erase(m);
}

LogPolynomial& LogPolynomial::operator+=(const LogPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

LogPolynomial& LogPolynomial::operator-=(const LogPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

LogPolynomial operator*(const LogPolynomial& a, const LogPolynomial& b) {
  LogPolynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      LogPolynomial::Monomial m;
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      out.add(m, ca * cb);
    }
  }
  return out;
}

Interval LogPolynomial::evaluate(mpfr_prec_t prec) const {
  Interval sum(prec);
  std::map<Integer, Interval> logs;
  for (const auto& [m, c] : terms_) {
    Interval term = Interval::from_rational(c, prec);
    for (const auto& p : m) {
      auto it = logs.find(p);
      if (it == logs.end()) it = logs.emplace(p, Interval::log_of(p, prec)).first;
      term *= it->second;
    }
    sum += term;
  }
  return sum;
}

std::string LogPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (const auto& p : m) os << "*ln" << p.get_str();
  }
  return os.str();
}

LogPolynomial determinant(const std::vector<std::vector<LogPolynomial>>& M) {
  const std::size_t n = M.size();
  if (n == 0) return LogPolynomial::constant(1);
  if (n == 1) return M[0][0];
  LogPolynomial det;
  for (std::size_t c = 0; c < n; ++c) {
    if (M[0][c].is_symbolically_zero()) continue;
    std::vector<std::vector<LogPolynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<LogPolynomial> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(M[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const LogPolynomial term = M[0][c] * determinant(minor);
    if (c % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) cur[static_cast<std::size_t>(j)] = j;
  while (true) {
    out.push_back(cur);
    int j = k - 1;
    while (j >= 0 && cur[static_cast<std::size_t>(j)] == n - k + j) --j;
    if (j < 0) break;
    ++cur[static_cast<std::size_t>(j)];
    for (int t = j + 1; t < k; ++t) cur[static_cast<std::size_t>(t)] = cur[static_cast<std::size_t>(t - 1)] + 1;
  }
  return out;
}

MinorSearch full_row_rank(const std::vector<std::vector<LogModulusVector>>& rows, const PrecisionPolicy& policy) {
  MinorSearch out;
  const int r = static_cast<int>(rows.size());
  if (r == 0) {
    out.status = RankCertificate::Certified;
    return out;
  }
  const int n = static_cast<int>(rows.front().size());
  std::vector<LogPolynomial> nonzero;
  std::vector<std::vector<int>> nonzero_cols;
  for (const auto& cols : subsets(n, r)) {
    std::vector<std::vector<LogPolynomial>> M;
    for (const auto& row : rows) {
      std::vector<LogPolynomial> sel;
      for (int c : cols) sel.push_back(LogPolynomial::from_log_modulus(row[static_cast<std::size_t>(c)]));
      M.push_back(std::move(sel));
    }
    ++out.minors_checked;
    LogPolynomial det = determinant(M);
    if (!det.is_symbolically_zero()) {
      nonzero.push_back(std::move(det));
      nonzero_cols.push_back(cols);
    }
  }
  if (nonzero.empty()) {
    out.status = RankCertificate::SymbolicallyDeficient;
    return out;
  }
  for (const mpfr_prec_t prec : policy.levels()) {
    for (std::size_t k = 0; k < nonzero.size(); ++k) {
      if (nonzero[k].evaluate(prec).certainly_nonzero()) {
        out.status = RankCertificate::Certified;
        out.columns = nonzero_cols[k];
        out.precision = prec;
        return out;
      }
    }
  }
  return out;
}

}  // namespace germnf
