#include "germnf/series/series.hpp"

#include <sstream>
#include <stdexcept>

namespace germnf {

TruncatedSeries::TruncatedSeries(int n, int D) : n_(n), D_(D) {
  if (n <= 0) throw std::invalid_argument("series dimension must be positive");
  if (D < 0) throw std::invalid_argument("series truncation degree must be non-negative");
}

TruncatedSeries TruncatedSeries::constant(int n, int D, const GaussianRational& c) {
  TruncatedSeries s(n, D);
  s.add_term(MultiIndex(static_cast<std::size_t>(n), 0), c);
  return s;
}

TruncatedSeries TruncatedSeries::variable(int n, int D, int m) {
  TruncatedSeries s(n, D);
  s.add_term(unit_index(n, m), GaussianRational(1));
  return s;
}

TruncatedSeries TruncatedSeries::monomial(int n, int D, const MultiIndex& a, const GaussianRational& c) {
  TruncatedSeries s(n, D);
  s.add_term(a, c);
  return s;
}

GaussianRational TruncatedSeries::coeff(const MultiIndex& a) const {
  const auto it = terms_.find(a);
  return it == terms_.end() ? GaussianRational() : it->second;
}

GaussianRational TruncatedSeries::constant_term() const {
  return coeff(MultiIndex(static_cast<std::size_t>(n_), 0));
}

int TruncatedSeries::order() const { return terms_.empty() ? -1 : degree(terms_.begin()->first); }

void TruncatedSeries::add_term(const MultiIndex& a, const GaussianRational& c) {
  if (static_cast<int>(a.size()) != n_) throw std::invalid_argument("monomial dimension does not match series");
  if (!is_nonnegative(a)) throw std::invalid_argument("negative exponent " + index_string(a));
  if (degree(a) > D_ || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void TruncatedSeries::set_coeff(const MultiIndex& a, const GaussianRational& c) {
  if (static_cast<int>(a.size()) != n_) throw std::invalid_argument("monomial dimension does not match series");
  if (degree(a) > D_) return;
  if (c.is_zero()) {
    terms_.erase(a);
  } else {
    terms_[a] = c;
  }
}

void require_same_shape(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("series dimension mismatch: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
  }
  if (a.degree_bound() != b.degree_bound()) {
    throw std::invalid_argument("series truncation degree mismatch: " + std::to_string(a.degree_bound()) + " vs " +
                                std::to_string(b.degree_bound()));
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  require_same_shape(*this, o);
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  require_same_shape(*this, o);
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [a, c] : terms_) c *= s;
  return *this;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out = *this;
  for (auto& [a, c] : out.terms_) c = -c;
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_shape(a, b);
  TruncatedSeries out(a.n_, a.D_);
  if (a.is_zero() || b.is_zero()) return out;
  const int ob = b.order();
  for (const auto& [ia, ca] : a.terms_) {
    const int da = degree(ia);
    if (da + ob > a.D_) break;
    for (const auto& [ib, cb] : b.terms_) {
      if (da + degree(ib) > a.D_) break;
      out.add_term(ia + ib, ca * cb);
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::truncated(int D2) const {
  if (D2 > D_) throw std::invalid_argument("truncated: target degree exceeds the series degree");
  TruncatedSeries out(n_, D2);
  for (const auto& [a, c] : terms_) {
    if (degree(a) > D2) break;
    out.terms_.emplace(a, c);
  }
  return out;
}

TruncatedSeries TruncatedSeries::widened(int D2) const {
  if (D2 < D_) throw std::invalid_argument("widened: target degree is below the series degree");
  TruncatedSeries out(n_, D2);
  out.terms_ = terms_;
  return out;
}

TruncatedSeries TruncatedSeries::homogeneous_part(int d) const {
  if (d < 0 || d > D_) throw std::invalid_argument("homogeneous_part: degree " + std::to_string(d) + " out of range");
  return degree_range(d, d);
}

TruncatedSeries TruncatedSeries::degree_range(int lo, int hi) const {
  TruncatedSeries out(n_, D_);
  for (const auto& [a, c] : terms_) {
    const int d = degree(a);
    if (d > hi) break;
    if (d >= lo) out.terms_.emplace(a, c);
  }
  return out;
}

bool TruncatedSeries::is_real() const {
  for (const auto& [a, c] : terms_) {
    if (!c.is_real()) return false;
  }
  return true;
}

TruncatedSeries TruncatedSeries::conj() const {
  TruncatedSeries out = *this;
  for (auto& [a, c] : out.terms_) c = c.conj();
  return out;
}

std::string TruncatedSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    const bool unit_mono = degree(a) == 0;
    std::string coeff;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      const Rational mag = abs(c.re());
      coeff = (mag == 1 && !unit_mono) ? "" : mag.get_str();
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (unit_mono) {
      os << coeff;
    } else {
      if (!coeff.empty()) os << coeff << '*';
      os << monomial_string(a);
    }
  }
  return os.str();
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }
TruncatedSeries scale(const TruncatedSeries& a, const GaussianRational& s) { return a * s; }

TruncatedSeries pow(const TruncatedSeries& s, int k) {
  if (k < 0) throw std::invalid_argument("series power must be non-negative");
  TruncatedSeries result = TruncatedSeries::constant(s.n(), s.degree_bound(), GaussianRational(1));
  TruncatedSeries base = s;
  while (k != 0) {
    if ((k & 1) != 0) result = result * base;
    k >>= 1;
    if (k != 0) base = base * base;
  }
  return result;
}

Substitution::Substitution(const std::vector<TruncatedSeries>& g) : g_(g) {
  if (g_.empty()) throw std::invalid_argument("substitution needs at least one component");
  n_ = g_.front().n();
  D_ = g_.front().degree_bound();
  for (const auto& gj : g_) {
    require_same_shape(gj, g_.front());
    if (!gj.constant_term().is_zero()) {
      throw std::domain_error("composition requires components with zero constant term");
    }
  }
  powers_.resize(g_.size());
}

const TruncatedSeries& Substitution::component_power(int j, int k) {
  auto& list = powers_[static_cast<std::size_t>(j)];
  if (list.empty()) list.push_back(TruncatedSeries::constant(n_, D_, GaussianRational(1)));
  while (static_cast<int>(list.size()) <= k) list.push_back(list.back() * g_[static_cast<std::size_t>(j)]);
  return list[static_cast<std::size_t>(k)];
}

const TruncatedSeries& Substitution::power(const MultiIndex& a) {
  const auto it = cache_.find(a);
  if (it != cache_.end()) return it->second;
  int last = -1;
  int nonzero = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] != 0) {
      last = static_cast<int>(j);
      ++nonzero;
    }
  }
  TruncatedSeries value(n_, D_);
  if (last < 0) {
    value = TruncatedSeries::constant(n_, D_, GaussianRational(1));
  } else if (nonzero == 1) {
    value = component_power(last, a[static_cast<std::size_t>(last)]);
  } else {
    MultiIndex rest = a;
    const int k = rest[static_cast<std::size_t>(last)];
    rest[static_cast<std::size_t>(last)] = 0;
    value = power(rest) * component_power(last, k);
  }
  return cache_.emplace(a, std::move(value)).first->second;
}

TruncatedSeries Substitution::apply(const TruncatedSeries& f) {
  if (static_cast<std::size_t>(f.n()) != g_.size()) {
    throw std::invalid_argument("composition: f has " + std::to_string(f.n()) + " variables but g has " +
                                std::to_string(g_.size()) + " components");
  }
  if (f.degree_bound() != D_) throw std::invalid_argument("composition: truncation degree mismatch");
  TruncatedSeries out(n_, D_);
  for (const auto& [a, c] : f.terms()) {
    for (const auto& [b, d] : power(a).terms()) out.add_term(b, c * d);
  }
  return out;
}

TruncatedSeries compose(const TruncatedSeries& f, const std::vector<TruncatedSeries>& g) {
  Substitution sub(g);
  return sub.apply(f);
}

TruncatedSeries log1p(const TruncatedSeries& u) {
  if (!u.constant_term().is_zero()) throw std::domain_error("log1p requires zero constant term");
  TruncatedSeries out(u.n(), u.degree_bound());
  if (u.is_zero()) return out;
  TruncatedSeries term = u;
  for (int t = 1; !term.is_zero(); ++t) {
    const Rational c((t % 2 == 1) ? 1 : -1, t);
    out += term * GaussianRational(c);
    term = term * u;
  }
  return out;
}

TruncatedSeries exp0(const TruncatedSeries& w) {
  if (!w.constant_term().is_zero()) throw std::domain_error("exp0 requires zero constant term");
  TruncatedSeries out = TruncatedSeries::constant(w.n(), w.degree_bound(), GaussianRational(1));
  TruncatedSeries term = out;
  for (int t = 1;; ++t) {
    term = term * w;
    if (term.is_zero()) break;
    term *= GaussianRational(Rational(1, t));
    out += term;
  }
  return out;
}

}  // namespace germnf
