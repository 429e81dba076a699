#include "germnf/exactnum/interval.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace germnf {

Interval::Interval(mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) {
  mpfr_init2(lo_, o.precision());
  mpfr_init2(hi_, o.precision());
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept {
  mpfr_init2(lo_, o.precision());
  mpfr_init2(hi_, o.precision());
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this == &o) return *this;
  mpfr_set_prec(lo_, o.precision());
  mpfr_set_prec(hi_, o.precision());
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  if (this != &o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::from_rational(const Rational& q, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_set_q(out.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(out.hi_, q.get_mpq_t(), MPFR_RNDU);
  return out;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_const_pi(out.lo_, MPFR_RNDD);
  mpfr_const_pi(out.hi_, MPFR_RNDU);
  return out;
}

Interval Interval::log_of(const Integer& n, mpfr_prec_t prec) {
  if (n <= 0) throw std::domain_error("log of a non-positive integer");
  Interval out(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_set_z(t, n.get_mpz_t(), MPFR_RNDD);
  mpfr_log(out.lo_, t, MPFR_RNDD);
  mpfr_set_z(t, n.get_mpz_t(), MPFR_RNDU);
  mpfr_log(out.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return out;
}

Interval Interval::atan_of(const Rational& q, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDD);
  mpfr_atan(out.lo_, t, MPFR_RNDD);
  mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDU);
  mpfr_atan(out.hi_, t, MPFR_RNDU);
  mpfr_clear(t);
  return out;
}

Interval& Interval::operator+=(const Interval& o) {
  mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
  return *this;
}

Interval& Interval::operator-=(const Interval& o) {
  // [a, b] - [c, d] = [a - d, b - c]
  mpfr_t nlo;
  mpfr_init2(nlo, precision());
  mpfr_sub(nlo, lo_, o.hi_, MPFR_RNDD);
  mpfr_sub(hi_, hi_, o.lo_, MPFR_RNDU);
  mpfr_swap(lo_, nlo);
  mpfr_clear(nlo);
  return *this;
}

Interval Interval::operator-() const {
  Interval out(precision());
  mpfr_neg(out.lo_, hi_, MPFR_RNDD);
  mpfr_neg(out.hi_, lo_, MPFR_RNDU);
  return out;
}

Interval& Interval::operator*=(const Interval& o) {
  const mpfr_prec_t prec = precision();
  mpfr_t down[4];
  mpfr_t up[4];
  const __mpfr_struct* a[2] = {lo_, hi_};
  const __mpfr_struct* b[2] = {o.lo_, o.hi_};
  for (int k = 0; k < 4; ++k) {
    mpfr_init2(down[k], prec);
    mpfr_init2(up[k], prec);
    mpfr_mul(down[k], a[k / 2], b[k % 2], MPFR_RNDD);
    mpfr_mul(up[k], a[k / 2], b[k % 2], MPFR_RNDU);
  }
  mpfr_set(lo_, down[0], MPFR_RNDD);
  mpfr_set(hi_, up[0], MPFR_RNDU);
  for (int k = 1; k < 4; ++k) {
    mpfr_min(lo_, lo_, down[k], MPFR_RNDD);
    mpfr_max(hi_, hi_, up[k], MPFR_RNDU);
  }
  for (int k = 0; k < 4; ++k) {
    mpfr_clear(down[k]);
    mpfr_clear(up[k]);
  }
  return *this;
}

Interval& Interval::operator/=(const Interval& o) {
  if (o.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
  Interval inv(precision());
  mpfr_ui_div(inv.lo_, 1, o.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, o.lo_, MPFR_RNDU);
  return *this *= inv;
}

Interval& Interval::operator*=(const Rational& q) { return *this *= from_rational(q, precision()); }

bool Interval::strictly_inside(const Rational& q, const Rational& r) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) > 0 && mpfr_cmp_q(hi_, r.get_mpq_t()) < 0;
}

Integer Interval::nearest_integer() const {
  mpfr_t mid;
  mpfr_init2(mid, precision() + 1);
  mpfr_add(mid, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
  Integer out;
  mpfr_get_z(out.get_mpz_t(), mid, MPFR_RNDN);
  mpfr_clear(mid);
  return out;
}

double Interval::width() const {
  mpfr_t w;
  mpfr_init2(w, precision());
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  const double out = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return out;
}

std::string Interval::to_string() const {
  std::ostringstream os;
  os << '[' << mpfr_get_d(lo_, MPFR_RNDD) << ", " << mpfr_get_d(hi_, MPFR_RNDU) << ']';
  return os.str();
}

mpfr_prec_t PrecisionPolicy::env_cap() {
  constexpr mpfr_prec_t kDefaultCap = 1024;
  const char* env = std::getenv("GERMNF_PRECISION_BITS");
  if (env == nullptr || *env == '\0') return kDefaultCap;
  char* end = nullptr;
  const long bits = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || bits < 2) {
    throw std::invalid_argument("GERMNF_PRECISION_BITS must be an integer >= 2, got '" + std::string(env) + "'");
  }
  return std::min<mpfr_prec_t>(kDefaultCap, bits);
}

PrecisionPolicy::PrecisionPolicy() : PrecisionPolicy(env_cap()) {}

PrecisionPolicy::PrecisionPolicy(mpfr_prec_t cap, mpfr_prec_t start) {
  if (cap < 2) throw std::invalid_argument("precision cap must be at least 2 bits");
  for (mpfr_prec_t p = std::min(start, cap); p < cap; p *= 2) levels_.push_back(p);
  levels_.push_back(cap);
}

}  // namespace germnf
