#include "germnf/exactnum/certified.hpp"

#include <sstream>
#include <stdexcept>

namespace germnf {

void ArctanCombination::add_atan(const Rational& coeff, const Rational& r) {
  if (sgn(coeff) == 0 || sgn(r) == 0) return;
  const Rational key = abs(r);
  const Rational c = sgn(r) > 0 ? coeff : Rational(-coeff);
  if (key == 1) {
    rational_part_ += c / 4;  // atan(1) = pi/4
    return;
  }
  Rational& slot = atan_[key];
  slot += c;
  if (sgn(slot) == 0) atan_.erase(key);
}

ArctanCombination& ArctanCombination::operator+=(const ArctanCombination& o) {
  rational_part_ += o.rational_part_;
  for (const auto& [r, c] : o.atan_) add_atan(c, r);
  return *this;
}

ArctanCombination ArctanCombination::scaled(const Rational& s) const {
  ArctanCombination out;
  if (sgn(s) == 0) return out;
  out.rational_part_ = rational_part_ * s;
  for (const auto& [r, c] : atan_) out.atan_[r] = c * s;
  return out;
}

Interval ArctanCombination::evaluate(mpfr_prec_t prec) const {
  Interval out = Interval::from_rational(rational_part_, prec);
  if (atan_.empty()) return out;
  Interval sum(prec);
  for (const auto& [r, c] : atan_) sum += Interval::atan_of(r, prec) * c;
  return out + sum / Interval::pi(prec);
}

std::string ArctanCombination::to_string() const {
  std::ostringstream os;
  os << rational_part_.get_str();
  for (const auto& [r, c] : atan_) os << " + (" << c.get_str() << ")*atan(" << r.get_str() << ")/pi";
  return os.str();
}

ArctanCombination argument_over_pi(const GaussianRational& z) {
  if (z.is_zero()) throw std::domain_error("argument of zero");
  const int sr = sgn(z.re());
  const int si = sgn(z.im());
  ArctanCombination out;
  if (si == 0) {
    if (sr < 0) out.add_rational(1);
    return out;
  }
  if (sr == 0) {
    out.add_rational(Rational(si, 2));
    return out;
  }
  const Rational ratio = z.im() / z.re();
  out.add_atan(1, ratio);
  if (sr < 0) out.add_rational(si > 0 ? 1 : -1);
  return out;
}

ArctanCombination argument_turns(const GaussianRational& z) { return argument_over_pi(z).scaled(Rational(1, 2)); }

std::optional<Integer> certified_round_at(const ArctanCombination& x, mpfr_prec_t prec) {
  if (x.is_exact()) {
    const Rational& q = x.rational_part();
    if (q.get_den() != 1) throw std::domain_error("value " + q.get_str() + " is not an integer");
    return q.get_num();
  }
  const Interval v = x.evaluate(prec);
  const Integer k = v.nearest_integer();
  const Rational quarter(1, 4);
  const Rational kq(k);
  if (v.strictly_inside(kq - quarter, kq + quarter)) return k;
  return std::nullopt;
}

std::optional<Integer> certified_round_to_integer(const ArctanCombination& x, const PrecisionPolicy& policy) {
  for (const mpfr_prec_t prec : policy.levels()) {
    if (auto k = certified_round_at(x, prec)) return k;
  }
  return std::nullopt;
}

}  // namespace germnf
