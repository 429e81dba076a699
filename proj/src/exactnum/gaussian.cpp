#include "germnf/exactnum/gaussian.hpp"

#include <ostream>
#include <stdexcept>

namespace germnf {

Rational GaussianRational::norm() const {
  Rational n = re_ * re_ + im_ * im_;
  return n;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero Gaussian rational");
  const Rational n = norm();
  Rational r = re_ / n;
  Rational s = -im_ / n;
  return {std::move(r), std::move(s)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational s = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(s);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero Gaussian rational");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return germnf::to_string(re_);
  std::string out = germnf::to_string(re_);
  if (sgn(im_) > 0) out += '+';
  out += germnf::to_string(im_);
  out += "*i";
  return out;
}

namespace {

// Splits "a+b*i" at the sign that starts the imaginary part. The sign search
// skips position 0 so a leading "-" belongs to the real part.
Rational parse_imaginary(std::string_view t, std::string_view whole) {
  // t ends in "i"; forms: "i", "-i", "+i", "c*i", "c/d*i".
  std::string_view coeff = t.substr(0, t.size() - 1);
  if (coeff.empty() || coeff == "+") return Rational(1);
  if (coeff == "-") return Rational(-1);
  if (coeff.back() != '*') {
    throw std::invalid_argument("malformed Gaussian rational '" + std::string(whole) + "'");
  }
  coeff.remove_suffix(1);
  return parse_rational(coeff);
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (c != ' ') compact += c;
  }
  std::string_view t = compact;
  if (t.empty()) throw std::invalid_argument("empty Gaussian rational");
  if (t.back() != 'i') return GaussianRational(parse_rational(t));

  std::size_t split = std::string_view::npos;
  for (std::size_t k = t.size() - 1; k > 0; --k) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != '*' && t[k - 1] != '/') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) {
    return {Rational(0), parse_imaginary(t, text)};
  }
  return {parse_rational(t.substr(0, split)), parse_imaginary(t.substr(split), text)};
}

GaussianRational pow(const GaussianRational& z, long e) {
  if (e < 0) return pow(z.inverse(), -e);
  GaussianRational result(1);
  GaussianRational base = z;
  auto k = static_cast<unsigned long>(e);
  while (k != 0) {
    if (k & 1UL) result *= base;
    k >>= 1U;
    if (k != 0) base *= base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace germnf
