#include "germnf/exactnum/factor.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace germnf {

namespace {

constexpr unsigned long kTrialLimit = 10000;

bool is_prime(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

// Brent's variant of Pollard rho. n is odd, composite, and has no prime
// factor below the trial-division limit.
Integer pollard_brent(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys;
    const Integer cc = c;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto step = [&](Integer& v) {
      v = v * v + cc;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      do {
        ys = y;
        const unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          step(y);
          Integer diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        step(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_large(const Integer& n, std::map<Integer, long>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const Integer d = pollard_brent(n);
  factor_large(d, out);
  Integer rest = n / d;
  factor_large(rest, out);
}

// Gaussian integers, used only inside the factorizer.
struct GaussInt {
  Integer re;
  Integer im;
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Integer norm(const GaussInt& a) { return a.re * a.re + a.im * a.im; }

bool is_zero(const GaussInt& a) { return a.re == 0 && a.im == 0; }

// Exact quotient a / b when b divides a.
bool try_divide(const GaussInt& a, const GaussInt& b, GaussInt& quotient) {
  const Integer n = norm(b);
  const Integer re = a.re * b.re + a.im * b.im;
  const Integer im = a.im * b.re - a.re * b.im;
  if (!mpz_divisible_p(re.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(im.get_mpz_t(), n.get_mpz_t())) {
    return false;
  }
  quotient = {re / n, im / n};
  return true;
}

Integer round_div(const Integer& a, const Integer& b) {
  // Nearest integer to a / b for b > 0.
  Integer twice = 2 * a + b;
  Integer den = 2 * b;
  return floor_div(twice, den);
}

GaussInt gauss_gcd(GaussInt a, GaussInt b) {
  while (!is_zero(b)) {
    const Integer n = norm(b);
    const Integer re = a.re * b.re + a.im * b.im;
    const Integer im = a.im * b.re - a.re * b.im;
    const GaussInt q{round_div(re, n), round_div(im, n)};
    const GaussInt qb = mul(q, b);
    GaussInt r{a.re - qb.re, a.im - qb.im};
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

GaussInt canonical_associate(GaussInt z) {
  for (int k = 0; k < 4; ++k) {
    if (z.re > 0 && z.im >= 0) return z;
    z = {-z.im, z.re};  // multiply by i
  }
  throw std::logic_error("no canonical associate for zero");
}

// The canonical prime above p = 1 (mod 4).
GaussInt split_prime(const Integer& p) {
  Integer c = 2;
  while (mpz_legendre(c.get_mpz_t(), p.get_mpz_t()) != -1) ++c;
  Integer t;
  const Integer e = (p - 1) / 4;
  mpz_powm(t.get_mpz_t(), c.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  return canonical_associate(gauss_gcd({p, 0}, {t, 1}));
}

int unit_exponent(const GaussInt& u) {
  if (u.re == 1 && u.im == 0) return 0;
  if (u.re == 0 && u.im == 1) return 1;
  if (u.re == -1 && u.im == 0) return 2;
  if (u.re == 0 && u.im == -1) return 3;
  throw std::logic_error("factorization left a non-unit cofactor");
}

GaussianFactorization factor_gauss_int(GaussInt w) {
  GaussianFactorization out;
  const auto primes = factor_integer(norm(w));
  for (const auto& [p, e] : primes) {
    if (p == 2) {
      const GaussInt pi{1, 1};
      GaussInt q;
      long count = 0;
      while (try_divide(w, pi, q)) {
        w = q;
        ++count;
      }
      out.factors[GaussianPrime{1, 1}] += count;
    } else if (mpz_fdiv_ui(p.get_mpz_t(), 4) == 3) {
      const long count = e / 2;
      for (long k = 0; k < count; ++k) {
        w.re /= p;
        w.im /= p;
      }
      out.factors[GaussianPrime{p, 0}] += count;
    } else {
      const GaussInt pi = split_prime(p);
      const GaussInt pi_bar = canonical_associate({pi.re, -pi.im});
      for (const GaussInt& g : {pi, pi_bar}) {
        GaussInt q;
        long count = 0;
        while (try_divide(w, g, q)) {
          w = q;
          ++count;
        }
        if (count != 0) out.factors[GaussianPrime{g.re, g.im}] += count;
      }
    }
  }
  out.unit_exp = unit_exponent(w);
  return out;
}

}  // namespace

std::map<Integer, long> factor_integer(const Integer& n) {
  if (n == 0) throw std::domain_error("factor_integer: zero has no factorization");
  std::map<Integer, long> out;
  Integer m = abs(n);
  for (unsigned long d = 2; d <= kTrialLimit; d += (d == 2 ? 1 : 2)) {
    if (m == 1) break;
    if (Integer(d) * d > m) break;
    long e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), d) != 0) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
      ++e;
    }
    if (e != 0) out[Integer(d)] = e;
  }
  if (m != 1) factor_large(m, out);
  return out;
}

std::string GaussianPrime::to_string() const {
  if (im == 0) return re.get_str();
  std::ostringstream os;
  os << re.get_str() << '+' << im.get_str() << "*i";
  return os.str();
}

bool operator<(const GaussianPrime& a, const GaussianPrime& b) {
  const Integer na = a.norm();
  const Integer nb = b.norm();
  if (na != nb) return na < nb;
  return a.re < b.re;
}

GaussianRational GaussianFactorization::reassemble() const {
  GaussianRational z = pow(GaussianRational::i(), unit_exp);
  for (const auto& [prime, e] : factors) z *= pow(prime.value(), e);
  return z;
}

GaussianFactorization factor_gaussian(const GaussianRational& z) {
  if (z.is_zero()) throw std::domain_error("factor_gaussian: zero has no factorization");
  // z = w / L with w a Gaussian integer and L a positive integer.
  Integer lcm;
  mpz_lcm(lcm.get_mpz_t(), z.re().get_den_mpz_t(), z.im().get_den_mpz_t());
  const Integer w_re = z.re().get_num() * (lcm / z.re().get_den());
  const Integer w_im = z.im().get_num() * (lcm / z.im().get_den());

  GaussianFactorization num = factor_gauss_int({w_re, w_im});
  const GaussianFactorization den = factor_gauss_int({lcm, 0});
  num.unit_exp = ((num.unit_exp - den.unit_exp) % 4 + 4) % 4;
  for (const auto& [prime, e] : den.factors) {
    const long total = (num.factors[prime] -= e);
    if (total == 0) num.factors.erase(prime);
  }
  for (auto it = num.factors.begin(); it != num.factors.end();) {
    it = (it->second == 0) ? num.factors.erase(it) : std::next(it);
  }
  return num;
}

Rational LogModulusVector::squared_modulus() const {
  Rational out(1);
  for (const auto& [p, c] : coords) {
    const Rational twice = 2 * c;
    if (twice.get_den() != 1) throw std::logic_error("log-modulus coordinate is not a half-integer");
    out *= pow(Rational(p), to_long(twice.get_num()));
  }
  return out;
}

LogModulusVector& LogModulusVector::operator+=(const LogModulusVector& o) {
  for (const auto& [p, c] : o.coords) {
    Rational& slot = coords[p];
    slot += c;
    if (sgn(slot) == 0) coords.erase(p);
  }
  return *this;
}

LogModulusVector LogModulusVector::scaled(const Rational& s) const {
  LogModulusVector out;
  if (sgn(s) == 0) return out;
  for (const auto& [p, c] : coords) out.coords[p] = c * s;
  return out;
}

std::string LogModulusVector::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [p, c] : coords) {
    if (!first) os << ", ";
    first = false;
    os << p.get_str() << ": " << c.get_str();
  }
  os << '}';
  return os.str();
}

LogModulusVector log_modulus(const GaussianRational& z) {
  if (z.is_zero()) throw std::domain_error("log_modulus: zero has no logarithm");
  const Rational n = z.norm();
  LogModulusVector out;
  for (const auto& [p, e] : factor_integer(n.get_num())) out.coords[p] += make_rational(e, 2);
  if (n.get_den() != 1) {
    for (const auto& [p, e] : factor_integer(n.get_den())) out.coords[p] -= make_rational(e, 2);
  }
  for (auto it = out.coords.begin(); it != out.coords.end();) {
    it = (sgn(it->second) == 0) ? out.coords.erase(it) : std::next(it);
  }
  return out;
}

}  // namespace germnf
