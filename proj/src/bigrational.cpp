#include "polya/bigrational.hpp"

#include <stdexcept>

namespace polya {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("BigRational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
  q_ /= o.q_;
  return *this;
}

BigRational pow(const BigRational& base, unsigned e) {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), e);
  return BigRational(n, d);
}

BigRational abs(const BigRational& r) { return r.sign() < 0 ? -r : r; }

BigInt ipow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial: negative upper index");
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt rising_factorial(const BigInt& x, unsigned n) {
  BigInt r = 1;
  BigInt t = x;
  for (unsigned i = 0; i < n; ++i) {
    r *= t;
    ++t;
  }
  return r;
}

BigInt parse_bigint(const std::string& s) {
  BigInt r;
  if (s.empty() || r.set_str(s, 10) != 0) throw std::invalid_argument("not an integer: " + s);
  return r;
}

}  // namespace polya
