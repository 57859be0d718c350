#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>

namespace polya {

using BigInt = mpz_class;

// Exact rational, always kept in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long v) : q_(v) {}
  BigRational(const BigInt& v) : q_(v) {}
  // Unevaluated mpz_class expressions (a * b, a + 1, ...).
  template <class U>
  BigRational(const __gmp_expr<mpz_t, U>& e) : q_(BigInt(e)) {}
  BigRational(const BigInt& num, const BigInt& den);
  explicit BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  const mpq_class& mpq() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  std::string str() const { return q_.get_str(); }

  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  BigRational operator-() const { return BigRational(mpq_class(-q_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

BigRational pow(const BigRational& base, unsigned e);
BigRational abs(const BigRational& r);

BigInt ipow(const BigInt& base, unsigned long e);
BigInt factorial(unsigned long n);
// Binomial coefficient; zero when k < 0 or k > n (n >= 0).
BigInt binomial(long n, long k);
// x (x+1) ... (x+n-1); empty product is 1.
BigInt rising_factorial(const BigInt& x, unsigned n);
// Parses a decimal integer, throwing std::invalid_argument on garbage.
BigInt parse_bigint(const std::string& s);

}  // namespace polya
