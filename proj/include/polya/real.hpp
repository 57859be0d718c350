#pragma once

#include "polya/bigrational.hpp"

#include <mpfr.h>

#include <compare>
#include <string>

namespace polya {

class Real;

// Precision context for real-valued evaluation.
//
// Error model: every elementary operation (+, -, *, /, sqrt, exp, log, pow,
// digamma, zeta) is correctly rounded to nearest by MPFR at `bits` mantissa
// bits, so each step contributes relative error <= 2^(1-bits), comfortably
// inside the documented 2^(4-bits) budget. Comparisons of reals always take
// an explicit absolute tolerance; the default is 2^-(bits/2).
class RealCtx {
 public:
  static constexpr int kDefaultBits = 192;
  static constexpr int kMinBits = 53;

  explicit RealCtx(int bits = kDefaultBits);

  int bits() const { return bits_; }
  // 2^-(bits/2) unless overridden.
  Real tolerance() const;
  void set_tolerance(double tol);

  Real operator()(long v) const;
  Real operator()(const BigInt& v) const;
  Real operator()(const BigRational& v) const;
  template <class U>
  Real operator()(const __gmp_expr<mpz_t, U>& e) const;
  Real pi() const;

  // POLYA_PRECISION_BITS if set and valid, else `fallback`.
  static int bits_from_env(int fallback = kDefaultBits);

 private:
  int bits_;
  double tol_ = 0.0;  // 0: default
};

// RAII wrapper around mpfr_t. Binary operations round to the larger of the two
// operand precisions.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = RealCtx::kDefaultBits);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  Real(mpfr_prec_t prec, long v);
  Real(mpfr_prec_t prec, int v) : Real(prec, static_cast<long>(v)) {}
  Real(mpfr_prec_t prec, double v);
  Real(mpfr_prec_t prec, const BigInt& v);
  Real(mpfr_prec_t prec, const BigRational& v);
  Real(mpfr_prec_t prec, const std::string& decimal);

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  // Nearest integer below; only meaningful for finite values.
  BigInt floor_int() const;
  // Scientific notation with `digits` significant digits.
  std::string sci(int digits) const;

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator+=(long o);
  Real& operator-=(long o);
  Real& operator*=(long o);
  Real& operator/=(long o);
  Real operator-() const;

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator+(Real a, long b) { return a += b; }
  friend Real operator-(Real a, long b) { return a -= b; }
  friend Real operator*(Real a, long b) { return a *= b; }
  friend Real operator/(Real a, long b) { return a /= b; }
  friend Real operator+(long a, Real b) { return b += a; }
  friend Real operator*(long a, Real b) { return b *= a; }
  friend Real operator-(long a, const Real& b);
  friend Real operator/(long a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);
  friend std::partial_ordering operator<=>(const Real& a, long b);
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }

 private:
  mpfr_t v_;
};

Real sqrt(const Real& x);
Real cbrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real abs(const Real& x);
Real pow(const Real& x, const Real& y);
Real digamma(const Real& x);
Real zeta(const Real& s);
Real lgamma(const Real& x);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);

template <class U>
Real RealCtx::operator()(const __gmp_expr<mpz_t, U>& e) const {
  return (*this)(BigInt(e));
}

// x^(a/n) for rational x >= 0 as exp((a/n) log x); exact when n divides a.
Real rational_power(const RealCtx& ctx, const BigRational& x, long a, long n);
// x^(a/n) for real x >= 0.
Real real_power(const Real& x, long a, long n);

// |a - b| <= tol.
bool approx_equal(const Real& a, const Real& b, const Real& tol);

}  // namespace polya
