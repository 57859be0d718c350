#include "polya/real.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace polya {

namespace {

mpfr_prec_t wider(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

// Rounds `a` up to precision p in place before a binary operation.
void widen(Real& a, mpfr_prec_t p) {
  if (a.precision() < p) mpfr_prec_round(a.get(), p, MPFR_RNDN);
}

}  // namespace

RealCtx::RealCtx(int bits) : bits_(bits) {
  if (bits < kMinBits) throw std::invalid_argument("RealCtx: precision must be >= 53 bits");
}

void RealCtx::set_tolerance(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("RealCtx: tolerance must be positive");
  tol_ = tol;
}

Real RealCtx::tolerance() const {
  if (tol_ > 0.0) return Real(bits_, tol_);
  Real t(bits_, 1L);
  mpfr_mul_2si(t.get(), t.get(), -(bits_ / 2), MPFR_RNDN);
  return t;
}

Real RealCtx::operator()(long v) const { return Real(bits_, v); }
Real RealCtx::operator()(const BigInt& v) const { return Real(bits_, v); }
Real RealCtx::operator()(const BigRational& v) const { return Real(bits_, v); }

Real RealCtx::pi() const {
  Real r(bits_);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

int RealCtx::bits_from_env(int fallback) {
  const char* env = std::getenv("POLYA_PRECISION_BITS");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < kMinBits || v > 1 << 20) return fallback;
  return static_cast<int>(v);
}

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Real::Real(const Real& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, o.precision());
  mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real::Real(mpfr_prec_t prec, long v) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(mpfr_prec_t prec, double v) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(mpfr_prec_t prec, const BigInt& v) {
  mpfr_init2(v_, prec);
  mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(mpfr_prec_t prec, const BigRational& v) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, v.mpq().get_mpq_t(), MPFR_RNDN);
}

Real::Real(mpfr_prec_t prec, const std::string& decimal) {
  mpfr_init2(v_, prec);
  if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(v_);
    throw std::invalid_argument("Real: cannot parse " + decimal);
  }
}

BigInt Real::floor_int() const {
  BigInt r;
  mpfr_get_z(r.get_mpz_t(), v_, MPFR_RNDD);
  return r;
}

std::string Real::sci(int digits) const {
  if (digits < 1) digits = 1;
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  int len = mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return std::string(buf.data(), static_cast<size_t>(len));
}

Real& Real::operator+=(const Real& o) {
  widen(*this, o.precision());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  widen(*this, o.precision());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  widen(*this, o.precision());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  widen(*this, o.precision());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator+=(long o) {
  mpfr_add_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(long o) {
  mpfr_sub_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(long o) {
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real operator-(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

Real operator/(long a, const Real& b) {
  Real r(b.precision());
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp_si(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

#define POLYA_UNARY(name, fn)                  \
  Real name(const Real& x) {                   \
    Real r(x.precision());                     \
    fn(r.get(), x.get(), MPFR_RNDN);           \
    return r;                                  \
  }

POLYA_UNARY(sqrt, mpfr_sqrt)
POLYA_UNARY(cbrt, mpfr_cbrt)
POLYA_UNARY(exp, mpfr_exp)
POLYA_UNARY(log, mpfr_log)
POLYA_UNARY(abs, mpfr_abs)
POLYA_UNARY(digamma, mpfr_digamma)
POLYA_UNARY(zeta, mpfr_zeta)

#undef POLYA_UNARY

Real lgamma(const Real& x) {
  Real r(x.precision());
  int sign = 0;
  mpfr_lgamma(r.get(), &sign, x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r(wider(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real min(const Real& a, const Real& b) { return a < b ? a : b; }
Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real real_power(const Real& x, long a, long n) {
  if (n <= 0) throw std::invalid_argument("real_power: exponent denominator must be positive");
  if (x.sign() < 0) throw std::domain_error("real_power: negative base");
  Real r(x.precision());
  if (a % n == 0) {
    mpfr_pow_si(r.get(), x.get(), a / n, MPFR_RNDN);
    return r;
  }
  if (x.is_zero()) {
    if (a < 0) throw std::domain_error("real_power: zero to negative power");
    return r;
  }
  Real t = log(x);
  t *= a;
  t /= n;
  return exp(t);
}

Real rational_power(const RealCtx& ctx, const BigRational& x, long a, long n) {
  if (n <= 0) throw std::invalid_argument("rational_power: exponent denominator must be positive");
  if (x.sign() < 0) throw std::domain_error("rational_power: negative base");
  if (a % n == 0) {
    long e = a / n;
    if (e >= 0) return ctx(pow(x, static_cast<unsigned>(e)));
    if (x.is_zero()) throw std::domain_error("rational_power: zero to negative power");
    return ctx(pow(BigRational(1) / x, static_cast<unsigned>(-e)));
  }
  return real_power(ctx(x), a, n);
}

bool approx_equal(const Real& a, const Real& b, const Real& tol) { return abs(a - b) <= tol; }

}  // namespace polya
