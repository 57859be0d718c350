#include "polya/power_sum.hpp"

#include "polya/symmetric.hpp"

#include <stdexcept>
#include <vector>

namespace polya {

namespace {

constexpr int kMaxTerms = 60;

const std::vector<BigRational>& bernoulli_cache() {
  static const std::vector<BigRational> cache = bernoulli_numbers(2 * kMaxTerms + 2);
  return cache;
}

Real direct_sum(const BigInt& a, const BigInt& b, long num, long den, const RealCtx& ctx) {
  Real acc = ctx(0L);
  for (BigInt k = a; k <= b; ++k) acc += rational_power(ctx, BigRational(k), num, den);
  return acc;
}

}  // namespace

Real power_sum(const BigInt& a, const BigInt& b, long num, long den, const RealCtx& ctx) {
  if (a < 0) throw std::domain_error("power_sum: lower limit must be >= 0");
  if (den <= 0) throw std::invalid_argument("power_sum: exponent denominator must be positive");
  if (b < a) return ctx(0L);
  if (num == den) return ctx(BigInt((b * (b + 1) - (a - 1) * a) / 2));

  const long start = 16 + ctx.bits() / 2;
  if (b - a < 2 * start) return direct_sum(a, b, num, den, ctx);

  BigInt A = a;
  Real head = ctx(0L);
  if (A < start) {
    head = direct_sum(a, BigInt(start - 1), num, den, ctx);
    A = start;
  }

  const Real s = ctx(BigRational(BigInt(num), BigInt(den)));
  const Real RA = ctx(A), RB = ctx(b);
  const Real logA = log(RA), logB = log(RB);
  auto pw = [&](const Real& lg, const Real& e) { return exp(lg * e); };

  // Integral and endpoint average.
  Real total = (pw(logB, s + 1L) - pw(logA, s + 1L)) / (s + 1L);
  total += (pw(logA, s) + pw(logB, s)) / 2L;

  // Correction terms B_{2j}/(2j)! (f^{(2j-1)}(b) - f^{(2j-1)}(A)), f(x) = x^s.
  const auto& B = bernoulli_cache();
  Real eps = ctx(1L);
  mpfr_mul_2si(eps.get(), eps.get(), -(ctx.bits() + 8), MPFR_RNDN);
  Real falling = s;  // s (s-1) ... (s - r + 1) with r = 2j - 1
  Real fact = ctx(2L);  // (2j)!
  Real prev_mag = ctx(0L);
  for (int j = 1; j <= kMaxTerms; ++j) {
    const long r = 2 * j - 1;
    if (j > 1) {
      falling *= (s - (r - 2));
      falling *= (s - (r - 1));
      fact *= (2L * j - 1) * (2L * j);
    }
    Real e = s - r;
    Real deriv = falling * (pw(logB, e) - pw(logA, e));
    Real term = ctx(B[static_cast<size_t>(2 * j)]) / fact * deriv;
    Real mag = abs(term);
    if (j > 2 && mag > prev_mag) break;  // asymptotic series started to diverge
    total += term;
    if (mag <= eps * abs(total)) break;
    prev_mag = mag;
  }
  return head + total;
}

}  // namespace polya
