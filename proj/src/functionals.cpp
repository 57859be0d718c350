#include "polya/functionals.hpp"

#include "polya/symmetric.hpp"

#include <stdexcept>

namespace polya {

namespace {

Real rising_real(const Real& K, int n) {
  Real p(K.precision(), 1L);
  for (int i = 0; i < n; ++i) p *= (K + static_cast<long>(i));
  return p;
}

Sign sign_of(int s) { return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero); }

BigRational sphere_base(int n) { return BigRational(factorial(static_cast<unsigned long>(n)), 2); }

}  // namespace

std::string to_string(Sign s) {
  switch (s) {
    case Sign::negative:
      return "negative";
    case Sign::zero:
      return "zero";
    case Sign::positive:
      return "positive";
  }
  return "";
}

BigRational c_constant(int n) { return BigRational(BigInt((n - 1) * (n - 2)), 6); }

BigRational g_constant(int n) { return BigRational(BigInt(n - 2), 12); }

BigInt upsilon(int n, long K, const BigInt& j) {
  if (K < 1) throw std::out_of_range("upsilon: K must be >= 1");
  return rising_factorial(BigInt(K - 1), static_cast<unsigned>(n)) +
         j * factorial(static_cast<unsigned long>(n));
}

BigInt upsilon_derivative(int n, long K) {
  BigRational v = rising_factorial_poly(n).derivative()(BigRational(K - 1));
  return v.num();
}

Real R_func(int n, const Real& K, const RealCtx& ctx) {
  Real k = K;
  mpfr_prec_round(k.get(), ctx.bits(), MPFR_RNDN);
  Real top = real_power(rising_real(k, n), 2, n);
  return top / (k * (k + static_cast<long>(n - 1)));
}

Real r_prime(int n, const Real& K, const RealCtx& ctx) {
  Real k = K;
  mpfr_prec_round(k.get(), ctx.bits(), MPFR_RNDN);
  // psi(n+K) - psi(K) telescopes for integer n.
  Real dpsi = ctx(0L);
  for (int i = 0; i < n; ++i) dpsi += 1L / (k + static_cast<long>(i));
  Real lam = k * (k + static_cast<long>(n - 1));
  Real bracket = dpsi * 2L / static_cast<long>(n) - (k * 2L + static_cast<long>(n - 1)) / lam;
  return R_func(n, k, ctx) * bracket;
}

Real phi(int n, const Real& K, const RealCtx& ctx) {
  Real k = K;
  mpfr_prec_round(k.get(), ctx.bits(), MPFR_RNDN);
  return real_power(rising_real(k, n), 2, n) - k * (k + static_cast<long>(n - 1));
}

Real theta(int n, long K, const RealCtx& ctx) {
  BigRational U(upsilon(n, K, 1));
  Real lam = ctx(BigInt(K) * (K + n - 1));
  return (lam - rational_power(ctx, U, 2, n)) / rational_power(ctx, U, 1, n);
}

Sign theta_derivative_sign(int n, long K) {
  // Theta'(K) ~ n(2K+n-1) U - U' (K(K+n-1) + U^(2/n)); with A = n(2K+n-1) U - K(K+n-1) U'
  // the sign is that of A - U' U^(2/n), i.e. of A^n - U'^n U^2 when A > 0.
  const BigInt U = upsilon(n, K, 1);
  const BigInt dU = upsilon_derivative(n, K);
  const BigInt lam = BigInt(K) * (K + n - 1);
  const BigInt A = BigInt(n) * (2 * K + n - 1) * U - lam * dU;
  if (dU == 0) return sign_of(sgn(A));
  if (A <= 0) return Sign::negative;
  BigInt lhs = ipow(A, static_cast<unsigned long>(n));
  BigInt rhs = ipow(dU, static_cast<unsigned long>(n)) * U * U;
  return sign_of(cmp(lhs, rhs));
}

Real omega_func(int n, long K, const RealCtx& ctx) {
  if (K < 0) throw std::out_of_range("omega_func: K must be >= 0");
  if (K == 0) return ctx(1L);
  const Manifold S = Manifold::sphere(n);
  BigRational X = sphere_base(n) * BigRational(sigma(S, K - 1));
  Real lam = ctx(distinct_eigenvalue(S, K));
  return (lam - rational_power(ctx, X, 2, n)) / rational_power(ctx, X, 1, n);
}

Real psi_func(int n, long K, const RealCtx& ctx) {
  if (K < 0) throw std::out_of_range("psi_func: K must be >= 0");
  const Manifold S = Manifold::sphere(n);
  BigRational X = sphere_base(n) * BigRational(sigma(S, K));
  Real lam = ctx(distinct_eigenvalue(S, K));
  return (rational_power(ctx, X, 2, n) - lam) / rational_power(ctx, X, 1, n);
}

namespace {

// k_j and the rational base b with C_W k_j^(2/n) = (b k_j)^(2/n).
std::pair<BigInt, BigRational> pol_j_order(const Manifold& m, long K, const BigInt& j) {
  Chain c = chain(m, K);
  if (m.kind == Kind::Sphere) {
    if (j < 0 || j > c.mult - 1) throw std::out_of_range("pol_j: j outside [0, m(K)-1]");
    return {sigma(m, K - 1) + j, sphere_base(m.n)};
  }
  if (m.kind != Kind::Hemisphere) throw std::invalid_argument("pol_j: sphere or hemisphere only");
  if (j < 1 || j > c.mult) throw std::out_of_range("pol_j: j outside [1, m(K)]");
  return {sigma(m, K - 1) + j, BigRational(factorial(static_cast<unsigned long>(m.n)))};
}

}  // namespace

Real pol_j(const Manifold& m, long K, const BigInt& j, const RealCtx& ctx) {
  auto [k, base] = pol_j_order(m, K, j);
  Real lam = ctx(distinct_eigenvalue(m, K));
  return lam - rational_power(ctx, base * BigRational(k), 2, m.n);
}

Sign pol_j_sign(const Manifold& m, long K, const BigInt& j) {
  auto [k, base] = pol_j_order(m, K, j);
  BigRational lhs = pow(BigRational(distinct_eigenvalue(m, K)), static_cast<unsigned>(m.n));
  BigRational x = base * BigRational(k);
  return sign_of(cmp(lhs.mpq(), (x * x).mpq()));
}

BigInt j_star(int n, long K) { return multiplicity(Manifold::hemisphere(n), K); }

BigRational j_dagger_exact(int n, long K) {
  if (K < 1) throw std::out_of_range("j_dagger: K must be >= 1");
  BigInt top = binomial(K - 1 + n - 1, n - 1);
  BigInt low = binomial(K - 1 + n - 2, n - 2);
  return BigRational(top) - g_constant(n) * BigRational(low);
}

Real j_dagger(int n, long K, const RealCtx& ctx) { return ctx(j_dagger_exact(n, K)); }

JCrit j_crit(int n, long K, const RealCtx& ctx) {
  if (K < 2) throw std::out_of_range("j_crit: K must be >= 2");
  BigInt lam = BigInt(K) * (K + n - 1);
  Real top = rational_power(ctx, BigRational(lam), n, 2) -
             ctx(rising_factorial(BigInt(K - 1), static_cast<unsigned>(n)));
  JCrit r{top / ctx(factorial(static_cast<unsigned long>(n))), false};
  r.in_range = r.value >= 1L && r.value <= ctx(j_star(n, K));
  return r;
}

LemmaF lemma_f_coefficients(int n, const Polynomial& j) {
  if (n < 2) throw std::invalid_argument("lemma_f_coefficients: n must be >= 2");
  const BigRational nf(factorial(static_cast<unsigned long>(n)));
  auto e = [&](int l) {
    BigRational v = (l < n) ? BigRational(hat_s(n, l)) : BigRational(0);
    if (n - l >= 0) v += nf * j.coeff(n - l);
    return v;
  };
  const BigRational N(n);
  const BigRational e1 = e(1), e2 = e(2), e3 = e(3);
  LemmaF f;
  f.F1 = (N + 1) - BigRational(2) / N * e1;
  f.F0 = N - BigRational(2) / N * e2 + BigRational(n - 2) / (N * N) * e1 * e1;
  f.Fm1 = -BigRational(2) / N * e3 + BigRational(2 * (n - 2)) / (N * N) * e1 * e2 -
          BigRational(2 * (n - 1) * (n - 2)) / (BigRational(3) * N * N * N) * e1 * e1 * e1;
  for (const BigRational* c : {&f.F1, &f.F0, &f.Fm1}) {
    if (!c->is_zero()) {
      f.eventual_sign = sign_of(c->sign());
      break;
    }
  }
  return f;
}

BigRational t_prime(int n) {
  if (n < 3) throw std::invalid_argument("t_prime: defined for n >= 3");
  const BigRational N(n);
  BigRational q1;
  for (int l = 1; l <= n - 3; ++l)
    q1 += BigRational(2) / N * BigRational(hat_s(n, l + 2)) + BigRational(hat_s(n, l + 1));
  q1 += BigRational(2 * factorial(static_cast<unsigned long>(n - 1)));
  return N - BigRational(2) / N * BigRational(hat_s(n, 2)) - BigRational(hat_s(n, 1)) - q1;
}

BigRational phi_kr(long K, long r) {
  if (K < 1) throw std::out_of_range("phi_kr: K must be >= 1");
  if (r < 0 || r > 2 * K) throw std::out_of_range("phi_kr: r outside [0, 2K]");
  return BigRational(BigInt(r + 1) * (2 * K - r), BigInt(2) * (BigInt(K) * K + r));
}

}  // namespace polya
