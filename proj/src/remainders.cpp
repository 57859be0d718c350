#include "polya/bounds.hpp"

#include <stdexcept>

namespace polya {

namespace {

Real sinv(const Manifold& m, const BigInt& x, const RealCtx& ctx) { return sigma_inverse(m, ctx(x), ctx); }

// 2^(a2/d) 3^(a3/d).
Real pow23(long a2, long a3, long d, const RealCtx& ctx) {
  return exp((log(ctx(2L)) * a2 + log(ctx(3L)) * a3) / d);
}

// S(k) = k + sqrt(k^2 - 2^-4 3^-5).
Real sphere3_S(const BigInt& k, const RealCtx& ctx) {
  Real K = ctx(k);
  return K + sqrt(K * K - ctx(BigRational(BigInt(1), BigInt(16 * 243))));
}

}  // namespace

UpLo up_lo(const Manifold& m, const BigInt& k, const RealCtx& ctx) {
  const long n = m.n;
  if (m.kind == Kind::Sphere) {
    if (k < 0) throw std::out_of_range("up_lo: k must be >= 0");
    Real s = sinv(m, k, ctx), t = sinv(m, k + 1, ctx);
    return {(s + 1L) * (s + n), t * (t + (n - 1))};
  }
  if (m.kind != Kind::Hemisphere) throw std::invalid_argument("up_lo: sphere or hemisphere only");
  if (k < 1) throw std::out_of_range("up_lo: k must be >= 1");
  Real s = sinv(m, k - 1, ctx), t = sinv(m, k, ctx);
  return {(s + 1L) * (s + n), t * (t + (n - 1))};
}

Real remainder_hemi(int n, HemiRemainder which, const BigInt& k, const RealCtx& ctx) {
  if (n < 2 || n > 4) throw std::invalid_argument("remainder_hemi: n must be 2, 3 or 4");
  if (k < 1) throw std::out_of_range("remainder_hemi: k must be >= 1");
  const Manifold h = Manifold::hemisphere(n);
  const BigRational base(factorial(static_cast<unsigned long>(n)));
  const BigInt x = which == HemiRemainder::tilde_minus ? BigInt(k - 1) : k;
  Real up = up_lo(h, k, ctx).up;
  return up - rational_power(ctx, base * BigRational(x), 2, n) -
         rational_power(ctx, base * BigRational(x), 1, n) * 2L;
}

Hemi3Terms remainder_hemi3_terms(const BigInt& k, const RealCtx& ctx) {
  if (k < 2) throw std::out_of_range("remainder_hemi3_terms: k must be >= 2");
  const BigRational base(6);
  const BigInt x = k - 1;
  const Real X = ctx(x);
  const Real z = ctx(27L) * X;
  const Real L = z + sqrt(z * z - 3L);
  // h = 1/2 + 1/2 sqrt(1 - 3/(27x)^2)
  const Real h = (sqrt(1L - ctx(3L) / (z * z)) + 1L) / 2L;
  Hemi3Terms t;
  t.A = -rational_power(ctx, base * BigRational(x), 2, 3) * (1L - real_power(h, 2, 3));
  t.B = -rational_power(ctx, base * BigRational(x), 1, 3) * 2L * (1L - real_power(h, 1, 3));
  t.D = 1L / (rational_power(ctx, BigRational(3), 2, 3) * real_power(L, 2, 3));
  t.C = sqrt(t.D) * 2L;
  return t;
}

Real hat_minus3_closed(const BigInt& k, const RealCtx& ctx) {
  const Hemi3Terms t = remainder_hemi3_terms(k, ctx);
  const BigRational base(6);
  const Real rd = sqrt(t.D);
  return -rational_power(ctx, base * BigRational(k), 2, 3) -
         rational_power(ctx, base * BigRational(k), 1, 3) * 2L + ctx(BigRational(2, 3)) +
         (t.D + (1L / t.D) / 9L) + (rd + (1L / rd) / 3L) * 2L;
}

Real hat_minus4_closed(const BigInt& k, const RealCtx& ctx) {
  if (k < 1) throw std::out_of_range("hat_minus4_closed: k must be >= 1");
  const Real a = ctx(BigInt(24 * k - 23));
  const Real b = ctx(BigInt(24 * k));
  const Real ra = sqrt(a);
  return sqrt(ra * 4L + 5L) + ra - sqrt(b) - real_power(b, 1, 4) * 2L;
}

Real remainder_sphere(int n, SphereRemainder which, const BigInt& k, const RealCtx& ctx) {
  if (n != 3 && n != 4) throw std::invalid_argument("remainder_sphere: n must be 3 or 4");
  if (k < 0) throw std::out_of_range("remainder_sphere: k must be >= 0");
  const Manifold s = Manifold::sphere(n);
  const BigRational base(factorial(static_cast<unsigned long>(n)), 2);
  const UpLo ul = up_lo(s, k, ctx);
  if (which == SphereRemainder::minus) {
    return ul.up - rational_power(ctx, base * BigRational(k), 2, n) -
           rational_power(ctx, base * BigRational(k), 1, n);
  }
  return ul.lo - rational_power(ctx, base * BigRational(k + 1), 2, n) +
         rational_power(ctx, base * BigRational(k + 1), 1, n);
}

Sphere3Terms remainder_sphere3_terms(const BigInt& k, const RealCtx& ctx) {
  if (k < 1) throw std::out_of_range("remainder_sphere3_terms: k must be >= 1");
  const BigRational base(3);  // 3!/2, C_W = 3^(2/3)
  const Real cw = rational_power(ctx, base, 2, 3);
  const Real rcw = rational_power(ctx, base, 1, 3);
  const Real c2 = pow23(-2, 0, 3, ctx);    // 2^(-2/3)
  const Real c1 = pow23(-1, 0, 3, ctx);    // 2^(-1/3)
  const Real cb1 = pow23(-5, -4, 3, ctx);  // 2^(-5/3) 3^(-4/3)
  const Real cb2 = pow23(-10, -8, 3, ctx); // 2^(-10/3) 3^(-8/3)

  auto A2 = [&](const BigInt& x) {
    Real S = sphere3_S(x, ctx);
    return -cw * (rational_power(ctx, BigRational(x), 2, 3) - c2 * real_power(S, 2, 3));
  };
  auto A1 = [&](const BigInt& x) {
    Real S = sphere3_S(x, ctx);
    return -rcw * (rational_power(ctx, BigRational(x), 1, 3) - c1 * real_power(S, 1, 3));
  };
  auto B1 = [&](const BigInt& x) { return cb1 / real_power(sphere3_S(x, ctx), 1, 3); };
  auto B2 = [&](const BigInt& x) { return cb2 / real_power(sphere3_S(x, ctx), 2, 3); };

  Sphere3Terms t;
  t.A2 = A2(k);
  t.A1 = A1(k);
  t.B1 = B1(k);
  t.B2 = B2(k);
  t.D2 = A2(k + 1);
  t.D1 = -A1(k + 1);
  t.E1 = -B1(k + 1);
  t.E2 = B2(k + 1);
  return t;
}

Real remainder_sphere4_closed(SphereRemainder which, const BigInt& k, const RealCtx& ctx) {
  if (k < 1) throw std::out_of_range("remainder_sphere4_closed: k must be >= 1");
  const Real cw = sqrt(ctx(12L));
  const Real rcw = sqrt(cw);
  const Real shift = ctx(BigRational(1, 48));
  const BigInt x = which == SphereRemainder::minus ? k : BigInt(k + 1);
  const Real X = ctx(x);
  const Real inner = sqrt(X + shift);
  const Real second = rcw * (sqrt(inner + 1L / (cw * 2L)) - real_power(X, 1, 4));
  Real r = ctx(BigRational(-3, 2)) + cw * (inner - sqrt(X));
  return which == SphereRemainder::minus ? r + second : r - second;
}

}  // namespace polya
