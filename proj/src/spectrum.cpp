#include "polya/spectrum.hpp"

#include "polya/polynomial.hpp"
#include "polya/symmetric.hpp"

#include <stdexcept>

namespace polya {

namespace {

void require_enumerable(const Manifold& m) {
  if (m.kind == Kind::Wedge)
    throw std::invalid_argument("wedge spectra are not enumerated; only bounds are available");
}

void require_K(const Manifold& m, long K) {
  require_enumerable(m);
  if (K < m.first_K()) throw std::out_of_range("chain index below range");
}

// sigma as a polynomial in the chain index, over the rationals.
Polynomial sigma_poly(const Manifold& m) {
  const int n = m.n;
  BigRational inv_fact(BigInt(1), factorial(static_cast<unsigned long>(n)));
  if (m.kind == Kind::Sphere) {
    // (y+1)^(n-1 rising) (n + 2y) / n!
    Polynomial p = rising_factorial_poly(n - 1).shift(1);
    p *= Polynomial({BigRational(n), BigRational(2)});
    return p * inv_fact;
  }
  return rising_factorial_poly(n) * inv_fact;
}

Real bisect_newton(const Polynomial& f, const Real& x, Real lo, Real hi, const RealCtx& ctx) {
  // f is increasing on [lo, hi] with f(lo) <= x <= f(hi).
  const Polynomial df = f.derivative();
  Real width_stop(ctx.bits(), 1L);
  mpfr_mul_2si(width_stop.get(), width_stop.get(), -8, MPFR_RNDN);
  int guard = 0;
  while (hi - lo > width_stop && guard++ < 4096) {
    Real mid = (lo + hi) / 2L;
    if (f(mid) < x)
      lo = mid;
    else
      hi = mid;
  }
  Real y = (lo + hi) / 2L;
  Real eps(ctx.bits(), 1L);
  mpfr_mul_2si(eps.get(), eps.get(), -(ctx.bits() - 6), MPFR_RNDN);
  for (int it = 0; it < 200; ++it) {
    Real d = df(y);
    if (d.is_zero()) break;
    Real step = (f(y) - x) / d;
    y -= step;
    if (abs(step) <= eps * max(abs(y), ctx(1L))) break;
  }
  return y;
}

Real cube_root(const Real& v) { return cbrt(v); }

}  // namespace

Manifold Manifold::sphere(int n) {
  if (n < 2) throw std::invalid_argument("dimension must be >= 2");
  return {Kind::Sphere, n, 1};
}

Manifold Manifold::hemisphere(int n) {
  if (n < 2) throw std::invalid_argument("dimension must be >= 2");
  return {Kind::Hemisphere, n, 1};
}

Manifold Manifold::wedge(int n, int p) {
  if (n < 2) throw std::invalid_argument("dimension must be >= 2");
  if (p < 1) throw std::invalid_argument("wedge divisor must be >= 1");
  return {Kind::Wedge, n, p};
}

std::string Manifold::name() const {
  switch (kind) {
    case Kind::Sphere:
      return "sphere";
    case Kind::Hemisphere:
      return "hemisphere";
    case Kind::Wedge:
      return "wedge";
  }
  return "";
}

WeylConstant weyl_constant(const Manifold& m, const RealCtx& ctx) {
  BigInt f = factorial(static_cast<unsigned long>(m.n));
  BigRational base;
  switch (m.kind) {
    case Kind::Sphere:
      base = BigRational(f, 2);
      break;
    case Kind::Hemisphere:
      base = BigRational(f);
      break;
    case Kind::Wedge:
      base = BigRational(f * m.p);
      break;
  }
  return {base, rational_power(ctx, base, 2, m.n)};
}

Real unit_ball_volume(int n, const RealCtx& ctx) {
  if (n < 1) throw std::invalid_argument("unit_ball_volume: n must be >= 1");
  Real w = (n % 2 == 0) ? ctx.pi() : ctx(2L);
  for (int k = (n % 2 == 0) ? 4 : 3; k <= n; k += 2) w = w * ctx.pi() * 2L / static_cast<long>(k);
  return w;
}

Real hemisphere_volume(int n, const RealCtx& ctx) {
  // |S^n| = (n+1) omega_{n+1}.
  return unit_ball_volume(n + 1, ctx) * static_cast<long>(n + 1) / 2L;
}

BigInt distinct_eigenvalue(const Manifold& m, long K) {
  require_K(m, K);
  return BigInt(K) * (BigInt(K) + (m.n - 1));
}

BigInt multiplicity(const Manifold& m, long K) {
  require_K(m, K);
  const long n = m.n;
  if (m.kind == Kind::Sphere) return binomial(n + K, n) - binomial(n + K - 2 < 0 ? 0 : n + K - 2, n);
  return binomial(n + K - 2, n - 1);
}

BigInt sigma(const Manifold& m, long K) {
  require_enumerable(m);
  const unsigned n = static_cast<unsigned>(m.n);
  if (m.kind == Kind::Sphere) {
    if (K < -1) throw std::out_of_range("sigma: K below -1");
    return rising_factorial(BigInt(K + 1), n - 1) * (BigInt(n) + 2 * K) / factorial(n);
  }
  if (K < 0) throw std::out_of_range("sigma: K below 0");
  return rising_factorial(BigInt(K), n) / factorial(n);
}

Real sigma_real(const Manifold& m, const Real& y) {
  require_enumerable(m);
  return sigma_poly(m)(y);
}

Chain chain(const Manifold& m, long K) {
  require_K(m, K);
  Chain c;
  c.K = K;
  c.lambda = distinct_eigenvalue(m, K);
  c.mult = multiplicity(m, K);
  if (m.kind == Kind::Sphere) {
    c.k_minus = sigma(m, K - 1);
    c.k_plus = sigma(m, K) - 1;
  } else {
    c.k_minus = sigma(m, K - 1) + 1;
    c.k_plus = sigma(m, K);
  }
  return c;
}

OrderLookup chain_of_order(const Manifold& m, const BigInt& k) {
  require_enumerable(m);
  if (k < m.first_k()) throw std::out_of_range("chain_of_order: order below range");
  // Smallest K whose chain ends at or beyond k.
  auto ends_at_or_after = [&](long K) {
    return m.kind == Kind::Sphere ? sigma(m, K) > k : sigma(m, K) >= k;
  };
  long lo = m.first_K();
  if (ends_at_or_after(lo)) return {chain(m, lo), k - chain(m, lo).k_minus + 1};
  long hi = lo + 1;
  while (!ends_at_or_after(hi)) {
    lo = hi;
    hi *= 2;
  }
  // ends_at_or_after(lo) is false, ends_at_or_after(hi) is true.
  while (hi - lo > 1) {
    long mid = lo + (hi - lo) / 2;
    if (ends_at_or_after(mid))
      hi = mid;
    else
      lo = mid;
  }
  Chain c = chain(m, hi);
  BigInt j = k - c.k_minus + 1;
  return {c, j};
}

BigInt eigenvalue(const Manifold& m, const BigInt& k) { return chain_of_order(m, k).chain.lambda; }

Real sigma_inverse(const Manifold& m, const Real& x, const RealCtx& ctx, InverseMethod method) {
  require_enumerable(m);
  if (x.sign() < 0) throw std::domain_error("sigma_inverse: x must be >= 0");
  const bool sphere = m.kind == Kind::Sphere;
  const int n = m.n;
  Real X = x;
  mpfr_prec_round(X.get(), ctx.bits(), MPFR_RNDN);
  if (X.is_zero()) return sphere ? ctx(-1L) : ctx(0L);

  bool closed_ok = (n >= 2 && n <= 4);
  if (closed_ok && n == 3) {
    // Discriminants of the cube-root forms must be nonnegative.
    Real disc = sphere ? (X * 108L) * (X * 108L) - 3L : X * X * 729L - 3L;
    if (disc.sign() < 0) {
      if (method == InverseMethod::ClosedForm)
        throw std::domain_error("sigma_inverse: closed form requires a nonnegative discriminant");
      closed_ok = false;
    }
  }
  if (method == InverseMethod::ClosedForm && !closed_ok)
    throw std::domain_error("sigma_inverse: no closed form for this dimension");

  if (closed_ok && method != InverseMethod::RootFinder) {
    const Real three = ctx(3L);
    if (!sphere) {
      if (n == 2) return (sqrt(X * 8L + 1L) - 1L) / 2L;
      if (n == 3) {
        Real L = X * 27L + sqrt(X * X * 729L - 3L);
        Real l3 = cube_root(L);
        return l3 / cube_root(three * three) + 1L / (cube_root(three) * l3) - 1L;
      }
      return (sqrt(sqrt(X * 24L + 1L) * 4L + 5L) - 3L) / 2L;
    }
    if (n == 2) return sqrt(X) - 1L;
    if (n == 3) {
      Real G = X * 108L + sqrt((X * 108L) * (X * 108L) - 3L);
      Real g3 = cube_root(G);
      return g3 / (cube_root(three * three) * 2L) + 1L / (cube_root(three) * g3 * 2L) - ctx(BigRational(3, 2));
    }
    return (sqrt(ctx(2L)) * sqrt(sqrt(X * 48L + 1L) + 1L) - 4L) / 2L;
  }

  // Bracket from the leading-term scale t = (c n! x)^(1/n).
  const Polynomial f = sigma_poly(m);
  BigRational scale(factorial(static_cast<unsigned long>(n)));
  if (sphere) scale /= BigRational(2);
  Real t = real_power(X * ctx(scale), 1, n);
  Real floor_y = sphere ? ctx(-1L) : ctx(0L);
  Real lo = max(floor_y, t - static_cast<long>(n));
  Real hi = t + 1L;
  while (f(lo) > X && lo > floor_y) lo = max(floor_y, lo - static_cast<long>(n));
  while (f(hi) < X) hi = hi * 2L + 1L;
  return bisect_newton(f, X, lo, hi, ctx);
}

CountResult counting_function(const Manifold& m, const BigInt& threshold) {
  require_enumerable(m);
  if (threshold < 0) throw std::domain_error("counting_function: threshold must be >= 0");
  // Largest K with K(K+n-1) <= threshold.
  const long n = m.n;
  BigInt disc = BigInt((n - 1) * (n - 1)) + 4 * threshold;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
  BigInt Kbig = (root - (n - 1)) / 2;
  while (Kbig * (Kbig + n - 1) > threshold) --Kbig;
  while ((Kbig + 1) * (Kbig + n) <= threshold) ++Kbig;
  if (!Kbig.fits_slong_p()) throw std::overflow_error("counting_function: threshold too large");
  long K = Kbig.get_si();
  CountResult r;
  if (K < m.first_K()) {
    // No eigenvalue below the threshold: report an empty chain just before the first.
    r.count = 0;
    r.last_chain.K = m.first_K() - 1;
    r.last_chain.k_minus = m.first_k();
    r.last_chain.k_plus = m.first_k() - 1;
    return r;
  }
  r.count = sigma(m, K);
  r.last_chain = chain(m, K);
  return r;
}

}  // namespace polya
