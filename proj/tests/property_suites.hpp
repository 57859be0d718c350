#pragma once

// Randomized property suites over the exact core, shared by the unit tests and
// the acceptance runner. Each returns the number of violated samples.

#include "oracles.hpp"
#include "polya/real.hpp"
#include "polya/symmetric.hpp"

#include <vector>

namespace suites {

using namespace polya;

struct Result {
  long samples = 0;
  long failures = 0;
};

// Partial sums of (1+x)^(a/n): even order bounds from below, odd from above.
inline Result taylor_brackets(unsigned long seed = 1) {
  const RealCtx ctx(128);
  oracle::Gen g(seed);
  Result r;
  for (int a = 1; a <= 2; ++a)
    for (int n = 2; n <= 9; ++n)
      for (int l : {2, 4}) {
        std::vector<BigRational> lam{BigRational(1)};
        for (int s = 1; s <= l; ++s) lam.push_back(lambda_coefficient(a, n, s));
        for (int i = 0; i < 200; ++i) {
          const Real x(128, g.uniform(1e-9, 10.0));
          Real lower = ctx(0L), upper = ctx(0L), pw = ctx(1L);
          for (int s = 0; s <= l; ++s) {
            Real term = ctx(lam[static_cast<size_t>(s)]) * pw;
            lower += term;
            if (s <= l - 1) upper += term;
            pw *= x;
          }
          const Real f = real_power(x + 1L, a, n);
          ++r.samples;
          if (!(lower <= f && f <= upper)) ++r.failures;
          // (1-x)^(a/n) for x in (0,1) lies below every partial sum of its series.
          const Real y(128, g.uniform(1e-9, 1.0 - 1e-9));
          Real alt = ctx(0L), q = ctx(1L);
          for (int s = 0; s <= l; ++s) {
            alt += ctx(lam[static_cast<size_t>(s)]) * q;
            q *= -y;
          }
          ++r.samples;
          if (!(real_power(1L - y, a, n) <= alt)) ++r.failures;
        }
      }
  return r;
}

// sqrt(2 pi) e^-n n^(n+1/2) < n! < sqrt(2 pi) e^(-n + 1/(12n)) n^(n+1/2).
inline Result stirling_brackets() {
  const RealCtx ctx(128);
  Result r;
  const Real root2pi = sqrt(ctx.pi() * 2L);
  for (long n = 1; n <= 60; ++n) {
    const Real N = ctx(n);
    const Real base = root2pi * exp(log(N) * (N + ctx(BigRational(1, 2))) - N);
    const Real f = ctx(factorial(static_cast<unsigned long>(n)));
    ++r.samples;
    if (!(base < f && f < base * exp(1L / (N * 12L)))) ++r.failures;
  }
  return r;
}

// K(K+n-1) < (K^(n rising))^(2/n) < (K + (n-1)/2)^2 for n >= 3; equality on the left for n = 2.
inline Result mother_inequality(unsigned long seed = 2) {
  const RealCtx ctx(192);
  oracle::Gen g(seed);
  Result r;
  for (int n = 2; n <= 9; ++n)
    for (int i = 0; i < 500; ++i) {
      const Real K(192, g.uniform(1e-6, 1e4));
      Real rising = ctx(1L);
      for (int j = 0; j < n; ++j) rising *= K + static_cast<long>(j);
      const Real mid = real_power(rising, 2, n);
      const Real left = K * (K + static_cast<long>(n - 1));
      const Real half = K + ctx(BigRational(n - 1, 2));
      ++r.samples;
      bool ok;
      if (n == 2)
        ok = abs(mid - left) <= ctx.tolerance() * max(left, ctx(1L));
      else
        ok = left < mid && mid < half * half;
      if (!ok) ++r.failures;
    }
  return r;
}

// Closed forms of s_1..s_3, rising-factorial coefficients, and Newton's
// identities k e_k = sum_{i=1}^{k} (-1)^(i-1) e_{k-i} p_i on random multisets.
inline Result symmetric_identities(unsigned long seed = 3) {
  Result r;
  for (long m = 0; m <= 12; ++m) {
    std::vector<long> v;
    for (long i = 1; i <= m; ++i) v.push_back(i);
    for (int j = 1; j <= 3 && j <= m; ++j) {
      ++r.samples;
      if (s_constant(j, m) != elementary_symmetric(v, j)) ++r.failures;
    }
  }
  for (int n = 1; n <= 10; ++n) {
    const Polynomial p = rising_factorial_poly(n);
    std::vector<long> v;
    for (long i = 1; i <= n - 1; ++i) v.push_back(i);
    for (int j = 0; j < n; ++j) {
      ++r.samples;
      if (p.coeff(n - j) != BigRational(elementary_symmetric(v, j))) ++r.failures;
    }
  }
  oracle::Gen g(seed);
  for (int t = 0; t < 200; ++t) {
    std::vector<long> v(static_cast<size_t>(g.integer(1, 9)));
    for (auto& x : v) x = g.integer(-20, 20);
    const int len = static_cast<int>(v.size());
    for (int k = 1; k <= len; ++k) {
      BigInt rhs = 0;
      for (int i = 1; i <= k; ++i) {
        BigInt p = 0;
        for (long x : v) p += ipow(BigInt(x), static_cast<unsigned long>(i));
        BigInt term = elementary_symmetric(v, k - i) * p;
        rhs += (i % 2 == 1) ? term : BigInt(-term);
      }
      ++r.samples;
      if (BigInt(k) * elementary_symmetric(v, k) != rhs) ++r.failures;
    }
  }
  return r;
}

}  // namespace suites
