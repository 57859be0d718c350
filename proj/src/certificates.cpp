#include "polya/functionals.hpp"
#include "polya/symmetric.hpp"

#include <stdexcept>

namespace polya {

namespace {

// Exact positivity of p on all integers y >= y0 via the Taylor shift at y0:
// nonnegative shifted coefficients with a positive constant term suffice.
bool positive_from(const Polynomial& p, const BigInt& y0) {
  Polynomial s = p.shift(BigRational(y0));
  if (s.coeff(0).sign() <= 0) return false;
  for (const auto& c : s.coeffs())
    if (c.sign() < 0) return false;
  return true;
}

std::optional<BigInt> first_positive_tail(const Polynomial& p) {
  if (p.is_zero() || p.leading().sign() <= 0) return std::nullopt;
  BigInt hi = 1;
  while (!positive_from(p, hi)) hi *= 2;
  BigInt lo = hi / 2;
  if (lo < 1) lo = 1;
  // Smallest y with the shift certificate, by bisection on [lo, hi].
  if (!positive_from(p, lo)) {
    while (hi - lo > 1) {
      BigInt mid = (lo + hi) / 2;
      if (positive_from(p, mid))
        hi = mid;
      else
        lo = mid;
    }
  } else {
    hi = lo;
  }
  // The certificate is conservative; walk down while p stays positive.
  BigInt y = hi;
  while (y > 1 && p(BigRational(y - 1)).sign() > 0) --y;
  return y;
}

}  // namespace

Certificate q_n_poly(int n) {
  if (n < 2) throw std::invalid_argument("q_n_poly: n must be >= 2");
  Polynomial lam({BigRational(0), BigRational(n - 1), BigRational(1)});
  Polynomial U = rising_factorial_poly(n).shift(BigRational(-1)) +
                 Polynomial::constant(BigRational(factorial(static_cast<unsigned long>(n))));
  Certificate c;
  c.n = n;
  c.kind = CertificateKind::QnK;
  c.poly = lam.pow(static_cast<unsigned>(n)) - U * U;
  return c;
}

Certificate q_theta_poly(int n) {
  if (n < 2) throw std::invalid_argument("q_theta_poly: n must be >= 2");
  // H(y) = Upsilon(y + 1) = y^(n rising) + n!.
  Polynomial H = rising_factorial_poly(n) +
                 Polynomial::constant(BigRational(factorial(static_cast<unsigned long>(n))));
  Polynomial dH = H.derivative();
  Polynomial P1({BigRational(n * (n + 1)), BigRational(2 * n)});
  Polynomial P2({BigRational(n), BigRational(n + 1), BigRational(1)});
  Polynomial core = P1 * H - P2 * dH;
  Certificate c;
  c.n = n;
  c.kind = CertificateKind::Qy;
  c.poly = core.pow(static_cast<unsigned>(n)) - dH.pow(static_cast<unsigned>(n)) * H * H;
  return c;
}

Certificate mr_taylor_certificate(int n, int l) {
  if (n < 2) throw std::invalid_argument("mr_taylor_certificate: n must be >= 2");
  if (l < 1 || l % 2 == 0) throw std::invalid_argument("mr_taylor_certificate: l must be odd");
  auto sh = [&](int s) { return BigRational(hat_s(n, s)); };  // zero outside [0, n]

  // B_tau: coefficients of sum_{s<=l} Lambda_s(2) X^s with X(u) = sum_j hat_s_j u^j.
  std::vector<BigRational> xc(static_cast<size_t>(n) + 1);
  for (int j = 1; j <= n; ++j) xc[static_cast<size_t>(j)] = sh(j);
  const Polynomial X(xc);
  Polynomial series;
  Polynomial Xs = Polynomial::constant(1);
  for (int s = 1; s <= l; ++s) {
    Xs *= X;
    series += Xs * lambda_coefficient(2, n, s);
  }
  const int nl = n * l;
  std::vector<BigRational> B(static_cast<size_t>(nl) + 1);
  for (int t = 1; t <= nl; ++t) B[static_cast<size_t>(t)] = series.coeff(t);

  // C_mu for mu in [-2, nl-2], stored at mu + 2.
  std::vector<BigRational> C(static_cast<size_t>(nl) + 1);
  C[0] = 2;
  C[1] = BigRational(n + 1) + B[1];
  C[2] = BigRational(n) + B[2];
  for (int mu = 1; mu <= nl - 2; ++mu) C[static_cast<size_t>(mu + 2)] = B[static_cast<size_t>(mu + 2)];

  // A_{n-j} = (n-j+1) hat_s_{j-1}, j = 1..n.
  auto A = [&](int j) { return BigRational(n - j + 1) * sh(j - 1); };
  auto conv = [&](int gamma) {
    BigRational acc;
    for (int j = 1; j <= n; ++j) {
      int mu = gamma - j;
      if (mu < -2 || mu > nl - 2) continue;
      acc += A(j) * C[static_cast<size_t>(mu + 2)];
    }
    return acc;
  };

  Certificate c;
  c.n = n;
  c.kind = CertificateKind::MRTaylor;
  c.l = l;
  c.B = B;
  c.M.assign(static_cast<size_t>(n) + 2, BigRational(0));
  for (int s = 0; s <= n + 1; ++s) {
    BigRational v = BigRational(2 * n) * (s <= n ? sh(s) : BigRational(0)) +
                    BigRational(n * (n + 1)) * (s >= 1 ? sh(s - 1) : BigRational(0)) - conv(s - 1);
    c.M[static_cast<size_t>(n - s + 1)] = v;
  }
  const int smax = n * (l + 1) - 1;
  c.R.assign(static_cast<size_t>(std::max(0, smax - n)), BigRational(0));
  for (int s = n + 2; s <= smax; ++s) c.R[static_cast<size_t>(s - n - 1)] = conv(s - 1);
  c.poly = Polynomial(c.M);

  BigRational rsum;
  for (const auto& r : c.R) rsum += abs(r);
  c.y_star = first_positive_tail(c.poly - Polynomial::constant(rsum));
  return c;
}

}  // namespace polya
