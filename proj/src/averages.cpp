#include "polya/functionals.hpp"
#include "polya/power_sum.hpp"

#include <stdexcept>

namespace polya {

namespace {

// sum_{k=a}^{b} C_W k^(2/n), written as base^(2/n) sum k^(2/n).
Real weyl_sum(const Manifold& m, const BigInt& a, const BigInt& b, const RealCtx& ctx) {
  WeylConstant cw = weyl_constant(m, ctx);
  return cw.value * power_sum(a, b, 2, m.n, ctx);
}

// Exact sum of lambda_j over j in [first_k, k] by whole chains.
BigInt eigenvalue_prefix_sum(const Manifold& m, const BigInt& k) {
  OrderLookup at = chain_of_order(m, k);
  BigInt acc = 0;
  for (long K = m.first_K(); K < at.chain.K; ++K)
    acc += distinct_eigenvalue(m, K) * multiplicity(m, K);
  acc += at.chain.lambda * at.j;
  return acc;
}

}  // namespace

Real chain_average(const Manifold& m, long K, const RealCtx& ctx) {
  Chain c = chain(m, K);
  Real total = ctx(c.lambda * c.mult) - weyl_sum(m, c.k_minus, c.k_plus, ctx);
  return total / ctx(c.mult);
}

std::optional<BigRational> chain_average_exact(const Manifold& m, long K) {
  if (m.n != 2 || m.kind == Kind::Wedge) return std::nullopt;
  Chain c = chain(m, K);
  // C_W = base for n = 2, and k^(2/n) = k.
  const BigRational base = m.kind == Kind::Sphere ? BigRational(1) : BigRational(2);
  BigInt ksum = (c.k_plus * (c.k_plus + 1) - (c.k_minus - 1) * c.k_minus) / 2;
  return (BigRational(c.lambda * c.mult) - base * BigRational(ksum)) / BigRational(c.mult);
}

Real total_average(int n, const BigInt& k, const RealCtx& ctx) {
  if (k < 1) throw std::out_of_range("total_average: k must be >= 1");
  const Manifold m = Manifold::hemisphere(n);
  Real s = ctx(eigenvalue_prefix_sum(m, k)) - weyl_sum(m, 1, k, ctx);
  return s / ctx(k);
}

std::optional<BigRational> total_average_exact(int n, const BigInt& k) {
  if (k < 1) throw std::out_of_range("total_average: k must be >= 1");
  if (n != 2) return std::nullopt;
  const Manifold m = Manifold::hemisphere(2);
  BigInt s = eigenvalue_prefix_sum(m, k) - k * (k + 1);
  return BigRational(s, k);
}

AveragePeak total_average_chain_peak(int n, long K, const RealCtx& ctx) {
  const Manifold m = Manifold::hemisphere(n);
  const Chain c = chain(m, K);
  const WeylConstant cw = weyl_constant(m, ctx);
  const Real lam = ctx(c.lambda);

  // Running sums up to k_minus - 1 are shared by every probe.
  const BigInt before = c.k_minus - 1;
  const Real eig_before = ctx(before > 0 ? eigenvalue_prefix_sum(m, before) : BigInt(0));
  const Real weyl_before = before > 0 ? cw.value * power_sum(1, before, 2, n, ctx) : ctx(0L);

  auto average = [&](const BigInt& k) {
    BigInt inside = k - before;
    Real s = eig_before + lam * ctx(inside) - weyl_before - cw.value * power_sum(c.k_minus, k, 2, n, ctx);
    return s / ctx(k);
  };
  auto term = [&](const BigInt& k) { return lam - cw.value * rational_power(ctx, BigRational(k), 2, n); };
  // A(k+1) > A(k) iff term(k+1) > A(k); the term falls and the average rises, so
  // the predicate holds on an initial segment of the chain.
  auto rising = [&](const BigInt& k) { return term(k + 1) > average(k); };

  BigInt peak = c.k_minus;
  if (c.k_plus > c.k_minus && rising(c.k_minus)) {
    // Last rising k in [k_minus, k_plus - 1]; k_plus acts as the sentinel.
    BigInt lo = c.k_minus, hi = c.k_plus;
    while (hi - lo > 1) {
      BigInt mid = (lo + hi) / 2;
      if (rising(mid))
        lo = mid;
      else
        hi = mid;
    }
    peak = lo + 1;
  }
  return {K, peak, average(peak)};
}

MinKResult min_polya_chain_K(int n, PolyaMode mode, long bound, const RealCtx& ctx) {
  if (n < 2) throw std::invalid_argument("min_polya_chain_K: n must be >= 2");
  if (bound < 2) throw std::invalid_argument("min_polya_chain_K: bound must be >= 2");
  const Manifold m = Manifold::hemisphere(n);
  const Polynomial q = q_n_poly(n).poly;
  MinKResult r;
  r.bound = bound;
  for (long K = 2; K <= bound; ++K) {
    bool ok = mode == PolyaMode::lowest_order ? q(BigRational(K)).sign() >= 0
                                              : chain_average(m, K, ctx).sign() >= 0;
    if (!ok) r.failing.push_back(K);
  }
  r.K = r.failing.empty() ? 2 : r.failing.back() + 1;
  r.determined = r.K <= bound;
  return r;
}

}  // namespace polya
