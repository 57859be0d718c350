#include "polya/wedges.hpp"

#include <stdexcept>

namespace polya {

namespace {

void require(int n, int p, const BigInt& k) {
  if (n < 2) throw std::invalid_argument("wedge: n must be >= 2");
  if (p < 1) throw std::invalid_argument("wedge: p must be >= 1");
  if (k < 1) throw std::out_of_range("wedge: k must be >= 1");
}

BigRational wedge_base(int n, int p, const BigInt& k) {
  return BigRational(BigInt(p) * k * factorial(static_cast<unsigned long>(n)));
}

// Exact sign of lambda + c - (p k n!)^(2/n) via n-th powers.
Sign floor_sign(int n, const BigInt& lambda, const BigRational& x) {
  BigRational lhs = pow(BigRational(lambda) + c_constant(n), static_cast<unsigned>(n));
  int s = cmp(lhs.mpq(), (x * x).mpq());
  return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
}

}  // namespace

BoundReport wedge_lower_bound(int n, int p, const BigInt& k, const RealCtx& ctx) {
  require(n, p, k);
  const BigRational x = wedge_base(n, p, k);
  BoundReport r;
  r.k = k;
  r.bound_value = rational_power(ctx, x, 2, n) - ctx(c_constant(n));
  if (p == 1) {
    const Manifold h = Manifold::hemisphere(n);
    const OrderLookup at = chain_of_order(h, k);
    r.eigenvalue = at.chain.lambda;
    r.margin = ctx(at.chain.lambda) - r.bound_value;
    const Sign s = floor_sign(n, at.chain.lambda, x);
    r.exact = true;
    r.holds = s != Sign::negative;
    r.is_equality = s == Sign::zero;
    r.at_chain_extreme = k == at.chain.k_minus && k == at.chain.k_plus ? ChainPosition::both
                         : k == at.chain.k_minus                        ? ChainPosition::k_minus
                         : k == at.chain.k_plus                         ? ChainPosition::k_plus
                                                                        : ChainPosition::interior;
  }
  return r;
}

OneTermWedge wedge_one_term_bound(int n, int p, const BigInt& k, const RealCtx& ctx) {
  require(n, p, k);
  const BigInt pk = BigInt(p) * k;
  OneTermWedge out;
  out.report.k = k;
  if (n % 2 == 0) {
    BigInt root;
    if (mpz_root(root.get_mpz_t(), pk.get_mpz_t(), static_cast<unsigned long>(n / 2)) != 0)
      out.exact_value = BigInt(n) * root;
  }
  out.report.bound_value = out.exact_value ? ctx(*out.exact_value)
                                           : rational_power(ctx, BigRational(pk), 2, n) * static_cast<long>(n);
  if (p == 1) {
    BoundReport h = eval_bound(make_bound(Manifold::hemisphere(n), "one_term_lower", ctx), k, ctx);
    h.bound_value = out.report.bound_value;
    out.report = h;
  }
  return out;
}

std::vector<TransferRow> tiling_transfer_check(int n, int p, long k_max, const RealCtx& ctx) {
  if (n < 2 || p < 1) throw std::invalid_argument("tiling_transfer_check: need n >= 2, p >= 1");
  const Manifold h = Manifold::hemisphere(n);
  std::vector<TransferRow> rows;
  rows.reserve(static_cast<size_t>(k_max > 0 ? k_max : 0));
  for (long k = 1; k <= k_max; ++k) {
    TransferRow row;
    row.k = k;
    row.pk = BigInt(p) * k;
    row.lambda_pk = eigenvalue(h, row.pk);
    const BigRational x = wedge_base(n, p, BigInt(k));
    row.floor = rational_power(ctx, x, 2, n) - ctx(c_constant(n));
    row.margin = ctx(row.lambda_pk) - row.floor;
    const Sign s = floor_sign(n, row.lambda_pk, x);
    row.exact = true;
    row.holds = s != Sign::negative;
    row.is_equality = s == Sign::zero;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace polya
