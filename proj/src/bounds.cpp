#include "polya/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace polya {

namespace {

struct NameInfo {
  const char* name;
  Side side;
  Kind kind;
};

constexpr NameInfo kNames[] = {
    {"thmB_lower", Side::lower, Kind::Hemisphere},
    {"thmC_upper", Side::upper, Kind::Hemisphere},
    {"thmD_upper", Side::upper, Kind::Hemisphere},
    {"one_term_lower", Side::lower, Kind::Hemisphere},
    {"hemi_sharp_upper", Side::upper, Kind::Hemisphere},
    {"sphere_lower", Side::lower, Kind::Sphere},
    {"sphere_upper", Side::upper, Kind::Sphere},
    {"sphere_sharp_lower", Side::lower, Kind::Sphere},
    {"sphere_sharp_upper", Side::upper, Kind::Sphere},
};

Sign sign_of(int s) { return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero); }

// (s + sqrt(D))^e = A + B sqrt(D) with integers A, B.
std::pair<BigInt, BigInt> expand_root_binomial(long s, const BigInt& D, unsigned e) {
  BigInt A = 1, B = 0;
  for (unsigned i = 0; i < e; ++i) {
    BigInt a = A * s + B * D;
    BigInt b = A + B * s;
    A = a;
    B = b;
  }
  return {A, B};
}

// Sign of X - B sqrt(D) for integers, D >= 0.
Sign sign_minus_sqrt(const BigInt& X, const BigInt& B, const BigInt& D) {
  const int sx = sgn(X), sb = sgn(B);
  if (sb == 0 || D == 0) return sign_of(sx);
  if (sx >= 0 && sb < 0) return Sign::positive;
  if (sx <= 0 && sb > 0) return Sign::negative;
  BigInt lhs = X * X, rhs = B * B * D;
  int c = cmp(lhs, rhs);
  return sign_of(sx > 0 ? c : -c);
}

BigRational sphere_base(int n) { return BigRational(factorial(static_cast<unsigned long>(n)), 2); }

BigRational base_of(const Manifold& m) {
  return m.kind == Kind::Sphere ? sphere_base(m.n) : BigRational(factorial(static_cast<unsigned long>(m.n)));
}

// C_W x^(a/n) = (base x)^(a/n) for x >= 0.
Real weyl_power(const Manifold& m, const BigInt& x, long a, const RealCtx& ctx) {
  return rational_power(ctx, base_of(m) * BigRational(x), a, m.n);
}

ChainPosition position_of(const Chain& c, const BigInt& k) {
  const bool lo = k == c.k_minus, hi = k == c.k_plus;
  if (lo && hi) return ChainPosition::both;
  if (lo) return ChainPosition::k_minus;
  if (hi) return ChainPosition::k_plus;
  return ChainPosition::interior;
}

const NameInfo& lookup(const std::string& name) {
  for (const auto& e : kNames)
    if (name == e.name) return e;
  throw std::invalid_argument("unknown bound name: " + name);
}

// Exact sign of the margin where the bound reduces to integer comparisons.
std::optional<Sign> exact_margin_sign(const BoundSpec& spec, const BigInt& k, const BigInt& lam) {
  const int n = spec.manifold.n;
  const unsigned un = static_cast<unsigned>(n);
  const BigInt nf = factorial(static_cast<unsigned long>(n));
  const std::string& name = spec.name;
  if (name == "thmB_lower") {
    BigRational lhs = pow(BigRational(lam) + c_constant(n), un);
    BigRational rhs(nf * k * nf * k);
    return sign_of(cmp(lhs.mpq(), rhs.mpq()));
  }
  if (name == "one_term_lower") {
    return sign_of(cmp(ipow(lam, un), ipow(BigInt(n), un) * k * k));
  }
  if (name == "thmC_upper") {
    // t^2 + 2t >= lambda with t = (n! k)^(1/n)  <=>  n! k >= (-1 + sqrt(lambda + 1))^n.
    BigInt D = lam + 1;
    auto [A, B] = expand_root_binomial(-1, D, un);
    return sign_minus_sqrt(nf * k - A, B, D);
  }
  if (name == "sphere_upper") {
    // t^2 + t >= lambda with t = (n! k / 2)^(1/n)  <=>  2^(n-1) n! k >= (-1 + sqrt(1 + 4 lambda))^n.
    BigInt D = 4 * lam + 1;
    auto [A, B] = expand_root_binomial(-1, D, un);
    BigInt lhs = ipow(BigInt(2), un - 1) * nf * k;
    return sign_minus_sqrt(lhs - A, B, D);
  }
  if (name == "sphere_lower" && n == 2) {
    // lambda - (k+1) + sqrt(k+1) >= 0.
    return sign_minus_sqrt(lam - (k + 1), BigInt(-1), k + 1);
  }
  return std::nullopt;
}

Real bound_value_of(const BoundSpec& spec, const BigInt& k, const RealCtx& ctx) {
  const Manifold& m = spec.manifold;
  const int n = m.n;
  const std::string& name = spec.name;
  if (name == "thmB_lower") return weyl_power(m, k, 2, ctx) - ctx(c_constant(n));
  if (name == "thmC_upper") return weyl_power(m, k, 2, ctx) + weyl_power(m, k, 1, ctx) * 2L;
  if (name == "thmD_upper") {
    return weyl_power(m, k, 2, ctx) + *spec.coefficient * rational_power(ctx, BigRational(k), 1, n);
  }
  if (name == "one_term_lower") return rational_power(ctx, BigRational(k), 2, n) * static_cast<long>(n);
  if (name == "hemi_sharp_upper" || name == "sphere_sharp_upper") return up_lo(m, k, ctx).up;
  if (name == "sphere_sharp_lower") return up_lo(m, k, ctx).lo;
  const WeylConstant cw = weyl_constant(m, ctx);
  if (name == "sphere_upper") return weyl_power(m, k, 2, ctx) + weyl_power(m, k, 1, ctx);
  if (name == "sphere_lower") {
    // C_W (k+1)^(2/n) - C_W (k+1)^(1/n)
    return weyl_power(m, k + 1, 2, ctx) - cw.value * rational_power(ctx, BigRational(k + 1), 1, n);
  }
  throw std::invalid_argument("unknown bound name: " + name);
}

}  // namespace

std::vector<std::string> bound_names() {
  std::vector<std::string> out;
  for (const auto& e : kNames) out.emplace_back(e.name);
  return out;
}

std::string to_string(ChainPosition p) {
  switch (p) {
    case ChainPosition::k_minus:
      return "k_minus";
    case ChainPosition::k_plus:
      return "k_plus";
    case ChainPosition::both:
      return "both";
    case ChainPosition::interior:
      return "interior";
  }
  return "";
}

BoundSpec make_bound(const Manifold& m, const std::string& name, const RealCtx& ctx,
                     std::optional<Real> coefficient) {
  const NameInfo& info = lookup(name);
  if (m.kind != info.kind)
    throw std::invalid_argument("bound " + name + " is not defined on " + m.name());
  BoundSpec spec{m, name, info.side, std::move(coefficient)};
  if (name == "thmD_upper") {
    if (m.n != 3 && m.n != 4) throw std::invalid_argument("thmD_upper: n must be 3 or 4");
    if (!spec.coefficient) spec.coefficient = c_n_constant(m.n, ctx).c_n;
  }
  return spec;
}

Real equality_tolerance(const Real& bound, const RealCtx& ctx) {
  return ctx.tolerance() * max(abs(bound), ctx(1L));
}

BoundReport eval_bound(const BoundSpec& spec, const BigInt& k, const RealCtx& ctx) {
  const Manifold& m = spec.manifold;
  if (k < m.first_k()) throw std::out_of_range("eval_bound: k below the manifold's range");
  if (spec.name == "thmD_upper" && !spec.coefficient)
    throw std::invalid_argument("thmD_upper: coefficient missing (use make_bound)");

  const OrderLookup at = chain_of_order(m, k);
  BoundReport r;
  r.k = k;
  r.eigenvalue = at.chain.lambda;
  r.at_chain_extreme = position_of(at.chain, k);
  r.bound_value = bound_value_of(spec, k, ctx);
  const Real lam = ctx(at.chain.lambda);
  r.margin = spec.side == Side::lower ? lam - r.bound_value : r.bound_value - lam;

  if (auto s = exact_margin_sign(spec, k, at.chain.lambda)) {
    r.exact = true;
    r.holds = *s != Sign::negative;
    r.is_equality = *s == Sign::zero;
  } else {
    const Real tol = equality_tolerance(r.bound_value, ctx);
    r.holds = *r.margin >= -tol;
    r.is_equality = abs(*r.margin) <= tol;
  }
  return r;
}

Sign polya_sign(const Manifold& m, const BigInt& k) {
  const BigInt lam = eigenvalue(m, k);
  const unsigned un = static_cast<unsigned>(m.n);
  BigInt x = factorial(static_cast<unsigned long>(m.n)) * k;
  BigInt lhs = ipow(lam, un);
  if (m.kind == Kind::Sphere) lhs *= 4;  // (n! k / 2)^2
  return sign_of(cmp(lhs, x * x));
}

CnConstant c_n_constant(int n, const RealCtx& ctx, long K_bound) {
  if (n != 3 && n != 4) throw std::invalid_argument("c_n_constant: n must be 3 or 4");
  if (K_bound < 2) throw std::invalid_argument("c_n_constant: K_bound must be >= 2");
  if (theta_derivative_sign(n, K_bound) != Sign::negative)
    throw std::runtime_error("c_n_constant: Theta is still increasing at K_bound");
  long best_K = 1;
  Real best = theta(n, 1, ctx);
  for (long K = 2; K <= K_bound; ++K) {
    Real t = theta(n, K, ctx);
    if (t > best) {
      best = t;
      best_K = K;
    }
  }
  const Manifold h = Manifold::hemisphere(n);
  const Real root = sqrt(weyl_constant(h, ctx).value);
  CnConstant c;
  c.c_n = root * best;
  c.ratio = best / 2L;
  c.argmax_K = best_K;
  c.argmax_k = chain(h, best_K).k_minus;
  return c;
}

Real normalized_gap(const BoundSpec& spec, const BigInt& k, const BigInt& lambda, const RealCtx& ctx) {
  const Manifold& m = spec.manifold;
  const int n = m.n;
  const Real lam = ctx(lambda);
  const std::string& name = spec.name;
  if (name == "thmB_lower") return lam - weyl_power(m, k, 2, ctx);
  if (name == "thmC_upper" || name == "thmD_upper")
    return (lam - weyl_power(m, k, 2, ctx)) / (weyl_power(m, k, 1, ctx) * 2L);
  if (name == "sphere_upper") return (lam - weyl_power(m, k, 2, ctx)) / weyl_power(m, k, 1, ctx);
  if (name == "sphere_lower") return (weyl_power(m, k + 1, 2, ctx) - lam) / weyl_power(m, k + 1, 1, ctx);
  if (name == "one_term_lower") return lam / (rational_power(ctx, BigRational(k), 2, n) * static_cast<long>(n));
  throw std::invalid_argument("normalized_gap: no normalization for " + name);
}

SharpnessScan sharpness_scan(const BoundSpec& spec, Subsequence sub, long K_max, const RealCtx& ctx) {
  const Manifold& m = spec.manifold;
  const bool needs_positive_k = spec.name != "thmB_lower" && spec.name != "sphere_lower";
  SharpnessScan scan;
  for (long K = m.first_K(); K <= K_max; ++K) {
    const Chain c = chain(m, K);
    BigInt from = c.k_minus, to = c.k_plus;
    if (sub == Subsequence::k_minus) to = from;
    if (sub == Subsequence::k_plus) from = to;
    for (BigInt k = from; k <= to; ++k) {
      if (needs_positive_k && k == 0) continue;
      scan.rows.push_back({K, k, normalized_gap(spec, k, c.lambda, ctx)});
    }
  }
  for (size_t i = 1; i < scan.rows.size(); ++i) {
    if (scan.rows[i].gap < scan.rows[i - 1].gap) scan.increasing = false;
    if (scan.rows[i].gap > scan.rows[i - 1].gap) scan.decreasing = false;
  }
  return scan;
}

std::vector<TailRow> thmD_positivity_tail(int n, long K_lo, long K_hi, const RealCtx& ctx) {
  const Manifold h = Manifold::hemisphere(n);
  std::vector<TailRow> rows;
  for (long K = std::max(1L, K_lo); K <= K_hi; ++K) {
    const Chain c = chain(h, K);
    Real two_term = weyl_power(h, c.k_minus, 2, ctx) + weyl_power(h, c.k_minus, 1, ctx) * 2L;
    rows.push_back({K, c.k_minus, ctx(c.lambda) - two_term, theta(n, K, ctx) - 2L,
                    theta_derivative_sign(n, K)});
  }
  return rows;
}

std::optional<long> theta_turning_K(int n, long K_max) {
  for (long K = 1; K <= K_max; ++K)
    if (theta_derivative_sign(n, K) == Sign::negative) return K;
  return std::nullopt;
}

ThmCThreshold thmC_threshold(int n, long K_max) {
  const Manifold h = Manifold::hemisphere(n);
  BoundSpec spec{h, "thmC_upper", Side::upper, std::nullopt};
  ThmCThreshold t;
  t.k_n = 1;
  for (long K = 1; K <= K_max; ++K) {
    const Chain c = chain(h, K);
    if (*exact_margin_sign(spec, c.k_minus, c.lambda) == Sign::negative) {
      t.violating_K.push_back(K);
      t.k_n = c.k_plus + 1;
    }
  }
  return t;
}

}  // namespace polya
