#pragma once

#include "polya/bigrational.hpp"
#include "polya/functionals.hpp"
#include "polya/real.hpp"
#include "polya/spectrum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polya {

enum class Side { lower, upper };

// Names: thmB_lower, thmC_upper, thmD_upper, one_term_lower, hemi_sharp_upper,
// sphere_lower, sphere_upper, sphere_sharp_lower, sphere_sharp_upper.
struct BoundSpec {
  Manifold manifold;
  std::string name;
  Side side = Side::lower;
  // thmD_upper: the coefficient c_n; filled by make_bound when absent.
  std::optional<Real> coefficient;
};

// Validates the name against the manifold and fixes the side. thmD_upper
// computes c_n with c_n_constant unless one is supplied.
BoundSpec make_bound(const Manifold& m, const std::string& name, const RealCtx& ctx,
                     std::optional<Real> coefficient = std::nullopt);
std::vector<std::string> bound_names();

enum class ChainPosition { k_minus, k_plus, both, interior };
std::string to_string(ChainPosition p);

struct BoundReport {
  BigInt k;
  // Absent only for wedges with p >= 2, whose spectrum is not enumerated.
  std::optional<BigInt> eigenvalue;
  Real bound_value;
  // Oriented so that margin >= 0 means the bound holds.
  std::optional<Real> margin;
  bool holds = false;
  bool is_equality = false;
  // Verdict decided in exact arithmetic rather than under the tolerance.
  bool exact = false;
  ChainPosition at_chain_extreme = ChainPosition::interior;
};

// Equality tolerance: ctx.tolerance() scaled by max(1, |bound|).
Real equality_tolerance(const Real& bound, const RealCtx& ctx);

BoundReport eval_bound(const BoundSpec& spec, const BigInt& k, const RealCtx& ctx);

// Exact sign of lambda_k - C_W k^(2/n) (Polya's inequality) via n-th powers.
Sign polya_sign(const Manifold& m, const BigInt& k);

struct CnConstant {
  Real c_n;
  Real ratio;  // c_n / (2 sqrt(C_W)) = max Theta / 2
  long argmax_K = 0;
  BigInt argmax_k;  // k_minus of the maximizing chain
};
// c_n = sqrt(C_W) max_{1<=K<=K_bound} Theta_n(K). Throws if Theta' is not yet
// negative at K_bound.
CnConstant c_n_constant(int n, const RealCtx& ctx, long K_bound = 10000);

struct UpLo {
  Real up;
  Real lo;
};
// Sphere: up(k) = (s(k)+1)(s(k)+n), lo(k) = s(k+1)(s(k+1)+n-1), s = sigma^-1.
// Hemisphere: up(k) = (s(k-1)+1)(s(k-1)+n), lo(k) = s(k)(s(k)+n-1).
UpLo up_lo(const Manifold& m, const BigInt& k, const RealCtx& ctx);

enum class HemiRemainder { tilde_minus, hat_minus };
// n in {2, 3, 4}, k >= 1.
Real remainder_hemi(int n, HemiRemainder which, const BigInt& k, const RealCtx& ctx);

struct Hemi3Terms {
  Real A, B, C, D;
};
// Decomposition R~_-(3,k) = A + B + 2/3 + C + D, k >= 2.
Hemi3Terms remainder_hemi3_terms(const BigInt& k, const RealCtx& ctx);
// Closed expressions for R^_-(3,k) (in terms of D) and R^_-(4,k), k >= 2.
Real hat_minus3_closed(const BigInt& k, const RealCtx& ctx);
Real hat_minus4_closed(const BigInt& k, const RealCtx& ctx);

enum class SphereRemainder { minus, plus };
// n in {3, 4}, k >= 0, derived from up/lo.
Real remainder_sphere(int n, SphereRemainder which, const BigInt& k, const RealCtx& ctx);

struct Sphere3Terms {
  Real A2, A1, B1, B2;
  Real D2, D1, E1, E2;
};
// R_-(3,k) = A2 + A1 - 7/12 + B1 + B2 and R_+(3,k) = D2 + D1 - 7/12 + E1 + E2, k >= 1.
Sphere3Terms remainder_sphere3_terms(const BigInt& k, const RealCtx& ctx);
// The explicit n = 4 expressions for R_-(4,k) and R_+(4,k), k >= 1.
Real remainder_sphere4_closed(SphereRemainder which, const BigInt& k, const RealCtx& ctx);

enum class Subsequence { k_minus, k_plus, all };

struct GapRow {
  long K = 0;
  BigInt k;
  Real gap;
};
struct SharpnessScan {
  std::vector<GapRow> rows;
  bool increasing = true;  // non-strict flags over consecutive rows
  bool decreasing = true;
};
// Normalized gap per bound:
//   thmB_lower      lambda - C_W k^(2/n)
//   thmC_upper      (lambda - C_W k^(2/n)) / (2 sqrt(C_W) k^(1/n))
//   sphere_upper    (lambda - C_W k^(2/n)) / (sqrt(C_W) k^(1/n))
//   sphere_lower    (C_W (k+1)^(2/n) - lambda) / (sqrt(C_W) (k+1)^(1/n))
//   one_term_lower  lambda / (n k^(2/n))
// Rows skip orders where the normalization vanishes (k = 0 under k^(1/n)).
SharpnessScan sharpness_scan(const BoundSpec& spec, Subsequence sub, long K_max, const RealCtx& ctx);
Real normalized_gap(const BoundSpec& spec, const BigInt& k, const BigInt& lambda, const RealCtx& ctx);

struct TailRow {
  long K = 0;
  BigInt k;
  Real gap;         // lambda_{k-} - (C_W k^(2/n) + 2 sqrt(C_W) k^(1/n))
  Real theta_gap;   // Theta(K) - 2
  Sign theta_prime;
};
std::vector<TailRow> thmD_positivity_tail(int n, long K_lo, long K_hi, const RealCtx& ctx);
// First K >= 1 where Theta' is negative, scanning up to K_max.
std::optional<long> theta_turning_K(int n, long K_max);

struct ThmCThreshold {
  BigInt k_n;  // smallest k such that the bound holds for every k' >= k in the scan
  std::vector<long> violating_K;
};
// Upper bound lambda_k <= C_W k^(2/n) + 2 sqrt(C_W) k^(1/n), decided exactly at
// k_minus of each chain K <= K_max (the worst order of each chain).
ThmCThreshold thmC_threshold(int n, long K_max);

}  // namespace polya
