#pragma once

#include "polya/bigrational.hpp"
#include "polya/polynomial.hpp"
#include "polya/real.hpp"
#include "polya/spectrum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polya {

enum class Sign { negative = -1, zero = 0, positive = 1 };

std::string to_string(Sign s);

// c(n) = (n-1)(n-2)/6, the limit of Phi.
BigRational c_constant(int n);
// G = (n-2)/12.
BigRational g_constant(int n);

// Upsilon_j(K) = (K-1)^(n rising) + j n!.
BigInt upsilon(int n, long K, const BigInt& j);
// d/dK of (K-1)^(n rising) at integer K.
BigInt upsilon_derivative(int n, long K);

// Functionals on distinct hemisphere eigenvalues.
Real R_func(int n, const Real& K, const RealCtx& ctx);
Real r_prime(int n, const Real& K, const RealCtx& ctx);
Real phi(int n, const Real& K, const RealCtx& ctx);
Real theta(int n, long K, const RealCtx& ctx);
// Sign of Theta'(K), decided in exact integer arithmetic.
Sign theta_derivative_sign(int n, long K);

// Functionals on distinct sphere eigenvalues. omega_func(n, 0) = 1 by
// convention (the defining inequality is the equality 0 = 0 there).
Real omega_func(int n, long K, const RealCtx& ctx);
Real psi_func(int n, long K, const RealCtx& ctx);

enum class CertificateKind { QnK, Qy, MRTaylor };

struct Certificate {
  int n = 0;
  CertificateKind kind = CertificateKind::QnK;
  Polynomial poly;
  // MRTaylor only.
  int l = 0;
  // M[d] multiplies y^d, d = 0..n+1.
  std::vector<BigRational> M;
  // R[t] multiplies y^-t, t = 1..; R[0] unused and zero.
  std::vector<BigRational> R;
  // B[tau], tau = 1..nl (B[0] unused).
  std::vector<BigRational> B;
  // Smallest integer y >= 1 with M(y) > sum |R_t| for every integer y' >= y.
  std::optional<BigInt> y_star;
};

// Q_n(K) = (K(K+n-1))^n - ((K-1)^(n rising) + n!)^2 as a polynomial in K.
Certificate q_n_poly(int n);
// Q(y) whose sign at y = K-1 is the sign of Theta'(K).
Certificate q_theta_poly(int n);
// Taylor certificate M(y) - R(1/y) with an odd truncation order l.
Certificate mr_taylor_certificate(int n, int l);

// Margin of Polya's inequality for the j-th member of the K-chain.
// Hemisphere: k_j = sigma(K-1) + j, j in [1, m(K)].
// Sphere:     k_j = sigma(K-1) + j, j in [0, m(K)-1].
Real pol_j(const Manifold& m, long K, const BigInt& j, const RealCtx& ctx);
// Exact sign of pol_j via n-th powers.
Sign pol_j_sign(const Manifold& m, long K, const BigInt& j);

BigInt j_star(int n, long K);
Real j_dagger(int n, long K, const RealCtx& ctx);
BigRational j_dagger_exact(int n, long K);

struct JCrit {
  Real value;
  bool in_range = false;  // 1 <= value <= m(K)
};
JCrit j_crit(int n, long K, const RealCtx& ctx);

// Leading Laurent coefficients of Pol_{j(K)}(K) in powers of (K-1) for a
// polynomial j(K) = sum_l b_l (K-1)^l.
struct LemmaF {
  BigRational F1, F0, Fm1;
  // Sign of Pol_{j(K)}(K) for large K, read off the first nonzero coefficient.
  std::optional<Sign> eventual_sign;  // empty when F1 = F0 = F-1 = 0
};
LemmaF lemma_f_coefficients(int n, const Polynomial& j_in_K_minus_1);

// Rational constant T'_n with P_m(K) >= (K-1) + T'_n for K >= 2.
BigRational t_prime(int n);

// Average of lambda_k - C_W k^(2/n) over the K-chain.
Real chain_average(const Manifold& m, long K, const RealCtx& ctx);
// Exact value when n = 2 (C_W and k^(2/n) are rational); empty otherwise.
std::optional<BigRational> chain_average_exact(const Manifold& m, long K);

// (1/k) sum_{j<=k} (lambda_j - C_W j^(2/n)) on the hemisphere.
Real total_average(int n, const BigInt& k, const RealCtx& ctx);
std::optional<BigRational> total_average_exact(int n, const BigInt& k);

struct AveragePeak {
  long K = 0;
  BigInt k;
  Real value;
};
// Largest total average attained inside the K-chain.
AveragePeak total_average_chain_peak(int n, long K, const RealCtx& ctx);

enum class PolyaMode { lowest_order, chain_average };

struct MinKResult {
  bool determined = false;
  long K = 0;
  long bound = 0;
  std::vector<long> failing;  // failing K in [2, bound]
};
MinKResult min_polya_chain_K(int n, PolyaMode mode, long bound, const RealCtx& ctx);

// Within-chain profile of the S^2 total average.
BigRational phi_kr(long K, long r);

}  // namespace polya
