#pragma once

#include "polya/bigrational.hpp"
#include "polya/polynomial.hpp"

#include <vector>

namespace polya {

// sigma_j(values); sigma_0 = 1. Throws std::out_of_range unless 0 <= j <= size.
BigInt elementary_symmetric(const std::vector<BigInt>& values, int j);
BigInt elementary_symmetric(const std::vector<long>& values, int j);

// s_j(m) = sigma_j(1, ..., m) in closed form for j in {1, 2, 3}.
BigInt s_constant(int j, long m);

// Coefficients of K(K+1)...(K+n-1) = sum_l hat_s(n, l) K^(n-l), with the
// extra convention hat_s(n, n) = n! (the shift that defines Upsilon).
// hat_s(n, 0) = 1; hat_s(n, l) = s_l(n-1) for 0 < l < n; zero beyond n.
BigInt hat_s(int n, int l);

// K^(n rising) expanded in K. n = 0 gives the constant 1.
Polynomial rising_factorial_poly(int n);

// Lambda_s(a) = binom(a/n, s), the s-th Taylor coefficient of (1+x)^(a/n).
BigRational lambda_coefficient(int a, int n, int s);

// Bernoulli numbers B_0..B_count-1 (B_1 = -1/2).
std::vector<BigRational> bernoulli_numbers(int count);

}  // namespace polya
