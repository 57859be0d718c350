#include "polya/symmetric.hpp"

#include <mutex>
#include <stdexcept>

namespace polya {

BigInt elementary_symmetric(const std::vector<BigInt>& values, int j) {
  if (j < 0 || j > static_cast<int>(values.size()))
    throw std::out_of_range("elementary_symmetric: j out of range");
  // e[i] holds sigma_i over the prefix processed so far.
  std::vector<BigInt> e(static_cast<size_t>(j) + 1, BigInt(0));
  e[0] = 1;
  for (const auto& v : values)
    for (int i = j; i >= 1; --i) e[static_cast<size_t>(i)] += v * e[static_cast<size_t>(i - 1)];
  return e[static_cast<size_t>(j)];
}

BigInt elementary_symmetric(const std::vector<long>& values, int j) {
  std::vector<BigInt> v(values.begin(), values.end());
  return elementary_symmetric(v, j);
}

BigInt s_constant(int j, long m) {
  if (m < 0) throw std::domain_error("s_constant: m must be nonnegative");
  BigInt M = m;
  switch (j) {
    case 1:
      return M * (M + 1) / 2;
    case 2:
      return (M - 1) * M * (M + 1) * (3 * M + 2) / 24;
    case 3:
      return (M - 2) * (M - 1) * M * M * (M + 1) * (M + 1) / 48;
    default:
      throw std::invalid_argument("s_constant: only j in {1,2,3} has a closed form");
  }
}

BigInt hat_s(int n, int l) {
  if (n < 1) throw std::domain_error("hat_s: n must be positive");
  if (l < 0 || l > n) return 0;
  if (l == 0) return 1;
  if (l == n) return factorial(static_cast<unsigned long>(n));
  std::vector<long> vals;
  for (long i = 1; i <= n - 1; ++i) vals.push_back(i);
  return elementary_symmetric(vals, l);
}

Polynomial rising_factorial_poly(int n) {
  if (n < 0) throw std::domain_error("rising_factorial_poly: n must be nonnegative");
  Polynomial p = Polynomial::constant(1);
  for (int i = 0; i < n; ++i) p *= Polynomial({BigRational(i), BigRational(1)});
  return p;
}

BigRational lambda_coefficient(int a, int n, int s) {
  if (a != 1 && a != 2) throw std::invalid_argument("lambda_coefficient: a must be 1 or 2");
  if (n < 2) throw std::invalid_argument("lambda_coefficient: n must be >= 2");
  if (s < 0) throw std::invalid_argument("lambda_coefficient: s must be >= 0");
  const BigRational alpha{BigInt(a), BigInt(n)};
  BigRational r(1);
  for (int i = 0; i < s; ++i) r *= (alpha - BigRational(i)) / BigRational(i + 1);
  return r;
}

std::vector<BigRational> bernoulli_numbers(int count) {
  // sum_{k=0}^{m} binom(m+1, k) B_k = 0 for m >= 1.
  std::vector<BigRational> b;
  if (count <= 0) return b;
  b.push_back(1);
  for (int m = 1; m < count; ++m) {
    BigRational acc;
    for (int k = 0; k < m; ++k) acc += BigRational(binomial(m + 1, k)) * b[static_cast<size_t>(k)];
    b.push_back(-acc / BigRational(m + 1));
  }
  return b;
}

}  // namespace polya
