#pragma once

#include "polya/bigrational.hpp"
#include "polya/real.hpp"

namespace polya {

// sum_{k=a}^{b} k^(num/den) for 0 <= a, empty when b < a. Short ranges are
// summed directly; long ranges use Euler-Maclaurin with exact Bernoulli
// numbers, truncated once terms fall below the context precision.
// Exact (as an integer sum) when num/den == 1.
Real power_sum(const BigInt& a, const BigInt& b, long num, long den, const RealCtx& ctx);

}  // namespace polya
