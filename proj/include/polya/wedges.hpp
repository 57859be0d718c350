#pragma once

#include "polya/bounds.hpp"

#include <optional>
#include <vector>

namespace polya {

// Lower bound (p k n!)^(2/n) - (n-1)(n-2)/6 for the k-th Dirichlet eigenvalue
// of the wedge W^n_{pi/p}. The verdict is only filled in for p = 1, where the
// wedge is the hemisphere and its spectrum is known.
BoundReport wedge_lower_bound(int n, int p, const BigInt& k, const RealCtx& ctx);

struct OneTermWedge {
  BoundReport report;
  // n (p k)^(2/n) when it is an integer, i.e. n even and p k a perfect (n/2)-th power.
  std::optional<BigInt> exact_value;
};
// n p^(2/n) k^(2/n).
OneTermWedge wedge_one_term_bound(int n, int p, const BigInt& k, const RealCtx& ctx);

struct TransferRow {
  BigInt k;
  BigInt pk;
  BigInt lambda_pk;  // lambda_{pk} on the hemisphere
  Real floor;        // (p k n!)^(2/n) - c(n)
  Real margin;       // lambda_{pk} - floor
  bool holds = false;
  bool is_equality = false;
  bool exact = false;
};
// lambda_{pk}(S^n_+) >= (p k n!)^(2/n) - c(n) for k = 1..k_max; for p = 1 this is
// the transfer identity against the hemisphere itself.
std::vector<TransferRow> tiling_transfer_check(int n, int p, long k_max, const RealCtx& ctx);

}  // namespace polya
