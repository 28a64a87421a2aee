#pragma once

#include "permdesign/rational.hpp"

#include <vector>

namespace permdesign {

Int factorial(int n);

/// Requires 0 <= k <= n.
Int binomial(int n, int k);

/// Number of fixed-point-free permutations of m letters,
/// via D_m = m * D_{m-1} + (-1)^m with D_0 = 1.
Int derangements(int m);

/// x (x-1) ... (x-t+1); empty product (t = 0) is 1.
Int falling_factorial(const Int& x, int t);

/// w[k] counts the permutations of n letters with exactly k fixed points.
/// The table also carries the valencies of the fixed-point metric on the
/// symmetric group: v_i = w[n-i].
///
/// Invariants: sum_k w[k] = n!, w[n-1] = 0, sum_k k*w[k] = n!.
struct RencontresTable {
  int n = 0;
  std::vector<Int> w; // size n+1

  bool operator==(const RencontresTable&) const = default;
};

/// w[k] = C(n,k) * D_{n-k}.
RencontresTable rencontres(int n);

/// Same table by coefficient extraction from n! * sum_{j<=n} (u-1)^j / j!,
/// kept as an independent route for cross-checking.
RencontresTable rencontres_genfunc(int n);

/// v_i = w[n-i], 0 <= i <= n.
const Int& valency(const RencontresTable& table, int i);

} // namespace permdesign
