#include "permdesign/combinatorics.hpp"

#include "permdesign/errors.hpp"
#include "permdesign/polynomial.hpp"

namespace permdesign {

Int factorial(int n) {
  if (n < 0)
    throw error("factorial of negative argument");
  Int out = 1;
  for (int i = 2; i <= n; ++i)
    out *= i;
  return out;
}

Int binomial(int n, int k) {
  if (n < 0 || k < 0)
    throw error("binomial with negative argument");
  if (k > n)
    throw error("binomial requires k <= n");
  if (k > n - k)
    k = n - k;
  Int out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i; // always exact: out is C(n-k+i, i) after this step
  }
  return out;
}

Int derangements(int m) {
  if (m < 0)
    throw error("derangements of negative argument");
  Int d = 1; // D_0
  for (int i = 1; i <= m; ++i) {
    d *= i;
    d += (i % 2 == 0) ? 1 : -1;
  }
  return d;
}

Int falling_factorial(const Int& x, int t) {
  if (t < 0)
    throw error("falling factorial with negative length");
  Int out = 1;
  for (int i = 0; i < t; ++i)
    out *= x - i;
  return out;
}

RencontresTable rencontres(int n) {
  if (n < 0)
    throw error("rencontres table for negative degree");
  RencontresTable table;
  table.n = n;
  table.w.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    table.w[static_cast<std::size_t>(k)] = binomial(n, k) * derangements(n - k);
  return table;
}

RencontresTable rencontres_genfunc(int n) {
  if (n < 0)
    throw error("rencontres table for negative degree");
  // n! * sum_j (u-1)^j / j!  =  sum_j (n!/j!) (u-1)^j, all integer.
  IntPolynomial u_minus_1(std::vector<Int>{-1, 1});
  IntPolynomial power = IntPolynomial::constant(1);
  IntPolynomial acc;
  Int n_fact = factorial(n);
  Int j_fact = 1;
  for (int j = 0; j <= n; ++j) {
    if (j > 0) {
      j_fact *= j;
      power = power * u_minus_1;
    }
    acc = acc + power * (n_fact / j_fact);
  }
  RencontresTable table;
  table.n = n;
  table.w.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k)
    table.w[static_cast<std::size_t>(k)] = acc.coefficient(k);
  return table;
}

const Int& valency(const RencontresTable& table, int i) {
  if (i < 0 || i > table.n)
    throw error("valency index out of range");
  return table.w[static_cast<std::size_t>(table.n - i)];
}

} // namespace permdesign
