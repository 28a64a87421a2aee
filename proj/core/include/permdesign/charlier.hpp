#pragma once

#include "permdesign/polynomial.hpp"
#include "permdesign/rational.hpp"

#include <vector>

namespace permdesign {

/// Monic unit-parameter Charlier variant,
///   c_k(x) = (-1)^k + sum_{i=1..k} (-1)^{k-i} C(k,i) x(x-1)...(x-i+1),
/// so c_1 = x - 1 and c_2 = x^2 - 3x + 1. The classical family with
/// generating function e^t (1-t)^x is (-1)^k c_k(x).
IntPolynomial charlier(int k);

/// c_k(n - x). Orthogonal under the valency weights of the fixed-point
/// metric for k <= n/2; degree k with leading coefficient (-1)^k.
IntPolynomial reversed_charlier(int k, int n);

/// <f,g>_n = (1/n!) sum_{k=0..n} w_{n-k} f(k) g(k)  (valency weights).
Rational inner_product_space(const IntPolynomial& f, const IntPolynomial& g,
                             int n);

/// (f,g)_n = (1/n!) sum_{k=0..n} w_k f(k) g(k). Related to the valency-weight
/// product by the change of variable x -> n-x:
/// (f,g)_n = <f(n-x), g(n-x)>_n.
Rational inner_product_tarnanen(const IntPolynomial& f, const IntPolynomial& g,
                                int n);

/// Expands e^t (1-t)^x formally in t to order k_max with exact rational
/// polynomial coefficients in x, and checks that k! times the t^k coefficient
/// equals (-1)^k charlier(k) for every k <= k_max. The same identity is also
/// spot-checked by evaluation at x = 0..n_eval.
bool charlier_genfunc_check(int k_max, int n_eval);

struct OrthogonalityEntry {
  int r = 0;
  int s = 0;
  Rational value;
  Rational expected; // r! when r == s, else 0
  bool pass = false;
};

struct OrthogonalityReport {
  int n = 0;
  std::vector<OrthogonalityEntry> entries; // all pairs r,s <= floor(n/2)
  bool all_pass = false;
};

/// Evaluates <reversed_charlier(r,n), reversed_charlier(s,n)>_n exactly for
/// every r,s <= floor(n/2) against r! * delta_{rs}. Outside that range the
/// relation is not guaranteed and is not reported.
OrthogonalityReport verify_orthogonality(int n);

} // namespace permdesign
