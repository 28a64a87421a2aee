#include "permdesign/charlier.hpp"

#include "permdesign/combinatorics.hpp"
#include "permdesign/errors.hpp"

namespace permdesign {

namespace {

// x (x-1) ... (x-m+1) as a polynomial; m = 0 gives 1.
IntPolynomial falling_factorial_poly(int m) {
  IntPolynomial out = IntPolynomial::constant(1);
  for (int i = 0; i < m; ++i)
    out = out * IntPolynomial(std::vector<Int>{-i, 1});
  return out;
}

} // namespace

IntPolynomial charlier(int k) {
  if (k < 0)
    throw error("charlier index must be nonnegative");
  Int sign = (k % 2 == 0) ? 1 : -1;
  IntPolynomial out = IntPolynomial::constant(sign);
  for (int i = 1; i <= k; ++i) {
    Int coeff = binomial(k, i);
    if ((k - i) % 2 != 0)
      coeff = -coeff;
    out = out + falling_factorial_poly(i) * coeff;
  }
  return out;
}

IntPolynomial reversed_charlier(int k, int n) {
  if (n < 0)
    throw error("reversed charlier with negative degree");
  return charlier(k).substitute(IntPolynomial(std::vector<Int>{n, -1}));
}

Rational inner_product_space(const IntPolynomial& f, const IntPolynomial& g,
                             int n) {
  if (n < 0)
    throw error("inner product with negative degree");
  RencontresTable table = rencontres(n);
  Int sum = 0;
  for (int k = 0; k <= n; ++k)
    sum += table.w[static_cast<std::size_t>(n - k)] * f(k) * g(k);
  return make_rational(sum, factorial(n));
}

Rational inner_product_tarnanen(const IntPolynomial& f, const IntPolynomial& g,
                                int n) {
  if (n < 0)
    throw error("inner product with negative degree");
  RencontresTable table = rencontres(n);
  Int sum = 0;
  for (int k = 0; k <= n; ++k)
    sum += table.w[static_cast<std::size_t>(k)] * f(k) * g(k);
  return make_rational(sum, factorial(n));
}

bool charlier_genfunc_check(int k_max, int n_eval) {
  if (k_max < 0)
    throw error("genfunc check with negative order");
  if (n_eval < 0)
    n_eval = 0;
  for (int k = 0; k <= k_max; ++k) {
    // t^k coefficient of e^t (1-t)^x:
    //   sum_{m=0..k} (-1)^m / ((k-m)! m!) * x(x-1)...(x-m+1)
    std::vector<Rational> series; // polynomial in x, low-to-high
    for (int m = 0; m <= k; ++m) {
      IntPolynomial ff = falling_factorial_poly(m);
      Rational scale = make_rational((m % 2 == 0) ? 1 : -1,
                                     factorial(k - m) * factorial(m));
      if (series.size() < ff.coefficients().size())
        series.resize(ff.coefficients().size());
      for (std::size_t j = 0; j < ff.coefficients().size(); ++j)
        series[j] += scale * Rational(ff.coefficients()[j]);
    }

    // k! * coefficient must equal (-1)^k charlier(k), coefficient by
    // coefficient.
    IntPolynomial target = charlier(k);
    Int k_fact = factorial(k);
    Int sign = (k % 2 == 0) ? 1 : -1;
    std::size_t width =
        std::max(series.size(), target.coefficients().size());
    for (std::size_t j = 0; j < width; ++j) {
      Rational lhs = (j < series.size() ? series[j] : Rational(0)) * k_fact;
      Rational rhs(sign * target.coefficient(static_cast<int>(j)));
      if (lhs != rhs)
        return false;
    }

    // Redundant point-evaluation cross-check.
    for (int x = 0; x <= n_eval; ++x) {
      Rational lhs = 0;
      Int x_power = 1;
      for (std::size_t j = 0; j < series.size(); ++j) {
        lhs += series[j] * x_power;
        x_power *= x;
      }
      lhs *= k_fact;
      if (lhs != Rational(sign * target(x)))
        return false;
    }
  }
  return true;
}

OrthogonalityReport verify_orthogonality(int n) {
  if (n < 0)
    throw error("orthogonality check with negative degree");
  OrthogonalityReport report;
  report.n = n;
  int half = n / 2;
  std::vector<IntPolynomial> reversed;
  reversed.reserve(static_cast<std::size_t>(half) + 1);
  for (int k = 0; k <= half; ++k)
    reversed.push_back(reversed_charlier(k, n));

  report.all_pass = true;
  for (int r = 0; r <= half; ++r) {
    for (int s = 0; s <= half; ++s) {
      OrthogonalityEntry entry;
      entry.r = r;
      entry.s = s;
      entry.value = inner_product_space(reversed[static_cast<std::size_t>(r)],
                                        reversed[static_cast<std::size_t>(s)],
                                        n);
      entry.expected = (r == s) ? Rational(factorial(r)) : Rational(0);
      entry.pass = entry.value == entry.expected;
      report.all_pass = report.all_pass && entry.pass;
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

} // namespace permdesign
