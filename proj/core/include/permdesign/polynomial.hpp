#pragma once

#include "permdesign/rational.hpp"

#include <string>
#include <vector>

namespace permdesign {

/// Dense integer-coefficient polynomial. Coefficients are stored low-to-high
/// with no trailing zeros; the zero polynomial is the empty sequence.
class IntPolynomial {
public:
  IntPolynomial() = default; // zero polynomial
  explicit IntPolynomial(std::vector<Int> coefficients);

  static IntPolynomial constant(Int c);
  static IntPolynomial monomial(Int c, int power);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  const std::vector<Int>& coefficients() const { return coeffs_; }

  /// Zero beyond the degree.
  Int coefficient(int power) const;

  /// Horner evaluation over exact integers.
  Int operator()(const Int& x) const;

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const Int& scalar) const;

  /// p(inner(x)), expanded.
  IntPolynomial substitute(const IntPolynomial& inner) const;

  bool operator==(const IntPolynomial&) const = default;

  /// Human form, highest power first: "x^2 - 3x + 1", "-x + 3", "0".
  std::string to_string() const;

private:
  std::vector<Int> coeffs_;

  void strip();
};

} // namespace permdesign
