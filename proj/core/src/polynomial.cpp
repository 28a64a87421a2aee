#include "permdesign/polynomial.hpp"

#include "permdesign/errors.hpp"

#include <utility>

namespace permdesign {

IntPolynomial::IntPolynomial(std::vector<Int> coefficients)
    : coeffs_(std::move(coefficients)) {
  strip();
}

void IntPolynomial::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(Int c) {
  return IntPolynomial(std::vector<Int>{std::move(c)});
}

IntPolynomial IntPolynomial::monomial(Int c, int power) {
  if (power < 0)
    throw error("monomial power must be nonnegative");
  std::vector<Int> coeffs(static_cast<std::size_t>(power) + 1);
  coeffs.back() = std::move(c);
  return IntPolynomial(std::move(coeffs));
}

Int IntPolynomial::coefficient(int power) const {
  if (power < 0 || power >= static_cast<int>(coeffs_.size()))
    return 0;
  return coeffs_[static_cast<std::size_t>(power)];
}

Int IntPolynomial::operator()(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  std::vector<Int> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < coeffs_.size())
      out[i] += coeffs_[i];
    if (i < rhs.coeffs_.size())
      out[i] += rhs.coeffs_[i];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  std::vector<Int> out(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < coeffs_.size())
      out[i] += coeffs_[i];
    if (i < rhs.coeffs_.size())
      out[i] -= rhs.coeffs_[i];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero())
    return {};
  std::vector<Int> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const Int& scalar) const {
  std::vector<Int> out = coeffs_;
  for (auto& c : out)
    c *= scalar;
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::substitute(const IntPolynomial& inner) const {
  IntPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * inner + IntPolynomial::constant(*it);
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (is_zero())
    return "0";
  std::string out;
  for (int power = degree(); power >= 0; --power) {
    const Int& c = coeffs_[static_cast<std::size_t>(power)];
    if (c == 0)
      continue;
    bool negative = c < 0;
    Int mag = negative ? Int(-c) : c;
    if (out.empty()) {
      if (negative)
        out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1 || power == 0)
      out += mag.str();
    if (power >= 1) {
      out += "x";
      if (power >= 2)
        out += "^" + std::to_string(power);
    }
  }
  return out;
}

} // namespace permdesign
