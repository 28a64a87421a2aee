#pragma once

#include <vector>

namespace permdesign {

/// GF(p^m) for prime powers q = p^m <= 256.
///
/// Elements are the indices 0..q-1 of the canonical enumeration: element i
/// has residue coefficients equal to the base-p digits of i, constant
/// coefficient first (i % p). Prime fields therefore enumerate 0,1,...,p-1
/// and GF(4) enumerates 0, 1, t, t+1. The 1-based position i+1 realizes the
/// bijection GF(q) <-> [1..q] used by the permutation constructions.
///
/// The modulus is the lexicographically first monic irreducible polynomial
/// of degree m over GF(p), coefficient vectors compared constant term first,
/// so the whole model is reproducible bit for bit.
class FiniteField {
public:
  static constexpr int max_order = 256;

  explicit FiniteField(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int m() const { return m_; }

  /// Coefficients low-to-high including the leading 1; length m+1.
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int mul(int a, int b) const;
  int neg(int a) const;
  int inv(int a) const; // throws on zero
  int pow(int a, long long e) const;

  /// Residue coefficient vector of an element, length m, constant term first.
  std::vector<int> coefficients(int a) const;

private:
  int q_ = 0;
  int p_ = 0;
  int m_ = 0;
  std::vector<int> modulus_;
  std::vector<int> add_table_;
  std::vector<int> mul_table_;
  std::vector<int> neg_table_;
  std::vector<int> inv_table_;

  int check(int a) const;
};

} // namespace permdesign
