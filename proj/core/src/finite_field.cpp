#include "permdesign/finite_field.hpp"

#include "permdesign/errors.hpp"

#include <string>

namespace permdesign {

namespace {

// Dense GF(p) polynomial helpers on plain int vectors (low-to-high).

void strip(std::vector<int>& poly) {
  while (!poly.empty() && poly.back() == 0)
    poly.pop_back();
}

// Remainder of a mod b over GF(p); b must be nonzero.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b,
                          int p) {
  strip(a);
  while (static_cast<int>(a.size()) >= static_cast<int>(b.size())) {
    int shift = static_cast<int>(a.size() - b.size());
    // b is monic in every use here, so the factor is just the lead of a
    int factor = a.back();
    for (std::size_t i = 0; i < b.size(); ++i) {
      int idx = shift + static_cast<int>(i);
      a[static_cast<std::size_t>(idx)] =
          ((a[static_cast<std::size_t>(idx)] - factor * b[i]) % p + p) % p;
    }
    strip(a);
  }
  return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b,
                          int p) {
  if (a.empty() || b.empty())
    return {};
  std::vector<int> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  strip(out);
  return out;
}

// Monic polynomial of degree d whose non-leading coefficients are the base-p
// digits of idx with the constant coefficient as the MOST significant digit,
// so increasing idx walks the candidates in lexicographic order (constant
// term compared first).
std::vector<int> monic_candidate(int idx, int d, int p) {
  std::vector<int> coeffs(static_cast<std::size_t>(d) + 1, 0);
  coeffs[static_cast<std::size_t>(d)] = 1;
  // a_{d-1} varies fastest so that increasing idx walks the candidates in
  // lexicographic order with the constant coefficient compared first
  for (int pos = d - 1; pos >= 0; --pos) {
    coeffs[static_cast<std::size_t>(pos)] = idx % p;
    idx /= p;
  }
  return coeffs;
}

bool is_irreducible(const std::vector<int>& candidate, int p) {
  int d = static_cast<int>(candidate.size()) - 1;
  // trial division by every monic polynomial of degree 1..d/2
  for (int e = 1; 2 * e <= d; ++e) {
    int count = 1;
    for (int i = 0; i < e; ++i)
      count *= p;
    for (int idx = 0; idx < count; ++idx) {
      std::vector<int> divisor(static_cast<std::size_t>(e) + 1, 0);
      divisor[static_cast<std::size_t>(e)] = 1;
      int rest = idx;
      for (int pos = 0; pos < e; ++pos) {
        divisor[static_cast<std::size_t>(pos)] = rest % p;
        rest /= p;
      }
      if (poly_mod(candidate, divisor, p).empty())
        return false;
    }
  }
  return true;
}

} // namespace

FiniteField::FiniteField(int q) : q_(q) {
  if (q < 2)
    throw error("field order must be at least 2");
  if (q > max_order)
    throw error("field order " + std::to_string(q) + " exceeds cap " +
                std::to_string(max_order));

  // factor q = p^m
  int p = 0;
  for (int candidate = 2; candidate * candidate <= q; ++candidate) {
    if (q % candidate == 0) {
      p = candidate;
      break;
    }
  }
  if (p == 0)
    p = q; // q itself is prime
  int rest = q;
  int m = 0;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1)
    throw error(std::to_string(q) + " is not a prime power");
  p_ = p;
  m_ = m;

  if (m_ == 1) {
    modulus_ = {0, 1}; // x
  } else {
    int count = 1;
    for (int i = 0; i < m_; ++i)
      count *= p_;
    for (int idx = 0; idx < count; ++idx) {
      std::vector<int> candidate = monic_candidate(idx, m_, p_);
      if (is_irreducible(candidate, p_)) {
        modulus_ = std::move(candidate);
        break;
      }
    }
    if (modulus_.empty())
      throw error("no irreducible modulus found"); // unreachable
  }

  // element index -> residue polynomial, multiply, reduce, map back
  auto to_poly = [this](int a) {
    std::vector<int> out;
    while (a > 0) {
      out.push_back(a % p_);
      a /= p_;
    }
    return out;
  };
  auto from_poly = [this](const std::vector<int>& poly) {
    int out = 0;
    for (std::size_t i = poly.size(); i-- > 0;)
      out = out * p_ + poly[i];
    return out;
  };

  add_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
  mul_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
  neg_table_.assign(static_cast<std::size_t>(q_), 0);
  inv_table_.assign(static_cast<std::size_t>(q_), -1);

  for (int a = 0; a < q_; ++a) {
    std::vector<int> pa = to_poly(a);
    for (int b = 0; b < q_; ++b) {
      std::vector<int> pb = to_poly(b);
      std::vector<int> sum(std::max(pa.size(), pb.size()), 0);
      for (std::size_t i = 0; i < sum.size(); ++i) {
        int v = 0;
        if (i < pa.size())
          v += pa[i];
        if (i < pb.size())
          v += pb[i];
        sum[i] = v % p_;
      }
      add_table_[static_cast<std::size_t>(a) * q_ + b] = from_poly(sum);
      std::vector<int> prod = poly_mod(poly_mul(pa, pb, p_), modulus_, p_);
      mul_table_[static_cast<std::size_t>(a) * q_ + b] = from_poly(prod);
    }
  }
  for (int a = 0; a < q_; ++a) {
    for (int b = 0; b < q_; ++b) {
      if (add_table_[static_cast<std::size_t>(a) * q_ + b] == 0)
        neg_table_[static_cast<std::size_t>(a)] = b;
      if (mul_table_[static_cast<std::size_t>(a) * q_ + b] == 1)
        inv_table_[static_cast<std::size_t>(a)] = b;
    }
  }
}

int FiniteField::check(int a) const {
  if (a < 0 || a >= q_)
    throw error("field element index out of range");
  return a;
}

int FiniteField::add(int a, int b) const {
  return add_table_[static_cast<std::size_t>(check(a)) * q_ + check(b)];
}

int FiniteField::sub(int a, int b) const { return add(a, neg(b)); }

int FiniteField::mul(int a, int b) const {
  return mul_table_[static_cast<std::size_t>(check(a)) * q_ + check(b)];
}

int FiniteField::neg(int a) const {
  return neg_table_[static_cast<std::size_t>(check(a))];
}

int FiniteField::inv(int a) const {
  if (check(a) == 0)
    throw error("inversion of zero");
  return inv_table_[static_cast<std::size_t>(a)];
}

int FiniteField::pow(int a, long long e) const {
  check(a);
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  int acc = 1;
  int base = a;
  while (e > 0) {
    if (e & 1)
      acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::vector<int> FiniteField::coefficients(int a) const {
  check(a);
  std::vector<int> out(static_cast<std::size_t>(m_), 0);
  for (int i = 0; i < m_; ++i) {
    out[static_cast<std::size_t>(i)] = a % p_;
    a /= p_;
  }
  return out;
}

} // namespace permdesign
