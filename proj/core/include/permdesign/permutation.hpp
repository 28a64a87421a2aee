#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace permdesign {

/// A permutation of [1..n] in one-line notation: images()[x-1] is the image
/// of x. Immutable value type, ordered lexicographically on its images.
class Permutation {
public:
  static Permutation identity(int n);

  /// Validates that `images` is a bijection of [1..size].
  explicit Permutation(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }

  /// Image of x, x in [1..n].
  int operator()(int x) const;

  const std::vector<int>& images() const { return images_; }

  /// (sigma.compose(tau))(x) = sigma(tau(x)): the right factor acts first.
  Permutation compose(const Permutation& rhs) const;

  Permutation inverse() const;

  int fixed_points() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

private:
  Permutation() = default;

  std::vector<int> images_;
};

Permutation compose(const Permutation& sigma, const Permutation& tau);
Permutation inverse(const Permutation& sigma);
int fixed_points(const Permutation& sigma);

/// d(sigma, tau) = n - |{x : sigma(x) = tau(x)}|, which equals
/// n - fixed_points(sigma * tau^-1). Bi-invariant; the value 1 never occurs.
int distance(const Permutation& sigma, const Permutation& tau);

/// One-line input: n space- or comma-separated integers; for n <= 9 an
/// unseparated digit string like "24153" is also accepted.
Permutation parse_one_line(std::string_view text, int n);

/// Space-separated one-line form; parse_one_line(format_one_line(s), n) == s.
std::string format_one_line(const Permutation& sigma);

std::size_t hash_value(const Permutation& sigma);

} // namespace permdesign

template <>
struct std::hash<permdesign::Permutation> {
  std::size_t operator()(const permdesign::Permutation& sigma) const {
    return permdesign::hash_value(sigma);
  }
};
