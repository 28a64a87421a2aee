#pragma once

#include "permdesign/permutation.hpp"

#include <vector>

namespace permdesign {

/// A nonempty set of distinct permutations of common degree. Elements are
/// kept sorted (lexicographically on one-line form) so serialization and
/// search results are canonical.
class PermSet {
public:
  PermSet(int degree, std::vector<Permutation> elements);

  int degree() const { return degree_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<Permutation>& elements() const { return elements_; }

  bool contains(const Permutation& sigma) const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool operator==(const PermSet&) const = default;
  auto operator<=>(const PermSet&) const = default;

private:
  int degree_;
  std::vector<Permutation> elements_;
};

} // namespace permdesign
