#include "permdesign/perm_set.hpp"

#include "permdesign/errors.hpp"

#include <algorithm>
#include <utility>

namespace permdesign {

PermSet::PermSet(int degree, std::vector<Permutation> elements)
    : degree_(degree), elements_(std::move(elements)) {
  if (degree_ < 1)
    throw error("permutation set degree must be at least 1");
  if (elements_.empty())
    throw error("nonempty permutation set required");
  for (const auto& sigma : elements_)
    if (sigma.degree() != degree_)
      throw error("degree mismatch: set has degree " + std::to_string(degree_) +
                  ", element has degree " + std::to_string(sigma.degree()));
  std::sort(elements_.begin(), elements_.end());
  auto dup = std::adjacent_find(elements_.begin(), elements_.end());
  if (dup != elements_.end())
    throw error("duplicate permutation '" + format_one_line(*dup) + "'");
}

bool PermSet::contains(const Permutation& sigma) const {
  return std::binary_search(elements_.begin(), elements_.end(), sigma);
}

} // namespace permdesign
