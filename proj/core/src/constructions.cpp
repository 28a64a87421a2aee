#include "permdesign/constructions.hpp"

#include "permdesign/errors.hpp"
#include "permdesign/finite_field.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <string>
#include <unordered_set>

namespace permdesign {

namespace {

void reject_duplicates(const std::vector<Permutation>& elements,
                       const std::string& family) {
  std::set<Permutation> seen;
  for (const auto& sigma : elements)
    if (!seen.insert(sigma).second)
      throw error(family + ": duplicate map " + format_one_line(sigma));
}

} // namespace

PermSet cyclic_group(int n) {
  if (n < 1)
    throw error("cyclic group needs n >= 1");
  std::vector<Permutation> elements;
  elements.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int x = 1; x <= n; ++x)
      images[static_cast<std::size_t>(x - 1)] = (x - 1 + k) % n + 1;
    elements.emplace_back(std::move(images));
  }
  return PermSet(n, std::move(elements));
}

PermSet nongroup_latin5() {
  const char* rows[] = {"12345", "24153", "35421", "41532", "53214"};
  std::vector<Permutation> elements;
  for (const char* row : rows)
    elements.push_back(parse_one_line(row, 5));
  return PermSet(5, std::move(elements));
}

PermSet from_latin_square(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 1)
    throw error("latin square must have at least one row");
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != n)
      throw error("latin square rows must have length " + std::to_string(n));

  for (int c = 0; c < n; ++c) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int r = 0; r < n; ++r) {
      int value = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (value < 1 || value > n)
        throw error("latin square entry " + std::to_string(value) +
                    " out of range");
      if (seen[static_cast<std::size_t>(value - 1)])
        throw error("column " + std::to_string(c + 1) +
                    " repeats symbol " + std::to_string(value));
      seen[static_cast<std::size_t>(value - 1)] = true;
    }
  }

  std::vector<Permutation> elements;
  elements.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    try {
      elements.emplace_back(rows[r]);
    } catch (const error& e) {
      throw error("row " + std::to_string(r + 1) +
                  " is not a permutation: " + e.what());
    }
  }
  return PermSet(n, std::move(elements));
}

std::vector<std::vector<int>> to_latin_square(const PermSet& set) {
  const int n = set.degree();
  if (set.size() != n)
    throw error("latin square conversion needs exactly n permutations");
  const auto& elements = set.elements();
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      if (distance(elements[i], elements[j]) != n)
        throw error("latin square conversion needs pairwise distance n");
  std::vector<std::vector<int>> rows;
  rows.reserve(elements.size());
  for (const auto& sigma : elements)
    rows.push_back(sigma.images());
  return rows;
}

PermSet affine_group(int q) {
  FiniteField field(q);
  std::vector<Permutation> elements;
  elements.reserve(static_cast<std::size_t>(q) * (q - 1));
  for (int a = 1; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      std::vector<int> images(static_cast<std::size_t>(q));
      for (int x = 0; x < q; ++x)
        images[static_cast<std::size_t>(x)] =
            field.add(field.mul(a, x), b) + 1;
      elements.emplace_back(std::move(images));
    }
  }
  reject_duplicates(elements, "affine group");
  return PermSet(q, std::move(elements));
}

PermSet twisted_affine_9() {
  FiniteField field(9);
  std::vector<Permutation> elements;
  elements.reserve(72);
  for (int a = 1; a < 9; ++a) {
    for (int b = 0; b < 9; ++b) {
      std::vector<int> images(9);
      for (int x = 0; x < 9; ++x)
        images[static_cast<std::size_t>(x)] =
            field.add(field.mul(a, field.pow(x, 3)), b) + 1;
      elements.emplace_back(std::move(images));
    }
  }
  reject_duplicates(elements, "twisted affine maps");
  return PermSet(9, std::move(elements));
}

PermSet pgl2(int q) {
  FiniteField field(q);
  const int n = q + 1;
  const int infinity = q; // 0-based index of the extra projective point

  // One matrix (a,b,c,d) per map: c = 1, or c = 0 with d = 1.
  std::vector<std::array<int, 4>> reps;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int d = 0; d < q; ++d)
        if (field.sub(field.mul(a, d), b) != 0)
          reps.push_back({a, b, 1, d});
  for (int a = 1; a < q; ++a)
    for (int b = 0; b < q; ++b)
      reps.push_back({a, b, 0, 1});

  std::vector<Permutation> elements;
  elements.reserve(reps.size());
  for (const auto& [a, b, c, d] : reps) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int x = 0; x < q; ++x) {
      int denom = field.add(field.mul(c, x), d);
      if (denom == 0) {
        images[static_cast<std::size_t>(x)] = infinity + 1;
      } else {
        int numer = field.add(field.mul(a, x), b);
        images[static_cast<std::size_t>(x)] =
            field.mul(numer, field.inv(denom)) + 1;
      }
    }
    images[static_cast<std::size_t>(infinity)] =
        (c == 0) ? infinity + 1 : field.mul(a, field.inv(c)) + 1;
    elements.emplace_back(std::move(images));
  }
  reject_duplicates(elements, "fractional-linear maps");
  return PermSet(n, std::move(elements));
}

PermSet group_closure(const PermSet& generators, std::uint64_t size_cap) {
  std::unordered_set<Permutation> known(generators.begin(), generators.end());
  std::deque<Permutation> frontier(generators.begin(), generators.end());
  while (!frontier.empty()) {
    Permutation word = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& gen : generators.elements()) {
      Permutation next = word.compose(gen);
      if (known.insert(next).second) {
        if (known.size() > size_cap)
          throw error("group closure exceeded cap of " +
                      std::to_string(size_cap) + " elements");
        frontier.push_back(std::move(next));
      }
    }
  }
  return PermSet(generators.degree(),
                 std::vector<Permutation>(known.begin(), known.end()));
}

} // namespace permdesign
