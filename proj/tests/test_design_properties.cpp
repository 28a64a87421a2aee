#include "permdesign/constructions.hpp"
#include "permdesign/design.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace permdesign;

namespace {

PermSet translate_left(const Permutation& g, const PermSet& set) {
  std::vector<Permutation> members;
  members.reserve(static_cast<std::size_t>(set.size()));
  for (const auto& sigma : set.elements())
    members.push_back(g.compose(sigma));
  return PermSet(set.degree(), std::move(members));
}

PermSet translate_right(const PermSet& set, const Permutation& g) {
  std::vector<Permutation> members;
  members.reserve(static_cast<std::size_t>(set.size()));
  for (const auto& sigma : set.elements())
    members.push_back(sigma.compose(g));
  return PermSet(set.degree(), std::move(members));
}

} // namespace

TEST_CASE("all applicable criteria agree on random subsets") {
  std::mt19937_64 rng(41);
  for (int n = 4; n <= 7; ++n) {
    for (int trial = 0; trial < 12; ++trial) {
      int size =
          1 + static_cast<int>(rng() % std::min<std::uint64_t>(30, 20 + n));
      PermSet set = testutil::random_subset(rng, n, size);
      for (int t = 1; t <= n / 2; ++t) {
        bool by_moments = is_t_design_moments(set, t);
        CHECK(is_t_design_dual(set, t) == by_moments);
        CHECK(is_t_design_tcrit(set, t) == by_moments);
      }
    }
  }
}

TEST_CASE("frequencies are translation invariant") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 4 + static_cast<int>(rng() % 3);
    PermSet set = testutil::random_subset(rng, n, 1 + static_cast<int>(rng() % 12));
    Permutation g = testutil::random_permutation(rng, n);
    FrequencyVector base = frequencies(set);
    CHECK(frequencies(translate_left(g, set)) == base);
    CHECK(frequencies(translate_right(set, g)) == base);
  }
}

TEST_CASE("a t-design is an s-design for every s below t") {
  PermSet examples[] = {affine_group(5), affine_group(7), pgl2(4),
                        twisted_affine_9()};
  for (const auto& set : examples) {
    int top = 0;
    for (int t = 1; t <= set.degree(); ++t) {
      if (!is_t_design_moments(set, t))
        break;
      top = t;
    }
    CHECK(top >= 1);
    for (int s = 1; s <= top; ++s)
      CHECK(is_t_design_moments(set, s));
  }
}

TEST_CASE("t-transitive sets in the corpus are t-designs") {
  struct Case {
    PermSet set;
    int t;
  };
  Case cases[] = {
      {cyclic_group(5), 1},     {cyclic_group(8), 1},
      {nongroup_latin5(), 1},   {affine_group(4), 2},
      {affine_group(9), 2},     {twisted_affine_9(), 2},
      {pgl2(3), 3},             {pgl2(4), 3},
  };
  for (const auto& c : cases) {
    CHECK(is_t_transitive(c.set, c.t).transitive);
    CHECK(is_t_design_moments(c.set, c.t));
  }
}

TEST_CASE("subgroups that are designs are transitive to the same strength") {
  std::mt19937_64 rng(47);
  for (int n = 4; n <= 6; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      PermSet generators(
          n, {testutil::random_permutation(rng, n),
              testutil::random_permutation(rng, n)});
      PermSet group = group_closure(generators);
      for (int t = 1; t <= n; ++t)
        if (is_t_design_moments(group, t))
          CHECK(is_t_transitive(group, t).transitive);
    }
  }
}

TEST_CASE("verified designs respect the size bound") {
  struct Case {
    PermSet set;
    int t;
  };
  Case cases[] = {
      {cyclic_group(4), 1},   {nongroup_latin5(), 1}, {affine_group(5), 2},
      {affine_group(8), 2},   {twisted_affine_9(), 2}, {pgl2(4), 3},
      {pgl2(5), 3},
  };
  for (const auto& c : cases) {
    REQUIRE(is_t_design_moments(c.set, c.t));
    const int n = c.set.degree();
    Int bound = design_bound(n, c.t);
    CHECK(Int(c.set.size()) >= bound);
    if (Int(c.set.size()) == bound) {
      // equality forces the head of the distribution to vanish
      FrequencyVector freq = frequencies(c.set);
      for (int i = 1; i <= n - c.t; ++i)
        CHECK(freq.f[static_cast<std::size_t>(i)] == 0);
    }
  }
}

TEST_CASE("2-designs satisfy the quadratic-mean inequality") {
  // f_0 (1 + (n-1)^2) <= 1 for every 2-design
  PermSet examples[] = {affine_group(4), affine_group(5), affine_group(7),
                        affine_group(8), affine_group(9), twisted_affine_9(),
                        pgl2(5)};
  for (const auto& set : examples) {
    REQUIRE(is_t_design_moments(set, 2));
    const int n = set.degree();
    Rational f0 = frequencies(set).f[0];
    CHECK(f0 * Rational(Int(n - 1) * (n - 1) + 1) <= 1);
  }
}

TEST_CASE("group frequencies match the fixed-point profile") {
  // for a group, the pair histogram collapses to single-element counts:
  // f_i = |{g : F(g) = n-i}| / |D|
  PermSet groups[] = {affine_group(7), cyclic_group(6), pgl2(3)};
  for (const auto& group : groups) {
    REQUIRE(is_group(group));
    const int n = group.degree();
    std::vector<Int> by_fixed(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& sigma : group.elements())
      ++by_fixed[static_cast<std::size_t>(sigma.fixed_points())];
    FrequencyVector freq = frequencies(group);
    for (int i = 0; i <= n; ++i)
      CHECK(freq.f[static_cast<std::size_t>(i)] ==
            make_rational(by_fixed[static_cast<std::size_t>(n - i)],
                          group.size()));
  }
}
