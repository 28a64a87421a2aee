#include "permdesign/permutation.hpp"

#include "permdesign/errors.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <random>

using namespace permdesign;

TEST_CASE("identity") {
  CHECK(Permutation::identity(3).images() == std::vector<int>{1, 2, 3});
  CHECK(Permutation::identity(5).fixed_points() == 5);
  CHECK(distance(Permutation::identity(4), Permutation::identity(4)) == 0);
  CHECK_THROWS_AS(Permutation::identity(0), error);
}

TEST_CASE("composition applies the right factor first") {
  Permutation sigma = parse_one_line("24153", 5);
  Permutation tau = parse_one_line("35421", 5);
  CHECK(sigma.compose(tau) == parse_one_line("13542", 5));

  Permutation id = Permutation::identity(5);
  CHECK(sigma.compose(id) == sigma);
  CHECK(sigma.compose(sigma.inverse()) == id);
  CHECK_THROWS_AS(sigma.compose(Permutation::identity(4)), error);
}

TEST_CASE("inverse") {
  CHECK(parse_one_line("35421", 5).inverse() == parse_one_line("54132", 5));
  CHECK(Permutation::identity(6).inverse() == Permutation::identity(6));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Permutation sigma = testutil::random_permutation(rng, 7);
    CHECK(sigma.inverse().inverse() == sigma);
    CHECK(sigma.compose(sigma.inverse()) == Permutation::identity(7));
  }
}

TEST_CASE("fixed points by direct scan") {
  // 13542 fixes 1 and 4
  CHECK(parse_one_line("13542", 5).fixed_points() == 2);
  CHECK(Permutation::identity(7).fixed_points() == 7);
  CHECK(parse_one_line("21", 2).fixed_points() == 0);
}

TEST_CASE("no permutation fixes exactly n-1 points") {
  for (const auto& sigma : testutil::symmetric_group(5))
    CHECK(sigma.fixed_points() != 4);
}

TEST_CASE("distance") {
  Permutation sigma = parse_one_line("24153", 5);
  Permutation tau = parse_one_line("35421", 5);
  CHECK(distance(sigma, tau) == 5);
  CHECK(distance(sigma, sigma) == 0);
  CHECK_THROWS_AS(distance(sigma, Permutation::identity(4)), error);

  // the definition route: n - F(sigma tau^-1)
  CHECK(sigma.compose(tau.inverse()) == parse_one_line("35214", 5));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Permutation a = testutil::random_permutation(rng, 6);
    Permutation b = testutil::random_permutation(rng, 6);
    CHECK(distance(a, b) == 6 - a.compose(b.inverse()).fixed_points());
  }
}

TEST_CASE("distance is a bi-invariant metric") {
  auto s4 = testutil::symmetric_group(4);
  for (const auto& a : s4) {
    for (const auto& b : s4) {
      int d = distance(a, b);
      CHECK(d == distance(b, a));
      CHECK((d == 0) == (a == b));
      if (a != b)
        CHECK(d >= 2); // distance 1 is impossible
      for (const auto& c : s4)
        CHECK(distance(a, c) <= d + distance(b, c));
    }
  }

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    Permutation sigma = testutil::random_permutation(rng, 6);
    Permutation tau = testutil::random_permutation(rng, 6);
    Permutation g = testutil::random_permutation(rng, 6);
    Permutation h = testutil::random_permutation(rng, 6);
    int d = distance(sigma, tau);
    CHECK(distance(g.compose(sigma), g.compose(tau)) == d);
    CHECK(distance(sigma.compose(h), tau.compose(h)) == d);
    CHECK(distance(g.compose(sigma).compose(h), g.compose(tau).compose(h)) ==
          d);
  }
}

TEST_CASE("one-line parsing") {
  CHECK(parse_one_line("24153", 5).images() == std::vector<int>{2, 4, 1, 5, 3});
  CHECK(parse_one_line("3 1 2", 3).images() == std::vector<int>{3, 1, 2});
  CHECK(parse_one_line("2,4,1,5,3", 5) == parse_one_line("24153", 5));

  CHECK_THROWS_WITH_AS(parse_one_line("1 1 2", 3), doctest::Contains("duplicate"),
                       error);
  CHECK_THROWS_WITH_AS(parse_one_line("0 1 2", 3),
                       doctest::Contains("out of range"), error);
  CHECK_THROWS_WITH_AS(parse_one_line("1 2", 3), doctest::Contains("expected 3"),
                       error);
  // unseparated digits are only for n <= 9
  CHECK_THROWS_AS(parse_one_line("123456789a", 10), error);
}

TEST_CASE("format round-trips") {
  std::mt19937_64 rng(17);
  for (int n : {1, 2, 5, 11}) {
    for (int trial = 0; trial < 10; ++trial) {
      Permutation sigma = testutil::random_permutation(rng, n);
      CHECK(parse_one_line(format_one_line(sigma), n) == sigma);
    }
  }
}

TEST_CASE("ordering is lexicographic on images") {
  CHECK(parse_one_line("123", 3) < parse_one_line("132", 3));
  CHECK(parse_one_line("213", 3) < parse_one_line("231", 3));
}
