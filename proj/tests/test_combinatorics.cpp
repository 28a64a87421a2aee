#include "permdesign/combinatorics.hpp"

#include "permdesign/errors.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace permdesign;

namespace {

// brute-force rencontres numbers by scanning all of S_n
std::vector<Int> rencontres_brute_force(int n) {
  std::vector<Int> w(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& sigma : testutil::symmetric_group(n))
    ++w[static_cast<std::size_t>(sigma.fixed_points())];
  return w;
}

} // namespace

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == Int("2432902008176640000"));
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(40, 20) == Int("137846528820"));
  CHECK_THROWS_AS(factorial(-1), error);
  CHECK_THROWS_AS(binomial(-1, 0), error);
  CHECK_THROWS_AS(binomial(3, 4), error);
}

TEST_CASE("derangements against brute force") {
  CHECK(derangements(0) == 1);
  CHECK(derangements(1) == 0);
  CHECK(derangements(4) == 9);
  for (int m = 1; m <= 7; ++m) {
    Int count = 0;
    for (const auto& sigma : testutil::symmetric_group(m))
      if (sigma.fixed_points() == 0)
        ++count;
    CHECK(derangements(m) == count);
  }
  CHECK_THROWS_AS(derangements(-2), error);
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(Int(5), 0) == 1);
  CHECK(falling_factorial(Int(5), 2) == 20);
  CHECK(falling_factorial(Int(10), 2) == 90);
  CHECK(falling_factorial(Int(6), 3) == 120);
  CHECK(falling_factorial(Int(4), 4) == 24);
}

TEST_CASE("rencontres table") {
  RencontresTable four = rencontres(4);
  CHECK(four.w == std::vector<Int>{9, 8, 6, 0, 1});
  CHECK(rencontres(1).w == std::vector<Int>{0, 1});

  Int total = 0;
  for (const auto& w : rencontres(6).w)
    total += w;
  CHECK(total == 720);

  for (int n = 1; n <= 7; ++n)
    CHECK(rencontres(n).w == rencontres_brute_force(n));
}

TEST_CASE("rencontres table invariants") {
  for (int n = 1; n <= 12; ++n) {
    RencontresTable table = rencontres(n);
    Int sum = 0;
    Int weighted = 0;
    for (int k = 0; k <= n; ++k) {
      sum += table.w[static_cast<std::size_t>(k)];
      weighted += k * table.w[static_cast<std::size_t>(k)];
    }
    CHECK(sum == factorial(n));
    CHECK(weighted == factorial(n)); // one fixed point on average
    CHECK(table.w[static_cast<std::size_t>(n - 1)] == 0);
  }
}

TEST_CASE("generating-function route agrees with the closed form") {
  for (int n = 0; n <= 20; ++n)
    CHECK(rencontres_genfunc(n) == rencontres(n));
}

TEST_CASE("valencies") {
  RencontresTable four = rencontres(4);
  CHECK(valency(four, 4) == 9);
  CHECK(valency(four, 0) == 1);
  CHECK(valency(four, 1) == 0);
  CHECK_THROWS_AS(valency(four, 5), error);
  CHECK_THROWS_AS(valency(four, -1), error);
}

TEST_CASE("rational serialization") {
  CHECK(to_string(Rational(3, 4)) == "3/4");
  CHECK(to_string(make_rational(2, 4)) == "1/2");
  CHECK(to_string(make_rational(1, -20)) == "-1/20");
  CHECK(to_string(Rational(5)) == "5/1");
  CHECK(parse_rational("5") == Rational(5));
  CHECK(parse_rational("5/1") == Rational(5));
  CHECK(parse_rational("-1/20") == make_rational(-1, 20));
  CHECK(parse_rational(" 3/4 ") == Rational(3, 4));
  CHECK_THROWS_AS(parse_rational("x"), error);
  CHECK_THROWS_AS(make_rational(1, 0), error);
}
