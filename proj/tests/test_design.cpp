#include "permdesign/design.hpp"

#include "permdesign/constructions.hpp"
#include "permdesign/errors.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace permdesign;

namespace {

PermSet whole_group(int n) {
  return PermSet(n, testutil::symmetric_group(n));
}

PermSet singleton(int n) {
  return PermSet(n, {Permutation::identity(n)});
}

} // namespace

TEST_CASE("frequencies of the worked examples") {
  FrequencyVector latin = frequencies(nongroup_latin5());
  CHECK(latin.f == std::vector<Rational>{Rational(1, 5), 0, 0, 0, 0,
                                         Rational(4, 5)});

  FrequencyVector point = frequencies(singleton(4));
  CHECK(point.f == std::vector<Rational>{1, 0, 0, 0, 0});

  FrequencyVector s3 = frequencies(whole_group(3));
  CHECK(s3.f == std::vector<Rational>{Rational(1, 6), 0, Rational(1, 2),
                                      Rational(1, 3)});
}

TEST_CASE("frequency invariants on random sets") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);
    int size = 1 + static_cast<int>(rng() % 15);
    PermSet set = testutil::random_subset(rng, n, size);
    FrequencyVector freq = frequencies(set);
    Rational total = 0;
    for (const auto& f : freq.f) {
      CHECK(f >= 0);
      total += f;
    }
    CHECK(total == 1);
    CHECK(freq.f[0] == make_rational(1, set.size()));
    CHECK(freq.f[1] == 0);
  }
}

TEST_CASE("frequencies are identical for every worker count") {
  PermSet affine = affine_group(8);
  FrequencyVector sequential = frequencies(affine, 1);
  CHECK(frequencies(affine, 2) == sequential);
  CHECK(frequencies(affine, 8) == sequential);
  CHECK(frequencies(affine, 31) == sequential);
}

TEST_CASE("space frequencies") {
  FrequencyVector three = space_frequencies(3);
  CHECK(three.f == std::vector<Rational>{Rational(1, 6), 0, Rational(1, 2),
                                         Rational(1, 3)});
  for (int n = 1; n <= 10; ++n) {
    FrequencyVector space = space_frequencies(n);
    Rational total = 0;
    for (const auto& f : space.f)
      total += f;
    CHECK(total == 1);
    CHECK(space.f[1] == 0);
    // the whole group realizes its own space distribution
    if (n <= 6)
      CHECK(frequencies(whole_group(n)) == space);
  }
}

TEST_CASE("space moments have closed forms") {
  for (int n = 2; n <= 12; ++n) {
    FrequencyVector space = space_frequencies(n);
    CHECK(moment(space, 1) == Rational(n - 1));
    CHECK(moment(space, 2) == Rational(Int(n - 1) * (n - 1) + 1));
  }
  CHECK(moment(frequencies(singleton(5)), 1) == 0);
  CHECK(moment(frequencies(singleton(5)), 3) == 0);
  CHECK_THROWS_AS(moment(space_frequencies(4), 0), error);
}

TEST_CASE("moment criterion") {
  CHECK(is_t_design_moments(nongroup_latin5(), 1));
  CHECK_FALSE(is_t_design_moments(nongroup_latin5(), 2));
  CHECK(is_t_design_moments(affine_group(5), 2));
  CHECK_FALSE(is_t_design_moments(singleton(4), 1));
  CHECK(is_t_design_moments(whole_group(4), 4));
  CHECK_THROWS_AS(is_t_design_moments(singleton(4), 0), error);
  CHECK_THROWS_AS(is_t_design_moments(singleton(4), 5), error);
}

TEST_CASE("dual frequencies") {
  for (int n = 2; n <= 9; ++n) {
    FrequencyVector space = space_frequencies(n);
    for (int k = 1; k <= n / 2; ++k)
      CHECK(dual_frequency(space, k) == 0);
  }
  CHECK(dual_frequency(frequencies(nongroup_latin5()), 1) == 0);
  CHECK(dual_frequency(frequencies(singleton(6)), 1) == 5);
  CHECK_THROWS_AS(dual_frequency(frequencies(singleton(6)), 4), error);
  CHECK_THROWS_AS(dual_frequency(frequencies(singleton(6)), 0), error);
}

TEST_CASE("dual criterion") {
  CHECK(is_t_design_dual(affine_group(5), 2));
  CHECK(is_t_design_dual(nongroup_latin5(), 1));
  CHECK_FALSE(is_t_design_dual(cyclic_group(6), 2));
  CHECK_THROWS_AS(is_t_design_dual(cyclic_group(6), 4), error);
}

TEST_CASE("reversed-charlier criterion") {
  CHECK(is_t_design_tcrit(affine_group(7), 2));
  CHECK_FALSE(is_t_design_tcrit(nongroup_latin5(), 2));
  CHECK(is_t_design_tcrit(whole_group(6), 3));
  CHECK_THROWS_AS(is_t_design_tcrit(nongroup_latin5(), 3), error); // n < 2t
}

TEST_CASE("transitivity counting") {
  Transitivity affine = is_t_transitive(affine_group(5), 2);
  CHECK(affine.transitive);
  CHECK(affine.sharp);

  Transitivity cyclic = is_t_transitive(cyclic_group(6), 1);
  CHECK(cyclic.transitive);
  CHECK(cyclic.sharp);
  CHECK_FALSE(is_t_transitive(cyclic_group(6), 2).transitive);

  Transitivity full = is_t_transitive(whole_group(4), 4);
  CHECK(full.transitive);
  CHECK(full.sharp);
  // S_4 on triples is transitive but not sharply
  Transitivity triples = is_t_transitive(whole_group(4), 3);
  CHECK(triples.transitive);
  CHECK_FALSE(triples.sharp);

  CHECK_THROWS_AS(is_t_transitive(whole_group(4), 0), error);
  CHECK_THROWS_AS(is_t_transitive(whole_group(4), 5), error);
}

TEST_CASE("group recognition") {
  CHECK(is_group(cyclic_group(7)));
  CHECK(is_group(whole_group(4)));
  CHECK_FALSE(is_group(nongroup_latin5()));
  CHECK_FALSE(is_group(twisted_affine_9()));
  CHECK(is_group(affine_group(8)));

  // the witness product lands outside the Latin-square set
  PermSet latin = nongroup_latin5();
  Permutation product =
      parse_one_line("24153", 5).compose(parse_one_line("35421", 5));
  CHECK(product == parse_one_line("13542", 5));
  CHECK_FALSE(latin.contains(product));
}

TEST_CASE("orbit counting") {
  CHECK(orbit_count(cyclic_group(5)) == 1);
  CHECK(orbit_count(PermSet(4, {Permutation::identity(4)})) == 4);
  PermSet transposition_group(
      3, {Permutation::identity(3), parse_one_line("213", 3)});
  CHECK(orbit_count(transposition_group) == 2);
  CHECK_THROWS_AS(orbit_count(nongroup_latin5()), error);
}

TEST_CASE("bounds") {
  CHECK(design_bound(10, 2) == 90);
  CHECK(design_bound(5, 1) == 5);
  CHECK(design_bound(5, 2) == 20);
  CHECK(design_bound(6, 3) == 120);
  CHECK(cor2_bound(5) == 17);
  CHECK(cor2_bound(10) == 82);
  for (int n = 3; n <= 12; ++n)
    CHECK(sm_bound_exceeds_cor2(n));
  CHECK_FALSE(sm_bound_exceeds_cor2(2)); // 2 = 2, not strict
  CHECK_THROWS_AS(design_bound(4, 5), error);
}

TEST_CASE("tuple-counting identities") {
  // n=4, t=2: 2*6 + 12*1 = 24
  CHECK(burnside_tuple_identity(4, 2));
  for (int n = 1; n <= 12; ++n)
    CHECK(burnside_tuple_identity(n, 1));
  CHECK(burnside_tuple_identity(12, 5));

  IntPolynomial p2 = tuple_count_polynomial(4, 2);
  CHECK(p2(0) == 12); // the design bound
  CHECK(p2(4) == 0);
  CHECK(p2.degree() == 2);
}

TEST_CASE("tight frequency profiles") {
  for (int n : {4, 5, 7, 9}) {
    std::vector<Rational> tail = tight_frequencies(n, 2);
    CHECK(tail == std::vector<Rational>{make_rational(n - 2, n - 1),
                                        make_rational(1, n)});
    // the remaining mass is exactly 1/(n(n-1))
    Rational mass = Rational(1) - tail[0] - tail[1];
    CHECK(mass == make_rational(1, Int(n) * (n - 1)));
  }
  CHECK(tight_frequencies(5, 1) == std::vector<Rational>{Rational(4, 5)});

  // degree 6, strength 3: matches the sharply 3-transitive witness
  std::vector<Rational> tail3 = tight_frequencies(6, 3);
  CHECK(tail3 == std::vector<Rational>{Rational(3, 8), Rational(1, 5),
                                       Rational(5, 12)});
  FrequencyVector pgl = frequencies(pgl2(5));
  CHECK(pgl.f[4] == tail3[0]);
  CHECK(pgl.f[5] == tail3[1]);
  CHECK(pgl.f[6] == tail3[2]);

  CHECK_THROWS_AS(tight_frequencies(5, 3), error); // n < 2t
}

TEST_CASE("full report") {
  DesignReport report = analyze(affine_group(5), 2);
  CHECK(report.n == 5);
  CHECK(report.size == 20);
  CHECK(report.criterion_moments == Verdict::yes);
  CHECK(report.criterion_dual == Verdict::yes);
  CHECK(report.criterion_tcrit == Verdict::yes);
  CHECK(report.sm_bound == 20);
  CHECK(report.meets_sm_equality);
  CHECK(report.max_transitivity == 2);
  CHECK(report.sharply_transitive);
  CHECK(report.group);
  CHECK(report.is_design());

  // t beyond n/2: polynomial criteria are n/a, moments still decide
  DesignReport high = analyze(whole_group(3), 2);
  CHECK(high.criterion_moments == Verdict::yes);
  CHECK(high.criterion_dual == Verdict::not_applicable);
  CHECK(high.criterion_tcrit == Verdict::not_applicable);
  CHECK(high.dual_frequencies.size() == 1);

  DesignReport nondesign = analyze(singleton(4), 1);
  CHECK_FALSE(nondesign.is_design());
  CHECK(nondesign.max_transitivity == 0);
  CHECK_FALSE(nondesign.sharply_transitive);
  CHECK(nondesign.group);
}
