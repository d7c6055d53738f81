#include <doctest.h>

#include <random>

#include "footrank/weights.hpp"

using namespace footrank;

TEST_CASE("table values") {
  WeightContext ctx{3};
  OrientedStats a_vs_b{3, 2, 1, 0, 2, 1};  // A's view of the A-B pair

  CHECK(compute_weight(2, a_vs_b, ctx) == doctest::Approx(1.0 / 3));
  CHECK(compute_weight(1, a_vs_b, ctx) == doctest::Approx(1.0 / 3));

  OrientedStats two_losses{3, 1, 2, 0, 1, 2};
  CHECK(compute_weight(4, two_losses, ctx) == doctest::Approx(2.0));

  OrientedStats with_draw{3, 1, 1, 1, 2, 2};
  CHECK(compute_weight(7, with_draw, ctx) == doctest::Approx(0.5));

  OrientedStats goalless{1, 0, 0, 1, 0, 0};
  CHECK(compute_weight(8, goalless, ctx) == 0.0);
}

TEST_CASE("zero-denominator conventions") {
  WeightContext ctx{5};
  SUBCASE("c/s with s=0 falls back to c") {
    OrientedStats s{2, 0, 2, 0, 0, 3};
    CHECK(compute_weight(5, s, ctx) == doctest::Approx(3.0));
  }
  SUBCASE("c/s with c=s=0 is 0") {
    OrientedStats s{2, 0, 0, 2, 0, 0};
    CHECK(compute_weight(5, s, ctx) == 0.0);
  }
  SUBCASE("l/w with w=0 falls back to l") {
    OrientedStats s{3, 0, 3, 0, 1, 5};
    CHECK(compute_weight(6, s, ctx) == doctest::Approx(3.0));
  }
  SUBCASE("l/w with l=0 is 0") {
    OrientedStats s{3, 0, 0, 3, 0, 0};
    CHECK(compute_weight(6, s, ctx) == 0.0);
  }
  SUBCASE("goal share with no goals is 0 for fn 3") {
    OrientedStats s{2, 1, 1, 0, 0, 0};
    CHECK(compute_weight(3, s, ctx) == doctest::Approx(0.5));
  }
  SUBCASE("goalless all-draw pair casts no vote under any fn") {
    OrientedStats s{2, 0, 0, 2, 0, 0};
    for (int fn = kWeightFnMin; fn <= kWeightFnMax; ++fn)
      CHECK(compute_weight(fn, s, ctx) == 0.0);
  }
}

TEST_CASE("precondition violations") {
  WeightContext ctx{3};
  OrientedStats ok{3, 2, 1, 0, 2, 1};
  CHECK_THROWS_AS(compute_weight(0, ok, ctx), std::invalid_argument);
  CHECK_THROWS_AS(compute_weight(11, ok, ctx), std::invalid_argument);
  OrientedStats zero_games{0, 0, 0, 0, 0, 0};
  CHECK_THROWS_AS(compute_weight(2, zero_games, ctx), std::invalid_argument);
  OrientedStats too_many{5, 2, 3, 0, 0, 0};
  CHECK_THROWS_AS(compute_weight(1, too_many, ctx), std::invalid_argument);
}

namespace {

OrientedStats flip(const OrientedStats& s) {
  return {s.g, s.l, s.w, s.d, s.c, s.s};
}

OrientedStats random_stats(std::mt19937& rng, long max_games) {
  std::uniform_int_distribution<long> games(1, max_games);
  OrientedStats s;
  s.g = games(rng);
  std::uniform_int_distribution<long> w(0, s.g);
  s.w = w(rng);
  std::uniform_int_distribution<long> l(0, s.g - s.w);
  s.l = l(rng);
  s.d = s.g - s.w - s.l;
  std::uniform_int_distribution<long> goals(0, 9);
  s.s = goals(rng);
  s.c = goals(rng);
  return s;
}

}  // namespace

TEST_CASE("properties over random stats") {
  std::mt19937 rng(7);
  const long G = 8;
  WeightContext ctx{G};
  for (int trial = 0; trial < 500; ++trial) {
    OrientedStats s = random_stats(rng, G);
    for (int fn = kWeightFnMin; fn <= kWeightFnMax; ++fn) {
      double w = compute_weight(fn, s, ctx);
      CHECK(w >= 0.0);
      CHECK(std::isfinite(w));
    }
    // fn 2 and fn 7 coincide without draws
    if (s.d == 0)
      CHECK(compute_weight(2, s, ctx) ==
            doctest::Approx(compute_weight(7, s, ctx)));
    // fn 1 never exceeds fn 2; equal iff g = G
    double w1 = compute_weight(1, s, ctx);
    double w2 = compute_weight(2, s, ctx);
    CHECK(w1 <= w2 + 1e-15);
    if (s.g == G) CHECK(w1 == doctest::Approx(w2));
    // fn 8 from both sides sums to 1 when any goals were scored
    if (s.c + s.s > 0)
      CHECK(compute_weight(8, s, ctx) + compute_weight(8, flip(s), ctx) ==
            doctest::Approx(1.0));
    // never lost, never conceded, no draws: no vote under any fn
    if (s.l == 0 && s.c == 0 && s.d == 0)
      for (int fn = kWeightFnMin; fn <= kWeightFnMax; ++fn)
        CHECK(compute_weight(fn, s, ctx) == 0.0);
  }
}
