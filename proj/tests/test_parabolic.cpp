#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "parcover/parabolic.hpp"
#include "support/generators.hpp"

using namespace parcover;

namespace {

MonodromyCover cyclic6_cover() {
  return MonodromyCover(
      6, 0,
      {{"0", Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}})},
       {"infty", Permutation::from_cycles(6, {{0, 5, 4, 3, 2, 1}})}});
}

MonodromyCover four_point_double_cover() {
  const Permutation t = Permutation::from_cycles(2, {{0, 1}});
  return MonodromyCover(2, 0, {{"a", t}, {"b", t}, {"c", t}, {"d", t}});
}

MonodromyCover double_cover_0_infty() {
  const Permutation t = Permutation::from_cycles(2, {{0, 1}});
  return MonodromyCover(2, 0, {{"0", t}, {"infty", t}});
}

ParabolicLineBundle line_with(std::int64_t deg,
                              std::map<PointId, Weight> weights) {
  return ParabolicLineBundle::make(deg, std::move(weights),
                                   CurveTag::base_curve);
}

} // namespace

TEST_CASE("weights are reduced and range-checked") {
  CHECK(Weight::reduced_from(2, 6).value() == make_rational(1, 3));
  CHECK(Weight().is_zero());
  CHECK_THROWS_AS(Weight(make_rational(7, 6)), std::invalid_argument);
  CHECK_THROWS_AS(Weight(make_rational(-1, 3)), std::invalid_argument);
  CHECK(Weight::reduced_from(1, 3).dual().value() == make_rational(2, 3));
  CHECK(Weight().dual().is_zero());
}

TEST_CASE("par_deg basics") {
  const auto line = line_with(0, {{"x", Weight::reduced_from(1, 2)}});
  CHECK(par_deg(line) == make_rational(1, 2));
  CHECK(par_mu(line) == par_deg(line));

  const WeightProfile profile(
      2, -1,
      {{"x",
        {{Weight::reduced_from(1, 3), 1}, {Weight::reduced_from(2, 3), 1}}}});
  CHECK(par_deg(profile) == 0);

  const WeightProfile half(
      2, 0, {{"x", {{Weight::reduced_from(1, 2), 2}}}});
  CHECK(par_deg(half) == 1);
  CHECK(par_mu(half) == make_rational(1, 2));
}

TEST_CASE("weight profile normalization") {
  // equal weights merge, zero-only points drop
  const WeightProfile merged(
      3, 5,
      {{"x",
        {{Weight::reduced_from(1, 4), 1},
         {Weight::reduced_from(1, 4), 1},
         {Weight(), 1}}},
       {"y", {{Weight(), 3}}}});
  REQUIRE(merged.profile().size() == 1);
  const auto &entries = merged.profile().at("x");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].weight.is_zero());
  CHECK(entries[0].multiplicity == 1);
  CHECK(entries[1].weight == Weight::reduced_from(1, 4));
  CHECK(entries[1].multiplicity == 2);

  // multiplicities must add up to the rank
  CHECK_THROWS_AS(WeightProfile(2, 0, {{"x", {{Weight(), 1}}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(WeightProfile(0, 0, {}), std::invalid_argument);
}

TEST_CASE("direct image of the cyclic cover") {
  const WeightProfile profile = direct_image_structure(cyclic6_cover());
  CHECK(profile.rank() == 6);
  CHECK(profile.deg() == -5);
  REQUIRE(profile.profile().size() == 2);
  for (const PointId &point : {PointId("0"), PointId("infty")}) {
    const auto &entries = profile.profile().at(point);
    REQUIRE(entries.size() == 6);
    for (int j = 0; j < 6; ++j) {
      CHECK(entries[j].weight == Weight::reduced_from(j, 6));
      CHECK(entries[j].multiplicity == 1);
    }
  }
  CHECK(par_deg(profile) == 0);
  CHECK(par_mu(profile) == 0);
}

TEST_CASE("direct image of an unramified cover has no weights") {
  const MonodromyCover cover(
      2, 1, {}, {Permutation::from_cycles(2, {{0, 1}}), Permutation(2)});
  const WeightProfile profile = direct_image_structure(cover);
  CHECK(profile.rank() == 2);
  CHECK(profile.deg() == 0); // g_Y = 1: (1-1) - 2*(1-1) = 0
  CHECK(profile.profile().empty());
}

TEST_CASE("direct image of the four-point double cover") {
  const WeightProfile profile =
      direct_image_structure(four_point_double_cover());
  CHECK(profile.rank() == 2);
  CHECK(profile.deg() == -2);
  REQUIRE(profile.profile().size() == 4);
  for (const auto &[point, entries] : profile.profile()) {
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].weight.is_zero());
    CHECK(entries[1].weight == Weight::reduced_from(1, 2));
  }
}

TEST_CASE("dual") {
  const WeightProfile line(1, 0, {{"x", {{Weight::reduced_from(1, 3), 1}}}});
  const WeightProfile flipped = dual(line);
  CHECK(flipped.deg() == -1);
  CHECK(flipped.profile().at("x")[0].weight == Weight::reduced_from(2, 3));
  CHECK(par_deg(flipped) == -par_deg(line));
  CHECK(dual(flipped) == line);

  // plain duality on weightless profiles
  const WeightProfile plain(3, 7, {});
  CHECK(dual(plain).deg() == -7);
  CHECK(dual(plain).profile().empty());

  // the direct image is self-dual
  CHECK(dual(direct_image_structure(cyclic6_cover())) ==
        direct_image_structure(cyclic6_cover()));
}

TEST_CASE("tensor_line") {
  const auto a = line_with(0, {{"x", Weight::reduced_from(1, 2)}});
  const auto b = line_with(0, {{"x", Weight::reduced_from(2, 3)}});
  const auto product = tensor_line(a, b);
  CHECK(product.deg == 1); // 1/2 + 2/3 = 7/6 overflows
  CHECK(product.weights.at("x") == Weight::reduced_from(1, 6));
  CHECK(par_deg(product) == par_deg(a) + par_deg(b));

  const auto trivial = line_with(0, {});
  CHECK(tensor_line(a, trivial) == a);

  const auto cancel = tensor_line(a, a);
  CHECK(cancel.deg == 1);
  CHECK(cancel.weights.empty());

  auto on_cover = a;
  on_cover.curve = CurveTag::covering_curve;
  CHECK_THROWS_AS(tensor_line(a, on_cover), std::invalid_argument);
}

TEST_CASE("pullback_line floor formula") {
  const MonodromyCover cover = double_cover_0_infty();

  // weight 1/2 at a ramified point: 2*(1/2) lands entirely in the degree
  const auto halves =
      pullback_line(cover, line_with(0, {{"0", Weight::reduced_from(1, 2)}}));
  CHECK(halves.deg == 1);
  CHECK(halves.weights.empty());
  CHECK(par_deg(halves) == 1);

  // weight 1/3: floor 0, weight 2/3 at the unique preimage
  const auto thirds =
      pullback_line(cover, line_with(0, {{"0", Weight::reduced_from(1, 3)}}));
  CHECK(thirds.deg == 0);
  CHECK(thirds.weights.at("0#0") == Weight::reduced_from(2, 3));
  CHECK(par_deg(thirds) == make_rational(2, 3));

  // weight at an unbranched point is copied to each of the d preimages
  const auto copied =
      pullback_line(cover, line_with(1, {{"q", Weight::reduced_from(1, 5)}}));
  CHECK(copied.deg == 2);
  CHECK(copied.weights.at("q#0") == Weight::reduced_from(1, 5));
  CHECK(copied.weights.at("q#1") == Weight::reduced_from(1, 5));
  CHECK(copied.curve == CurveTag::covering_curve);

  CHECK_THROWS_AS(pullback_line(cover, copied), std::invalid_argument);
}

TEST_CASE("pullback along a degree-1 cover keeps the data") {
  const MonodromyCover identity_cover(1, 0, {});
  REQUIRE(validate_cover(identity_cover).ok());
  const auto line = line_with(-2, {{"x", Weight::reduced_from(3, 7)}});
  const auto pulled = pullback_line(identity_cover, line);
  CHECK(pulled.deg == line.deg);
  REQUIRE(pulled.weights.size() == 1);
  CHECK(pulled.weights.at("x#0") == line.weights.at("x"));
  CHECK(par_deg(pulled) == par_deg(line));
}

TEST_CASE("pullback_split") {
  const auto bundle = SplitParabolicBundle::make(
      {line_with(0, {{"0", Weight::reduced_from(1, 2)}}),
       line_with(-1, {{"infty", Weight::reduced_from(5, 6)}})});
  const auto pulled = pullback_split(cyclic6_cover(), bundle);
  REQUIRE(pulled.summands.size() == 2);
  CHECK(pulled.summands[0] == pullback_line(cyclic6_cover(), bundle.summands[0]));
  CHECK(par_deg(pulled) == 6 * par_deg(bundle));

  // all-zero weights: degrees scale, no weights appear
  const auto plain = SplitParabolicBundle::make({line_with(2, {}), line_with(-3, {})});
  const auto plain_pulled = pullback_split(cyclic6_cover(), plain);
  CHECK(par_deg(plain_pulled) == 6 * (2 - 3));
  for (const auto &summand : plain_pulled.summands)
    CHECK(summand.weights.empty());
}

TEST_CASE("to_profile") {
  const auto bundle = SplitParabolicBundle::make(
      {line_with(1, {{"x", Weight::reduced_from(1, 4)}}),
       line_with(0, {{"x", Weight::reduced_from(1, 4)},
                     {"y", Weight::reduced_from(2, 3)}})});
  const WeightProfile profile = to_profile(bundle);
  CHECK(profile.rank() == 2);
  CHECK(profile.deg() == 1);
  CHECK(profile.profile().at("x") ==
        WeightProfile::PointWeights{{Weight::reduced_from(1, 4), 2}});
  CHECK(profile.profile().at("y") ==
        WeightProfile::PointWeights{{Weight(), 1},
                                    {Weight::reduced_from(2, 3), 1}});
  CHECK(par_deg(profile) == par_deg(bundle));
}

TEST_CASE("weights_divisible") {
  OrbifoldStructure sixes;
  sixes.marked["0"] = 6;
  sixes.marked["infty"] = 6;
  CHECK(weights_divisible(direct_image_structure(cyclic6_cover()), sixes));

  OrbifoldStructure threes;
  threes.marked["x"] = 3;
  const WeightProfile half(1, 0, {{"x", {{Weight::reduced_from(1, 2), 1}}}});
  CHECK_FALSE(weights_divisible(half, threes));

  const WeightProfile plain(4, -2, {});
  CHECK(weights_divisible(plain, OrbifoldStructure{}));
  CHECK(weights_divisible(plain, threes));

  // nonzero weight at an unmarked point is never allowed
  const auto stray = SplitParabolicBundle::make(
      {line_with(0, {{"y", Weight::reduced_from(1, 3)}})});
  CHECK_FALSE(weights_divisible(stray, threes));
  OrbifoldStructure at_y;
  at_y.marked["y"] = 6;
  CHECK(weights_divisible(stray, at_y));
}

TEST_CASE("direct image invariants over random covers") {
  std::mt19937 rng(271828);
  for (int trial = 0; trial < 60; ++trial) {
    const MonodromyCover cover = testgen::random_cover(rng);
    const WeightProfile profile = direct_image_structure(cover);
    CHECK(profile.rank() == cover.degree());
    CHECK(par_deg(profile) == 0);
    CHECK(dual(profile) == profile);

    // marking each branch point with the lcm of its multiplicities admits
    // every direct-image weight
    OrbifoldStructure ramification_orders;
    for (const auto &bp : cover.branch()) {
      std::int64_t order = 1;
      for (int m : cycle_type(bp.monodromy))
        order = std::lcm<std::int64_t>(order, m);
      ramification_orders.marked[bp.point] = order;
    }
    CHECK(weights_divisible(profile, ramification_orders));
  }
}

TEST_CASE("pullback scales par_deg by the covering degree") {
  std::mt19937 rng(314159);
  for (int trial = 0; trial < 60; ++trial) {
    const MonodromyCover cover = testgen::random_cover(rng);
    const SplitParabolicBundle bundle = testgen::random_split(rng, cover);
    const SplitParabolicBundle pulled = pullback_split(cover, bundle);
    CHECK(par_deg(pulled) == cover.degree() * par_deg(bundle));
    CHECK(to_profile(pulled).rank() == bundle.rank());
  }
}

TEST_CASE("dual is an involution negating par_deg") {
  std::mt19937 rng(161803);
  for (int trial = 0; trial < 60; ++trial) {
    const MonodromyCover cover = testgen::random_cover(rng);
    const WeightProfile profile = to_profile(testgen::random_split(rng, cover));
    const WeightProfile flipped = dual(profile);
    CHECK(par_deg(flipped) == -par_deg(profile));
    CHECK(dual(flipped) == profile);
  }
}

TEST_CASE("tensor_line is additive on par_deg") {
  std::mt19937 rng(577215);
  const std::vector<PointId> points{"x", "y", "z"};
  for (int trial = 0; trial < 80; ++trial) {
    const auto a = testgen::random_line(rng, points);
    const auto b = testgen::random_line(rng, points);
    CHECK(par_deg(tensor_line(a, b)) == par_deg(a) + par_deg(b));
    CHECK(tensor_line(a, b) == tensor_line(b, a));
  }
}
