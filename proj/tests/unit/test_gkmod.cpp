#include <gtest/gtest.h>

#include "generators.hpp"
#include "locind/gkmod.hpp"
#include "locind/locp1.hpp"

using namespace locind;

namespace {

Character chr(std::initializer_list<std::pair<int, long>> entries) {
  Character c;
  for (auto [w, m] : entries) c.add(Weight{w}, m);
  return c;
}

Character random_character() {
  Character c;
  for (int k = gen::integer(0, 6); k > 0; --k) c.add(Weight{gen::integer(-10, 10)}, gen::integer(-3, 3));
  return c;
}

}  // namespace

TEST(Window, Basics) {
  const Window w = Window::interval(-2, 3);
  EXPECT_TRUE(w.contains(Weight{-2}));
  EXPECT_FALSE(w.contains(Weight{4}));
  EXPECT_EQ(w.expanded(2), Window::interval(-4, 5));
  EXPECT_EQ(w.negated(), Window::interval(-3, 2));
  EXPECT_EQ(w.points(2, 0).size(), 3u);  // -2, 0, 2
  EXPECT_EQ(Window::box(2, 0, 1).points().size(), 4u);
  EXPECT_EQ(w.product(w).rank(), 2u);
  EXPECT_THROW(Window({1}, {0}), std::invalid_argument);
  EXPECT_TRUE(Window().contains(Weight{}));
}

TEST(Character, NegateWeights) {
  EXPECT_EQ(negate_weights(chr({{2, 1}, {4, 1}})), chr({{-2, 1}, {-4, 1}}));
  Character kt = chr({{3, 2}});
  kt.ktypes = true;
  EXPECT_EQ(negate_weights(kt), kt);
}

TEST(Character, ZeroMultiplicitiesVanish) {
  Character c = chr({{1, 2}});
  c.add(Weight{1}, -2, 1);
  EXPECT_TRUE(c.empty());
  EXPECT_TRUE(c.parities.empty());
  EXPECT_EQ(chr({{1, 1}}) - chr({{1, 1}}), Character{});
}

TEST(Character, FirstDifference) {
  EXPECT_FALSE(first_difference(chr({{0, 1}}), chr({{0, 1}})));
  EXPECT_EQ(*first_difference(chr({{0, 1}, {2, 1}}), chr({{2, 1}, {4, 1}})), Weight{0});
}

TEST(Character, PeelAndExpand) {
  // V_3 + V_1 as weights: 3, 1(2), -1(2), -3
  const Character w = chr({{3, 1}, {1, 2}, {-1, 2}, {-3, 1}});
  const Character kt = peel_sl2(w);
  EXPECT_TRUE(kt.ktypes);
  EXPECT_EQ(kt.multiplicity(Weight{3}), 1);
  EXPECT_EQ(kt.multiplicity(Weight{1}), 1);
  EXPECT_EQ(expand_sl2(kt), w);
  EXPECT_THROW(peel_sl2(chr({{2, 1}})), std::invalid_argument);
}

TEST(Character, Json) {
  Character c;
  c.add(Weight{1}, 2, 1);
  EXPECT_EQ(character_json(c), R"([{"weight":[1],"multiplicity":2,"parity":1}])");
}

TEST(OneDim, Examples) {
  const PairData a = closed_orbit_pair();
  const GradedModule v = one_dim_module(a, {3, 0}, Weight{3});
  EXPECT_EQ(v.total_dim(), 1u);
  EXPECT_EQ(onedim_data(v).weight, Weight{3});
  EXPECT_THROW(one_dim_module(a, {3, 1}, Weight{3}), NonInvariantCharacter);
  const GradedModule triv = one_dim_module(a, {0, 0}, Weight{0});
  EXPECT_EQ(character_of(triv), chr({{0, 1}}));
  const PairData c = borel_weil_bott_pair();
  EXPECT_NO_THROW(one_dim_module(c, {3, 0}, Weight{3}));
}

TEST(OneDim, LTypeMustMatchLambda) {
  // L = K = the torus in family A: the L-weight is lambda(h)
  EXPECT_THROW(one_dim_module(closed_orbit_pair(), {3, 0}, Weight{1}), NonInvariantCharacter);
}

TEST(LambdaTop, Examples) {
  const PairData a = closed_orbit_pair();
  EXPECT_EQ(onedim_data(lambda_top(a, TopOf::GModH)).weight, Weight{2});
  EXPECT_EQ(onedim_data(lambda_top(a, TopOf::KModL)).weight, Weight{0});
  const PairData c = borel_weil_bott_pair();
  EXPECT_EQ(onedim_data(lambda_top(c, TopOf::KModL)).weight, Weight{0});
}

TEST(Dual, Examples) {
  const PairData a = closed_orbit_pair();
  const GradedModule v = one_dim_module(a, {3, 0}, Weight{3});
  EXPECT_EQ(onedim_data(dual_module(v)).weight, Weight{-3});
  EXPECT_EQ(onedim_data(dual_module(v)).values[0], -3);
  const GradedModule triv = one_dim_module(a, {0, 0}, Weight{0});
  EXPECT_EQ(character_of(dual_module(triv)), character_of(triv));
}

TEST(TensorOneDim, ShiftsWeights) {
  const PairData a = closed_orbit_pair();
  const GradedModule v = one_dim_module(a, {0, 0}, Weight{0});
  const GradedModule t = lambda_top(a, TopOf::GModH);
  EXPECT_EQ(character_of(tensor_onedim(v, t)), chr({{2, 1}}));
  // dual of a twist is the twist of the dual by the dual line
  EXPECT_EQ(character_of(dual_module(tensor_onedim(v, t))),
            character_of(tensor_onedim(dual_module(v), dual_module(t))));
}

TEST(GradedModules, DirectSumAndExternalProduct) {
  const Window w = Window::interval(-10, 10);
  const GradedModule a = delta_module(-4, w), b = delta_module(-6, w);
  EXPECT_EQ(character_of(direct_sum(a, b)), character_of(a) + character_of(b));
  const GradedModule p = external_product(delta_module(-2, Window::interval(-4, 4)), delta_module(-3, Window::interval(-4, 4)));
  EXPECT_EQ(p.acting->dim(), 6u);
  EXPECT_EQ(character_of(p).total(), character_of(delta_module(-2, Window::interval(-4, 4))).total() *
                                        character_of(delta_module(-3, Window::interval(-4, 4))).total());
  EXPECT_FALSE(check_bracket_invariant(p));
}

TEST(BracketInvariant, DetectsCorruptedAction) {
  GradedModule m = delta_module(-4, Window::interval(-12, 12));
  ASSERT_FALSE(check_bracket_invariant(m));
  auto& blocks = m.actions[0];
  ASSERT_FALSE(blocks.empty());
  auto it = std::next(blocks.begin(), static_cast<long>(blocks.size() / 2));
  it->second.set(0, 0, it->second.get(0, 0) + 1);
  EXPECT_TRUE(check_bracket_invariant(m));
}

// ---- properties ---------------------------------------------------------

TEST(CharacterProperty, GroupLaws) {
  for (int trial = 0; trial < 100; ++trial) {
    const Character a = random_character(), b = random_character(), c = random_character();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a - a, Character{});
    EXPECT_EQ(negate_weights(negate_weights(a)), a);
    EXPECT_EQ(negate_weights(a + b), negate_weights(a) + negate_weights(b));
    EXPECT_EQ(first_difference(a, b).has_value(), !(a == b));
  }
}

TEST(CharacterProperty, RestrictionCommutesWithSums) {
  for (int trial = 0; trial < 60; ++trial) {
    const Character a = random_character(), b = random_character();
    const int lo = gen::integer(-8, 0), hi = gen::integer(0, 8);
    const Window w = Window::interval(lo, hi);
    EXPECT_EQ((a + b).restricted(w), a.restricted(w) + b.restricted(w));
  }
}

TEST(CharacterProperty, PeelInvertsExpand) {
  for (int trial = 0; trial < 60; ++trial) {
    Character kt;
    kt.ktypes = true;
    for (int k = gen::integer(0, 4); k > 0; --k) kt.add(Weight{gen::integer(0, 7)}, gen::integer(1, 3));
    EXPECT_EQ(peel_sl2(expand_sl2(kt)), kt);
  }
}
