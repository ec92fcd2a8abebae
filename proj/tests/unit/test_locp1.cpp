#include <gtest/gtest.h>

#include "generators.hpp"
#include "locind/locp1.hpp"

using namespace locind;

namespace {

ChartOp d(Chart c = Chart::Z) { return ChartOp::derivative(c); }
ChartOp x(int power = 1, Chart c = Chart::Z) { return ChartOp::coordinate(c, power); }

Character ktype(int n, long m = 1) {
  Character c;
  c.ktypes = true;
  c.add(Weight{n}, m);
  return c;
}

Character ktypes_empty() {
  Character c;
  c.ktypes = true;
  return c;
}

}  // namespace

TEST(VectorFields, MoebiusAction) {
  EXPECT_EQ(vector_field(0), d() * ExactScalar(-1));
  EXPECT_EQ(vector_field(1), x() * d() * ExactScalar(-2));
  EXPECT_EQ(vector_field(2), x(2) * d());
  EXPECT_EQ(commutator(vector_field(0), vector_field(2)), vector_field(1));
  EXPECT_EQ(commutator(vector_field(1), vector_field(0)), vector_field(0) * ExactScalar(2));
}

TEST(VectorFields, ChartTransition) {
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(vector_field(i).in_other_chart(), vector_field(i, Chart::W)) << i;
    EXPECT_EQ(vector_field(i).in_other_chart().in_other_chart(), vector_field(i)) << i;
  }
}

TEST(ChartOp, CompositionAndApplication) {
  // d z = z d + 1
  EXPECT_EQ(d() * x(), x() * d() + ChartOp::scalar(Chart::Z, 1));
  const Section s = {{ExactScalar(3, 2), 2}};
  // (z d) z^(3/2) = 3/2 z^(3/2)
  EXPECT_EQ((x() * d()).apply(s), (Section{{ExactScalar(3, 2), 3}}));
  EXPECT_EQ(d().apply({{0, 5}}), Section{});
  EXPECT_EQ((d() * d()).order(), 2u);
}

TEST(TwistedRep, Formulas) {
  const TwistedRep r = twisted_rep(3);
  EXPECT_EQ(r.rho[0], d() * ExactScalar(-1));
  EXPECT_EQ(r.rho[1], x() * d() * ExactScalar(-2) + ChartOp::scalar(Chart::Z, 3));
  EXPECT_EQ(r.rho[2], x(2) * d() - x() * ExactScalar(3));
  const TwistedRep w = twisted_rep(3, Chart::W);
  EXPECT_EQ(w.rho[2], d(Chart::W) * ExactScalar(-1));
}

TEST(TwistedRep, BracketsAndTransport) {
  for (int l = -10; l <= 10; ++l) {
    EXPECT_FALSE(bracket_failure(twisted_rep(l))) << l;
    EXPECT_FALSE(bracket_failure(twisted_rep(l, Chart::W))) << l;
    EXPECT_EQ(transport_to_w(twisted_rep(l)).rho, twisted_rep(l, Chart::W).rho) << l;
    EXPECT_EQ(twist(twisted_rep(l), 2).rho, twisted_rep(l + 2).rho) << l;
  }
}

TEST(TwistedRep, BrokenRealizationIsDetected) {
  TwistedRep r = twisted_rep(2);
  r.rho[2] = r.rho[2] + x();
  EXPECT_TRUE(bracket_failure(r));
}

TEST(Delta, Relations) {
  EXPECT_FALSE(delta_apply(1, 0, 0));  // z delta_0 = 0
  EXPECT_EQ(*delta_apply(1, 0, 3), (std::pair<int, ExactScalar>{2, -3}));
  EXPECT_EQ(*delta_apply(0, 1, 3), (std::pair<int, ExactScalar>{4, 1}));
  // z d delta_n = -(n+1) delta_n
  EXPECT_EQ(*delta_apply(1, 1, 2), (std::pair<int, ExactScalar>{2, -3}));
}

TEST(Delta, ModuleWeightsAndCasimir) {
  const Window w = Window::interval(-30, 30);
  for (int l = -2; l >= -8; --l) {
    const GradedModule m = delta_module(l, w);
    Character expect;
    for (int n = l + 2; n <= 30; n += 2) expect.add(Weight{n}, 1);
    EXPECT_EQ(character_of(m), expect);
    EXPECT_FALSE(check_bracket_invariant(m));
    const SparseMatrix c = casimir_block(m, Weight{l + 6});
    EXPECT_EQ(c.get(0, 0), gen::q((l + 2) * l, 2)) << l;
  }
}

TEST(Laurent, ParityAndBrackets) {
  const Window w = Window::interval(-12, 12);
  for (int p = 0; p <= 1; ++p)
    for (Chart ch : {Chart::Z, Chart::W}) {
      const GradedModule m = laurent_module(1, p, w, ch);
      const Character c = character_of(m);
      for (const auto& [wt, mult] : c.multiplicities) {
        EXPECT_EQ(((wt[0] % 2) + 2) % 2, p);
        EXPECT_EQ(mult, 1);
        EXPECT_EQ(c.parities.at(wt), p);
      }
      EXPECT_EQ(c.total(), 13 - (p == 0 ? 0 : 1));
      EXPECT_FALSE(check_bracket_invariant(m));
      const SparseMatrix cas = casimir_block(m, Weight{p});
      EXPECT_EQ(cas.get(0, 0), gen::q(3, 2));
    }
}

TEST(Cech, LineBundles) {
  EXPECT_EQ(cech_cohomology_On(0), std::make_pair(ktype(0), ktypes_empty()));
  EXPECT_EQ(cech_cohomology_On(3), std::make_pair(ktype(3), ktypes_empty()));
  EXPECT_EQ(cech_cohomology_On(-2), std::make_pair(ktypes_empty(), ktype(0)));
  EXPECT_EQ(cech_cohomology_On(-1), std::make_pair(ktypes_empty(), ktypes_empty()));
}

TEST(Cech, SerreDualityDimensions) {
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(cech_cohomology_On(-n - 2).second, ktype(n)) << n;
    EXPECT_TRUE(cech_cohomology_On(n).second.empty());
  }
}

TEST(Cech, GlobalSectionsModule) {
  for (int n = 0; n <= 6; ++n) {
    const GradedModule m = global_sections_module(n);
    EXPECT_EQ(peel_sl2(character_of(m)), ktype(n));
    EXPECT_FALSE(check_bracket_invariant(m));
  }
}

TEST(Cech, DirectImages) {
  const Window w = Window::interval(-20, 20);
  const auto [h0, h1] = cech_direct_image(JetModule::Orbit::Closed, -4, 0, w);
  EXPECT_EQ(h0, character_of(delta_module(-4, w)));
  EXPECT_TRUE(h1.empty());
  const auto [w0, w1] = cech_direct_image(JetModule::Orbit::Closed, -4, 0, w, Chart::W);
  EXPECT_EQ(w0, negate_weights(h0));
  EXPECT_TRUE(w1.empty());
  for (int p = 0; p <= 1; ++p) {
    const auto [o0, o1] = cech_direct_image(JetModule::Orbit::Open, 2, p, w);
    EXPECT_EQ(o0, character_of(laurent_module(2, p, w)));
    EXPECT_TRUE(o1.empty());
  }
}

TEST(Filtration, DeltaModule) {
  for (int l = -8; l <= 0; ++l)
    for (unsigned p = 0; p <= 4; ++p) {
      const FiltrationReport r = filtration_check(l, p, 10);
      EXPECT_TRUE(r.ok()) << l << " " << p << ": " << r.detail;
    }
}

TEST(Jets, FirstLevelIsTheFiber) {
  const JetModule j(JetModule::Orbit::Closed, -4, 1);
  EXPECT_EQ(j.iota({{0, 5}}), 5);
  EXPECT_EQ(j.reduce({{0, 1}, {1, 7}}), (Section{{0, 1}}));
  EXPECT_EQ(j.weight_of(0), -4);
}

TEST(Jets, NormalDirectionLeavesTheTruncation) {
  const JetModule j(JetModule::Orbit::Closed, -4, 2);
  EXPECT_THROW(j.act(0, {{1, 1}}), std::domain_error);
  EXPECT_NO_THROW(j.act(1, {{1, 1}}));
}

TEST(Jets, Conformance) {
  for (int l = -8; l <= 2; ++l)
    for (unsigned p = 1; p <= 4; ++p) {
      const JetReport r = check_associated(JetModule(JetModule::Orbit::Closed, l, p));
      EXPECT_TRUE(r.ok()) << r.detail;
    }
  for (int l = 0; l <= 2; ++l)
    for (int par = 0; par <= 1; ++par)
      for (unsigned p = 1; p <= 4; ++p) {
        const JetReport r = check_associated(JetModule(JetModule::Orbit::Open, l, p, par));
        EXPECT_TRUE(r.ok()) << r.detail;
      }
}

// ---- properties ---------------------------------------------------------

TEST(ChartOpProperty, CompositionIsAssociative) {
  auto random_op = [] {
    ChartOp op(Chart::Z);
    for (int k = gen::integer(1, 3); k > 0; --k) op.add_term(gen::integer(-2, 2), gen::integer(0, 2), gen::rational(0));
    return op;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const ChartOp a = random_op(), b = random_op(), c = random_op();
    EXPECT_EQ((a * b) * c, a * (b * c));
    const Section s = {{gen::rational(0), 1}};
    EXPECT_EQ((a * b).apply(s), a.apply(b.apply(s)));
  }
}

TEST(ChartOpProperty, TwistedActionOnSectionsIsARepresentation) {
  for (int trial = 0; trial < 40; ++trial) {
    const int l = gen::integer(-10, 10);
    const TwistedRep r = twisted_rep(l, gen::integer(0, 1) ? Chart::W : Chart::Z);
    const Section s = {{gen::integer(-4, 4), 1}, {gen::q(gen::integer(-9, 9), 2), gen::rational(0)}};
    // [rho(e), rho(f)] s = rho(h) s
    Section lhs = r.rho[0].apply(r.rho[2].apply(s));
    for (const auto& [k, v] : r.rho[2].apply(r.rho[0].apply(s))) lhs[k] -= v;
    std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
    EXPECT_EQ(lhs, r.rho[1].apply(s));
  }
}
