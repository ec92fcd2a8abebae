#include <gtest/gtest.h>

#include "generators.hpp"
#include "locind/liealg.hpp"

using namespace locind;

namespace {

Vector E() { return {1, 0, 0}; }
Vector H() { return {0, 1, 0}; }
Vector F() { return {0, 0, 1}; }

/// Vector field of a e + b h + c f at z: (-a - 2 b z + c z^2) d/dz.
ExactScalar field_at(const Vector& x, const ExactScalar& z) { return -x[0] - 2 * x[1] * z + x[2] * z * z; }

/// Same in the w = 1/z chart: (a w^2 + 2 b w - c) d/dw.
ExactScalar field_at_w(const Vector& x, const ExactScalar& w) { return x[0] * w * w + 2 * x[1] * w - x[2]; }

LieAlgPtr sl2p() { return std::make_shared<const LieAlg>(sl2()); }

}  // namespace

TEST(Sl2, DefiningBrackets) {
  const LieAlg g = sl2();
  EXPECT_EQ(g.bracket(H(), E()), (Vector{2, 0, 0}));
  EXPECT_EQ(g.bracket(E(), F()), H());
  EXPECT_EQ(g.bracket(H(), F()), (Vector{0, 0, -2}));
  EXPECT_FALSE(g.find_structure_failure());
}

TEST(LieAlg, RejectsJacobiViolation) {
  LieAlg::Constants c(3, std::vector<Vector>(3, Vector(3, 0)));
  c[1][0] = {3, 0, 0};
  c[0][1] = {-3, 0, 0};
  c[1][2] = {0, 0, -2};
  c[2][1] = {0, 0, 2};
  c[0][2] = {0, 1, 0};
  c[2][0] = {0, -1, 0};
  EXPECT_THROW(LieAlg({"e", "h", "f"}, c), InvalidLieAlgebra);
  const auto f = LieAlg::unchecked({"e", "h", "f"}, c).find_structure_failure();
  ASSERT_TRUE(f);
  EXPECT_EQ(f->kind, "jacobi");
}

TEST(LieAlg, RejectsAntisymmetryViolation) {
  LieAlg::Constants c(2, std::vector<Vector>(2, Vector(2, 0)));
  c[0][1] = {1, 0};
  EXPECT_THROW(LieAlg({"x", "y"}, c), InvalidLieAlgebra);
  EXPECT_EQ(LieAlg::unchecked({"x", "y"}, c).find_structure_failure()->kind, "antisymmetry");
}

TEST(DirectSum, Examples) {
  const LieAlg s = direct_sum(sl2(), sl2());
  EXPECT_EQ(s.dim(), 6u);
  const Vector e1 = s.basis_vector(0), f2 = s.basis_vector(5);
  EXPECT_EQ(s.bracket(e1, f2), Vector(6, 0));
  EXPECT_EQ(direct_sum(sl2(), torus_algebra(1)).dim(), 4u);
  EXPECT_FALSE(s.find_structure_failure());
  EXPECT_EQ(s.label(0), "e1");
  EXPECT_EQ(s.label(5), "f2");
}

TEST(ChangeBasis, PreservesBrackets) {
  const LieAlg g = sl2();
  const std::vector<Vector> nb = {{1, 0, 1}, {1, 0, -1}, {0, 1, 0}};
  const LieAlg h = g.change_basis(nb, {"x", "y", "z"});
  EXPECT_FALSE(h.find_structure_failure());
  // [x, y] = [e+f, e-f] = -2h = -2 z
  EXPECT_EQ(h.bracket(h.basis_vector(0), h.basis_vector(1)), (Vector{0, 0, -2}));
}

TEST(Stabilizer, AtZero) {
  const Subalg s = stabilizer_subalgebra(sl2p(), {Chart::Z, 0});
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_TRUE(s.contains(H()));
  EXPECT_TRUE(s.contains(F()));
  EXPECT_FALSE(s.contains(E()));
}

TEST(Stabilizer, AtInfinity) {
  const Subalg s = stabilizer_subalgebra(sl2p(), {Chart::W, 0});
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_TRUE(s.contains(H()));
  EXPECT_TRUE(s.contains(E()));
  EXPECT_FALSE(s.contains(F()));
}

TEST(Stabilizer, AtOne) {
  const Subalg s = stabilizer_subalgebra(sl2p(), {Chart::Z, 1});
  EXPECT_EQ(s.dim(), 2u);
  EXPECT_TRUE(s.contains({-2, 1, 0}));  // h - 2e
  EXPECT_TRUE(s.contains({1, 0, 1}));   // e + f
  EXPECT_NO_THROW(s.as_lie_algebra({"a", "b"}));
}

TEST(StabilizerProperty, RandomRationalPoints) {
  for (int trial = 0; trial < 40; ++trial) {
    const ExactScalar p = gen::rational(0.1);
    const Chart chart = gen::integer(0, 1) ? Chart::W : Chart::Z;
    const Subalg s = stabilizer_subalgebra(sl2p(), {chart, p});
    ASSERT_EQ(s.dim(), 2u);
    for (const auto& x : s.basis()) EXPECT_EQ(chart == Chart::Z ? field_at(x, p) : field_at_w(x, p), 0);
    for (const auto& x : s.basis())
      for (const auto& y : s.basis()) EXPECT_TRUE(s.contains(sl2().bracket(x, y)));
  }
}

TEST(Subalg, RejectsNonClosedSpan) {
  EXPECT_THROW(Subalg(sl2p(), {E(), F()}), InvalidLieAlgebra);
  EXPECT_THROW(Subalg(sl2p(), {E(), E()}), InvalidLieAlgebra);
}

TEST(Pairs, FamiliesValidate) {
  for (const PairData& p : {closed_orbit_pair(), closed_orbit_pair(BasePoint::Infinity), open_orbit_pair(),
                            borel_weil_bott_pair(), product_pair(closed_orbit_pair(), open_orbit_pair()),
                            product_pair(closed_orbit_pair(), closed_orbit_pair())})
    EXPECT_NO_THROW(validate_pair(p)) << p.family;
}

TEST(Pairs, Dimensions) {
  EXPECT_EQ(closed_orbit_pair().u_dim, 0u);
  EXPECT_EQ(open_orbit_pair().u_dim, 0u);
  EXPECT_EQ(borel_weil_bott_pair().u_dim, 1u);
  const PairData d = product_pair(closed_orbit_pair(), closed_orbit_pair());
  EXPECT_EQ(d.h.dim() - d.l_dim, 2u);
  EXPECT_EQ(d.K.torus_rank(), 2u);
  EXPECT_THROW(product_pair(open_orbit_pair(), open_orbit_pair()), InvalidPair);
}

TEST(Pairs, CharacterMustKillDerivedAlgebra) {
  const PairData a = closed_orbit_pair();
  EXPECT_NO_THROW(a.check_character({3, 0}));
  EXPECT_THROW(a.check_character({3, 1}), NonInvariantCharacter);
  EXPECT_NO_THROW(a.check_character({0, 0}));
}

TEST(Pairs, KEmbeddingIsAHomomorphism) {
  for (const PairData& p : {closed_orbit_pair(), open_orbit_pair(), borel_weil_bott_pair()}) {
    const Subalg k(p.g, p.K.embedding);
    for (const auto& x : p.K.embedding)
      for (const auto& y : p.K.embedding) EXPECT_TRUE(k.contains(p.g->bracket(x, y)));
  }
}

TEST(KDescriptor, ComponentSign) {
  const PairData b = open_orbit_pair();
  ASSERT_EQ(b.L.component_signs.size(), 1u);
  // -1 in the diagonal torus acts on the K-weight n by (-1)^n
  EXPECT_EQ(b.L.component_sign(0, Weight{2}), 1);
  EXPECT_EQ(b.L.component_sign(0, Weight{-3}), -1);
}
