#include <gtest/gtest.h>

#include "l2a/builders.hpp"
#include "l2a/classify.hpp"
#include "l2a/error.hpp"
#include "l2a/morphism.hpp"
#include "oracles.hpp"

using namespace l2a;

namespace {

const std::vector<Quaternion> kVs{{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {1, 2, 3, 5}};

}  // namespace

TEST(VerifyMorphism, IdentityPasses) {
  const auto a = share(quaternion_example({1, 2, 3, 5}));
  EXPECT_TRUE(verify_morphism(identity_morphism(a)).passed());
}

TEST(VerifyMorphism, CyclicAutomorphismPasses) {
  for (const auto& v : kVs) {
    const Morphism m = example27_automorphism(v);
    const VerificationReport r = verify_morphism(m);
    EXPECT_TRUE(r.passed()) << r.describe();
    EXPECT_TRUE(is_isomorphism(m));
  }
}

TEST(VerifyMorphism, DroppingTheHomotopyBreaksTheJacobiatorCondition) {
  Morphism m = example27_automorphism({1, 2, 3, 5});
  m.Phi = Tensor({4, 4, 4});
  const VerificationReport r = verify_morphism(m);
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(r.equations[0].passed);
  EXPECT_TRUE(r.equations[1].passed);
  EXPECT_TRUE(r.equations[2].passed);
  EXPECT_FALSE(r.equations[3].passed);
  EXPECT_EQ(r.equations[3].tuple, (std::vector<std::size_t>{1, 2, 3}));
}

TEST(VerifyMorphism, NonAntisymmetricHomotopyIsStructural) {
  Morphism m = identity_morphism(share(quaternion_example({0, 0, 0, 0})));
  m.Phi(1, 1, 0) = 1;
  const VerificationReport r = verify_morphism(m);
  ASSERT_TRUE(r.structural_error.has_value());
  EXPECT_EQ(*r.structural_error, "Phi antisymmetry violated at (1,1)");
}

TEST(VerifyMorphism, ShapeMismatchThrows) {
  Morphism m = identity_morphism(share(TwoTermAlgebra::zero(2, 2)));
  m.phi0 = Matrix::identity(3);
  EXPECT_THROW(verify_morphism(m), Error);
}

TEST(Compose, WithInverseIsIdentity) {
  for (const auto& v : kVs) {
    const Morphism m = example27_automorphism(v);
    const auto inv = inverse(m);
    ASSERT_TRUE(inv.has_value());
    EXPECT_TRUE(verify_morphism(*inv).passed());
    const Morphism id = compose(m, *inv);
    EXPECT_EQ(id, identity_morphism(m.source));
    EXPECT_EQ(compose(*inv, m), identity_morphism(m.source));
  }
}

TEST(Compose, ThreefoldCyclicAutomorphismHasIdentityPhi) {
  const Morphism m = example27_automorphism({1, 2, 3, 5});
  const Morphism cube = compose(compose(m, m), m);
  EXPECT_EQ(cube.phi0, Matrix::identity(4));
  EXPECT_EQ(cube.phi1, Matrix::identity(4));
  EXPECT_TRUE(verify_morphism(cube).passed());
}

TEST(Compose, MismatchedEndpointsThrow) {
  const Morphism a = identity_morphism(share(TwoTermAlgebra::zero(1, 1)));
  const Morphism b = identity_morphism(share(TwoTermAlgebra::zero(2, 1)));
  EXPECT_THROW(compose(a, b), Error);
}

TEST(Inverse, SingularIsNullopt) {
  const auto a = share(TwoTermAlgebra::zero(2, 1));
  Morphism m = identity_morphism(a);
  m.phi0 = Matrix(2, 2);
  EXPECT_FALSE(inverse(m).has_value());
  EXPECT_FALSE(is_isomorphism(m));
}

TEST(Compose, ClosureOnRandomTransportMorphisms) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const TwoTermAlgebra l = random_algebra(seed);
    Rng rng(seed + 1000);
    const auto first = transport(l, random_invertible(rng, l.n0), random_invertible(rng, l.n1),
                                 random_antisymmetric(rng, l.n0, l.n1));
    const auto second = transport(first.algebra, random_invertible(rng, l.n0), random_invertible(rng, l.n1),
                                  random_antisymmetric(rng, l.n0, l.n1));
    Morphism b = second.morphism;
    b.source = first.morphism.target;
    const Morphism c = compose(first.morphism, b);
    EXPECT_TRUE(verify_morphism(c).passed()) << "seed " << seed;
    const auto inv = inverse(c);
    ASSERT_TRUE(inv.has_value());
    EXPECT_TRUE(verify_morphism(*inv).passed()) << "seed " << seed;
  }
}
