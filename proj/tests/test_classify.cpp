#include <gtest/gtest.h>

#include <functional>

#include "l2a/builders.hpp"
#include "l2a/classify.hpp"
#include "l2a/error.hpp"
#include "oracles.hpp"

using namespace l2a;

namespace {

const Quaternion kV{1, 2, 3, 5};

Cochain cartan_like(std::initializer_list<int> values, std::size_t dimV) {
  Cochain c = Cochain::zero(3, 3, dimV);
  c.values.assign(values.begin(), values.end());
  return c;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::Internal;
}

Morphism between_normal_forms(const Morphism& m) {
  const NormalForm src = normal_form(*m.source);
  const NormalForm tgt = normal_form(*m.target);
  return compose(compose(*inverse(src.morphism), m), tgt.morphism);
}

}  // namespace

TEST(Decompose, QuaternionSplitting) {
  const TwoTermAlgebra q = quaternion_example(kV);
  const Decomposition dec = decompose(q);
  EXPECT_EQ(dec.imd_basis.basis, (std::vector<Vec>{unit_vec(4, 0)}));
  EXPECT_EQ(dec.g_basis.basis, (std::vector<Vec>{unit_vec(4, 1), unit_vec(4, 2), unit_vec(4, 3)}));
  EXPECT_EQ(dec.kerd_basis.basis, (std::vector<Vec>{unit_vec(4, 1), unit_vec(4, 2), unit_vec(4, 3)}));
  EXPECT_EQ(dec.U_basis.basis, (std::vector<Vec>{unit_vec(4, 0)}));
  EXPECT_EQ(dec.h, Matrix::from_rows({{1, 0, 0, 0}}));
}

TEST(Decompose, DimensionsAddUp) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const TwoTermAlgebra a = random_algebra(seed);
    const Decomposition dec = decompose(a);
    const std::size_t r = rank(a.d);
    EXPECT_EQ(dec.imd_basis.dim(), r);
    EXPECT_EQ(dec.U_basis.dim(), r);
    EXPECT_EQ(dec.g_basis.dim() + r, a.n0);
    EXPECT_EQ(dec.kerd_basis.dim() + r, a.n1);
    EXPECT_TRUE(invert(dec.l0_coords).has_value());
    EXPECT_TRUE(invert(dec.l1_coords).has_value());
  }
}

TEST(ExtractTriple, QuaternionGivesSo3Adjoint) {
  const TwoTermAlgebra q = quaternion_example(kV);
  const Quadruple t = extract_triple(q, decompose(q));
  EXPECT_EQ(t.g, catalog::so3());
  EXPECT_EQ(t.dim_u, 1u);
  EXPECT_EQ(t.rep, catalog::adjoint(catalog::so3()));
  EXPECT_EQ(t.jtilde, cartan_like({2, 3, 5}, 3));
}

TEST(ExtractTriple, SkeletalStringRoundTrip) {
  const TwoTermAlgebra s = skeletal_string(catalog::so3(), 3);
  const Quadruple t = extract_triple(s, decompose(s));
  EXPECT_EQ(t.g, catalog::so3());
  EXPECT_EQ(t.dim_u, 0u);
  EXPECT_EQ(t.rep, catalog::trivial(catalog::so3(), 1));
  EXPECT_EQ(t.jtilde, cartan_like({-6}, 1));
}

TEST(NormalForm, QuaternionMatchesAssembledQuadruple) {
  const LieAlgebra so3 = catalog::so3();
  const NormalForm nf = normal_form(quaternion_example(kV));
  EXPECT_EQ(nf.algebra, normal_form_algebra({so3, 1, catalog::adjoint(so3), cartan_like({2, 3, 5}, 3)}));
  EXPECT_TRUE(verify_morphism(nf.morphism).passed());
  EXPECT_TRUE(is_isomorphism(nf.morphism));
}

TEST(NormalForm, IdempotentOnRandomAlgebras) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const TwoTermAlgebra a = random_algebra(seed);
    const NormalForm once = normal_form(a);
    EXPECT_TRUE(verify_morphism(once.morphism).passed()) << "seed " << seed;
    const NormalForm twice = normal_form(once.algebra);
    EXPECT_EQ(twice.algebra, once.algebra) << "seed " << seed;
    EXPECT_EQ(twice.quadruple, once.quadruple) << "seed " << seed;
  }
}

TEST(Skeleton, DropsU) {
  const TwoTermAlgebra s = skeleton(quaternion_example(kV));
  EXPECT_EQ(s.n0, 3u);
  EXPECT_EQ(s.n1, 3u);
  EXPECT_TRUE(s.d.is_zero());
  EXPECT_EQ(s.jac.fibre(0, 1, 2), (Vec{2, 3, 5}));
  EXPECT_TRUE(verify(s).passed());
}

TEST(Transport, IdentityIsTrivial) {
  const TwoTermAlgebra q = quaternion_example(kV);
  const auto t = transport(q, Matrix::identity(4), Matrix::identity(4), Tensor({4, 4, 4}));
  EXPECT_EQ(t.algebra, q);
  EXPECT_EQ(t.morphism, identity_morphism(share(q)));
}

TEST(Transport, AlongAutomorphismReproducesAlgebra) {
  const Morphism m = example27_automorphism(kV);
  const auto t = transport(*m.source, m.phi0, m.phi1, m.Phi);
  EXPECT_EQ(t.algebra, *m.source);
  EXPECT_EQ(t.morphism, m);
}

TEST(Transport, RejectsBadInput) {
  const TwoTermAlgebra q = quaternion_example(kV);
  const Matrix id = Matrix::identity(4);
  EXPECT_EQ(code_of([&] { transport(q, Matrix(4, 4), id, Tensor({4, 4, 4})); }), ErrorCode::Singular);
  EXPECT_EQ(code_of([&] { transport(q, id, Matrix::identity(3), Tensor({4, 4, 3})); }),
            ErrorCode::DimensionMismatch);
  Tensor bad({4, 4, 4});
  bad(1, 2, 0) = 1;
  EXPECT_EQ(code_of([&] { transport(q, id, id, bad); }), ErrorCode::Structural);
}

TEST(Transport, PreservesInvariants) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const TwoTermAlgebra a = random_algebra(seed);
    Rng rng(seed + 77);
    const auto t = transport(a, random_invertible(rng, a.n0), random_invertible(rng, a.n1),
                             random_antisymmetric(rng, a.n0, a.n1));
    EXPECT_TRUE(verify(t.algebra).passed());
    EXPECT_TRUE(verify_morphism(t.morphism).passed());
    EXPECT_EQ(invariants(t.algebra), invariants(a)) << "seed " << seed;
  }
}

TEST(Series, Heisenberg) {
  const LieAlgebra h = catalog::heisenberg3();
  EXPECT_EQ(derived_series(h), (std::vector<std::size_t>{3, 1, 0}));
  EXPECT_EQ(lower_central_series(h), (std::vector<std::size_t>{3, 1, 0}));
  EXPECT_EQ(center_dim(h), 1u);
}

TEST(Series, OtherCatalogEntries) {
  EXPECT_EQ(derived_series(catalog::so3()), (std::vector<std::size_t>{3}));
  EXPECT_EQ(derived_series(catalog::nonabelian2()), (std::vector<std::size_t>{2, 1, 0}));
  EXPECT_EQ(lower_central_series(catalog::nonabelian2()), (std::vector<std::size_t>{2, 1}));
  EXPECT_EQ(derived_series(catalog::abelian(2)), (std::vector<std::size_t>{2, 0}));
  EXPECT_EQ(center_dim(catalog::abelian(2)), 2u);
  EXPECT_EQ(center_dim(catalog::sl2()), 0u);
}

TEST(Invariants, SkeletalStringValues) {
  const InvariantVector v = invariants(skeletal_string(catalog::so3(), 1));
  EXPECT_EQ(v.n0, 3u);
  EXPECT_EQ(v.n1, 1u);
  EXPECT_EQ(v.dim_g, 3u);
  EXPECT_EQ(v.dim_u, 0u);
  EXPECT_EQ(v.dim_v, 1u);
  EXPECT_EQ(v.homology, (HomologyDims{3, 1}));
  EXPECT_EQ(v.derived, (std::vector<std::size_t>{3}));
  EXPECT_EQ(v.lower_central, (std::vector<std::size_t>{3}));
  EXPECT_EQ(v.center, 0u);
  EXPECT_EQ(v.killing_rank, 3u);
  EXPECT_EQ(v.cohomology, (std::vector<std::size_t>{1, 0, 0, 1}));
  EXPECT_FALSE(v.jtilde_coboundary);
  const auto fields = v.fields();
  ASSERT_EQ(fields.size(), 16u);
  EXPECT_EQ(fields.front().first, "dim g");
  EXPECT_EQ(fields.back().first, "Jtilde coboundary flag");
}

TEST(Invariants, QuaternionValues) {
  const InvariantVector v = invariants(quaternion_example(kV));
  EXPECT_EQ(v.dim_u, 1u);
  EXPECT_EQ(v.homology, (HomologyDims{3, 3}));
  EXPECT_EQ(v.cohomology, (std::vector<std::size_t>{0, 0, 0, 0}));
  EXPECT_TRUE(v.jtilde_coboundary);
}

TEST(Distinguish, FirstDifferingField) {
  const LieAlgebra so3 = catalog::so3();
  EXPECT_EQ(distinguish(skeletal_string(so3, 0), skeletal_string(so3, 1)).field, "Jtilde coboundary flag");
  EXPECT_EQ(distinguish(quaternion_example(kV), skeleton(quaternion_example(kV))).field, "dim U");
  EXPECT_EQ(distinguish(skeletal_string(so3, 1), skeletal_string(catalog::heisenberg3(), 1)).field,
            "derived series");
  // so3 and sl2 are not isomorphic over Q, but no invariant here sees it
  EXPECT_FALSE(distinguish(skeletal_string(so3, 1), skeletal_string(catalog::sl2(), 1)).distinguished());
  EXPECT_FALSE(distinguish(skeletal_string(so3, 1), skeletal_string(so3, 2)).distinguished());
}

TEST(Certify, QuaternionExamplesAreIsomorphic) {
  const TwoTermAlgebra a = quaternion_example(kV);
  const TwoTermAlgebra b = quaternion_example({0, 0, 0, 0});
  const auto r = certify_isomorphism(a, b, Matrix::identity(3), Matrix::identity(1), Matrix::identity(3));
  ASSERT_TRUE(std::holds_alternative<Morphism>(r));
  const Morphism& m = std::get<Morphism>(r);
  EXPECT_EQ(*m.source, a);
  EXPECT_EQ(*m.target, b);
  EXPECT_TRUE(verify_morphism(m).passed());
  EXPECT_TRUE(is_isomorphism(m));
}

TEST(Certify, ScaledSkeletalStrings) {
  const LieAlgebra so3 = catalog::so3();
  const TwoTermAlgebra k1 = skeletal_string(so3, 1);
  const TwoTermAlgebra k2 = skeletal_string(so3, 2);
  const auto ok = certify_isomorphism(k1, k2, Matrix::identity(3), Matrix(0, 0), Matrix::from_rows({{2}}));
  ASSERT_TRUE(std::holds_alternative<Morphism>(ok));
  EXPECT_TRUE(verify_morphism(std::get<Morphism>(ok)).passed());
  const auto bad = certify_isomorphism(k1, k2, Matrix::identity(3), Matrix(0, 0), Matrix::identity(1));
  ASSERT_TRUE(std::holds_alternative<CertifyFailure>(bad));
  EXPECT_EQ(std::get<CertifyFailure>(bad), CertifyFailure::NotCohomologous);
  EXPECT_EQ(certify_failure_name(CertifyFailure::NotCohomologous), "cocycles not cohomologous");
}

TEST(Certify, MapFailures) {
  const TwoTermAlgebra a = quaternion_example(kV);
  const Matrix id3 = Matrix::identity(3);
  const Matrix id1 = Matrix::identity(1);
  auto failure = [&](const Matrix& chi, const Matrix& fU, const Matrix& tV) {
    const auto r = certify_isomorphism(a, a, chi, fU, tV);
    EXPECT_TRUE(std::holds_alternative<CertifyFailure>(r));
    return std::holds_alternative<CertifyFailure>(r) ? std::get<CertifyFailure>(r) : CertifyFailure{};
  };
  EXPECT_EQ(failure(2 * id3, id1, id3), CertifyFailure::ChiNotLieIsomorphism);
  EXPECT_EQ(failure(id3, Matrix(1, 1), id3), CertifyFailure::FUNotInvertible);
  EXPECT_EQ(failure(id3, id1, Matrix::from_rows({{1, 0, 0}, {0, 2, 0}, {0, 0, 1}})),
            CertifyFailure::TVNotIntertwiner);
}

TEST(QuadrupleMaps, CyclicAutomorphismRotatesBasis) {
  const Morphism m = between_normal_forms(example27_automorphism(kV));
  ASSERT_TRUE(verify_morphism(m).passed());
  const QuadrupleMaps maps = extract_quadruple_maps(m);
  const Matrix rotation = Matrix::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  EXPECT_EQ(maps.tau, rotation);
  EXPECT_EQ(maps.tV, rotation);
  EXPECT_EQ(maps.fU, Matrix::identity(1));
}

TEST(QuadrupleMaps, WitnessRelationHolds) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const TwoTermAlgebra a = random_algebra(seed);
    Rng rng(seed + 500);
    const auto t = transport(a, random_invertible(rng, a.n0), random_invertible(rng, a.n1),
                             random_antisymmetric(rng, a.n0, a.n1));
    const Morphism m = between_normal_forms(t.morphism);
    const QuadrupleMaps maps = extract_quadruple_maps(m);
    const Quadruple& src = normal_form(a).quadruple;
    const Quadruple& tgt = normal_form(t.algebra).quadruple;
    const Representation pulled = pullback(tgt.rep, maps.tau, src.g);
    const Cochain k = pullback_cochain(tgt.jtilde, maps.tau, src.g.dim);
    Cochain lhs = Cochain::zero(3, src.g.dim, tgt.rep.dimV);
    for (const auto& tup : increasing_tuples(src.g.dim, 3)) {
      Vec v = maps.tV.apply(src.jtilde.at_increasing(tup));
      axpy(v, -1, k.at_increasing(tup));
      lhs.set_increasing(tup, v);
    }
    EXPECT_EQ(delta(maps.witness, pulled), lhs) << "seed " << seed;
    EXPECT_TRUE(is_lie_morphism(maps.tau, src.g, tgt.g));
    EXPECT_TRUE(is_intertwiner(maps.tV, src.rep, pulled));
  }
}

TEST(QuadrupleMaps, RejectsNonNormalEndpoints) {
  const Morphism m = example27_automorphism(kV);
  EXPECT_EQ(code_of([&] { extract_quadruple_maps(m); }), ErrorCode::Structural);
}
