#ifndef L2A_CLASSIFY_HPP
#define L2A_CLASSIFY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "l2a/algebra.hpp"
#include "l2a/cohomology.hpp"
#include "l2a/morphism.hpp"
#include "l2a/quadruple.hpp"

namespace l2a {

/// L0 = g (+) im(d) and L1 = ker(d) (+) U, chosen deterministically:
/// im(d) from the pivot columns of d, ker(d) from rref, g and U as greedy
/// standard complements.
struct Decomposition {
  Subspace g_basis;
  Subspace imd_basis;
  Subspace kerd_basis;
  Subspace U_basis;
  /// Coordinates of L0 in the basis (g_basis, imd_basis): n0 x n0.
  Matrix l0_coords;
  /// Coordinates of L1 in the basis (kerd_basis, U_basis): n1 x n1.
  Matrix l1_coords;
  /// ker(d) (+) U -> ker(d) (+) im(d), v + u -> v + d(u), in the coordinates
  /// above: identity on ker(d), the matrix of d on U.
  Matrix f;
  /// L0 -> U, x -> f^-1(x^{im d}), in U_basis coordinates: dim U x n0.
  Matrix h;
};

Decomposition decompose(const TwoTermAlgebra& algebra);

/// g with the projected bracket [y,z]^g, dim U, rho(x)(v) = [x,v]^{ker d} on
/// V = ker(d), and
///   Jtilde(x1,x2,x3) = J(x1,x2,x3)^{ker d} - sum_sh(1,2) [x_s1, h([x_s2,x_s3])]^{ker d},
/// all in the bases of the decomposition. Jacobi, the representation law and
/// delta Jtilde = 0 are re-checked; a failure throws Error(Internal).
Quadruple extract_triple(const TwoTermAlgebra& algebra, const Decomposition& dec);

struct AlgebraWithMorphism {
  TwoTermAlgebra algebra;
  Morphism morphism;  // input -> algebra
};

/// The structure induced on L along invertible (phi0, phi1) with homotopy Phi
/// ([n0][n0][n1'] antisymmetric), so that (phi, Phi) becomes an isomorphism
/// onto it. Throws Error(Singular) for singular maps, Error(Structural) for a
/// non-antisymmetric Phi and Error(Internal) if the result fails verification.
AlgebraWithMorphism transport(const TwoTermAlgebra& algebra, const Matrix& phi0, const Matrix& phi1,
                              const Tensor& Phi);

struct NormalForm {
  TwoTermAlgebra algebra;  // normal_form_algebra(quadruple)
  Morphism morphism;       // input -> algebra, an isomorphism
  Quadruple quadruple;     // dim U = rank d
};

/// Normal form with U = im(d) and the isomorphism phi0 = id (+) id,
/// phi1 = id (+) f and
///   Phi(x,y) = ([x, h(y)] - [y^g, h(x)])^{ker d} + [x,y]^{im d}.
NormalForm normal_form(const TwoTermAlgebra& algebra);

/// The normal form with U replaced by 0.
TwoTermAlgebra skeleton(const TwoTermAlgebra& algebra);

// ---------------------------------------------------------------------------
// Invariants
// ---------------------------------------------------------------------------

/// Dimensions of g, [g,g], [[g,g],[g,g]], ... stopping at 0 or at the first
/// repeat (the repeated value is not listed again).
std::vector<std::size_t> derived_series(const LieAlgebra& g);
/// Dimensions of g, [g,g], [g,[g,g]], ... with the same stopping rule.
std::vector<std::size_t> lower_central_series(const LieAlgebra& g);
std::size_t center_dim(const LieAlgebra& g);

struct InvariantVector {
  std::size_t n0 = 0, n1 = 0;
  std::size_t dim_g = 0, dim_u = 0, dim_v = 0;
  HomologyDims homology;
  std::vector<std::size_t> derived;
  std::vector<std::size_t> lower_central;
  std::size_t center = 0;
  std::size_t killing_rank = 0;
  std::vector<std::size_t> cohomology;  // dim H^0 .. H^3 (g, rho, V)
  bool jtilde_coboundary = false;

  /// (name, value) pairs in comparison order; series are comma-joined.
  std::vector<std::pair<std::string, std::string>> fields() const;

  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
};

InvariantVector invariants(const TwoTermAlgebra& algebra);

struct Distinction {
  /// Name of the first differing invariant, or nullopt if all agree.
  std::optional<std::string> field;
  bool distinguished() const { return field.has_value(); }
};

/// Refutes isomorphism by comparing invariant vectors; agreement is
/// inconclusive.
Distinction distinguish(const TwoTermAlgebra& a, const TwoTermAlgebra& b);

// ---------------------------------------------------------------------------
// Certification
// ---------------------------------------------------------------------------

enum class CertifyFailure { ChiNotLieIsomorphism, FUNotInvertible, TVNotIntertwiner, NotCohomologous };

std::string certify_failure_name(CertifyFailure failure);

/// Builds the isomorphism L -> M from chi: g -> g', fU: U -> U' and
/// tV: V -> V' given in the bases of the normal forms of L and M:
/// phi0 = chi (+) fU, phi1 = tV (+) fU, Phi(x,y) = Phi~(x^g, y^g) with Phi~
/// a primitive of tV Jtilde - chi^* Jtilde'. The result is conjugated by the
/// normalizing isomorphisms and verified before return.
std::variant<Morphism, CertifyFailure> certify_isomorphism(const TwoTermAlgebra& l, const TwoTermAlgebra& m,
                                                           const Matrix& chi, const Matrix& fU,
                                                           const Matrix& tV);

struct QuadrupleMaps {
  Matrix tau;       // g -> g'
  Matrix fU;        // U -> U'
  Matrix tV;        // V -> V'
  Cochain witness;  // V'-part of Phi on g ^ g, with tV Jtilde - tau^* Jtilde' = delta(witness)
};

/// Reads the quadruple maps off an isomorphism between normal-form algebras.
/// Throws Error(Structural) if an endpoint is not of normal-form shape and
/// Error(Internal) if one of the derived maps fails its check.
QuadrupleMaps extract_quadruple_maps(const Morphism& m);

}  // namespace l2a

#endif  // L2A_CLASSIFY_HPP
