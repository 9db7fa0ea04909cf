#ifndef L2A_MORPHISM_HPP
#define L2A_MORPHISM_HPP

#include <optional>

#include "l2a/algebra.hpp"

namespace l2a {

/// A morphism (phi, Phi): source -> target of 2-term L-infinity algebras.
/// phi0 acts on degree 0, phi1 on degree 1; Phi(e_i ^ e_j) = sum_k Phi(i,j,k) f'_k.
struct Morphism {
  AlgebraPtr source;
  AlgebraPtr target;
  Matrix phi0;  // target.n0 x source.n0
  Matrix phi1;  // target.n1 x source.n1
  Tensor Phi;   // [source.n0][source.n0][target.n1]

  /// Phi(x ^ y) for x, y in the source L0.
  Vec homotopy(const Vec& x, const Vec& y) const;

  /// Field-by-field equality; the endpoint algebras are compared structurally.
  friend bool operator==(const Morphism& a, const Morphism& b);
};

/// (id, 0) on the given algebra.
Morphism identity_morphism(AlgebraPtr algebra);

/// Checks the four morphism identities on basis tuples:
///   phi(dv) = d'(phi v)                                       every f_b
///   d'Phi(x,y) = phi[x,y] - [phi x, phi y]'                    increasing (a,b)
///   Phi(dv,y) = phi[v,y] - [phi v, phi y]'                     every (f_p, e_q)
///   phi J(x1,x2,x3) - J'(phi x1, phi x2, phi x3)
///       = sum_sh(1,2) [phi x, Phi(x,x)]' + Phi(x,[x,x])         increasing (a,b,c)
/// Throws Error(DimensionMismatch) when the maps do not fit the endpoints;
/// antisymmetry violations in Phi are reported as structural errors.
VerificationReport verify_morphism(const Morphism& m);

/// "Apply first, then second": returns (second.phi o first.phi, Psi) with
/// Psi(x,y) = second.Phi(first.phi0 x, first.phi0 y) + second.phi1(first.Phi(x,y)).
/// Requires first.target and second.source to be the same algebra.
Morphism compose(const Morphism& first, const Morphism& second);

/// (phi^-1, Phi') with Phi'(x,y) = -phi1^-1 Phi(phi0^-1 x, phi0^-1 y), or
/// nullopt when phi0 or phi1 is singular.
std::optional<Morphism> inverse(const Morphism& m);

/// phi0 and phi1 both invertible.
bool is_isomorphism(const Morphism& m);

}  // namespace l2a

#endif  // L2A_MORPHISM_HPP
