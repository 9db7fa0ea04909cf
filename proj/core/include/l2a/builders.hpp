#ifndef L2A_BUILDERS_HPP
#define L2A_BUILDERS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "l2a/algebra.hpp"
#include "l2a/cohomology.hpp"
#include "l2a/morphism.hpp"
#include "l2a/quadruple.hpp"

namespace l2a {

// ---------------------------------------------------------------------------
// Normal form L^{g,U,rho,Jtilde}
// ---------------------------------------------------------------------------

/// Assembles the algebra with L0 = g (+) U and L1 = V (+) U (g-part and
/// V-part first): d is the identity from the U of L1 onto the U of L0, the
/// bracket comes from g and rho on the g- and V-parts, and J = Jtilde on the
/// g-parts. Throws Error(InvalidQuadruple) naming the failed check.
TwoTermAlgebra normal_form_algebra(const Quadruple& q);

// ---------------------------------------------------------------------------
// Quaternion examples
// ---------------------------------------------------------------------------

/// Quaternion a + b i + c j + d k with rational coefficients.
struct Quaternion {
  Rational re, i, j, k;

  static Quaternion basis(std::size_t index);  // 0 -> 1, 1 -> i, 2 -> j, 3 -> k
  /// Parses "a+bi+cj+dk": any subset of terms, any order, rational
  /// coefficients such as "1/2i" or "-j". Throws Error(Parse).
  static Quaternion parse(std::string_view text);

  Quaternion imaginary() const { return {0, i, j, k}; }
  Vec coords() const { return {re, i, j, k}; }

  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator+(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b);
  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

/// H (+) H with basis (1, i, j, k) in each degree: d = Re, bracket
/// [a + b, c + e] = Im(Im a Im c) + Im(Im a Im e + Im b Im c), and
/// J(i, j, k) = Im v (zero whenever 1 is an argument).
TwoTermAlgebra quaternion_example(const Quaternion& v);

/// Automorphism of quaternion_example(v): phi cycles i -> j -> k -> i in both
/// degrees and fixes 1; Phi(i^j) = Re(v(i-j)) k, Phi(j^k) = Re(v(j-k)) i,
/// Phi(k^i) = Re(v(k-i)) j, and Phi vanishes on pairs containing 1.
Morphism example27_automorphism(const Quaternion& v);

// ---------------------------------------------------------------------------
// Lie algebra catalog
// ---------------------------------------------------------------------------

namespace catalog {

LieAlgebra abelian(std::size_t n);
/// [e0, e1] = e2.
LieAlgebra heisenberg3();
/// Basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
LieAlgebra sl2();
/// [e0, e1] = e2, [e1, e2] = e0, [e2, e0] = e1.
LieAlgebra so3();
/// [e0, e1] = e1.
LieAlgebra nonabelian2();

/// Looks up "abelian<n>", "heisenberg3", "sl2", "so3", "nonabelian2".
LieAlgebra lie_algebra(std::string_view name);

Representation trivial(const LieAlgebra& g, std::size_t n);
Representation adjoint(const LieAlgebra& g);
Representation direct_sum(const Representation& a, const Representation& b);

/// Looks up "zero", "trivial", "trivial<n>", "adjoint", or a '+'-separated
/// direct sum such as "adjoint+trivial1".
Representation representation(const LieAlgebra& g, std::string_view name);

}  // namespace catalog

/// K(x, y) = trace(ad x ad y).
Matrix killing_form(const LieAlgebra& g);

/// normal_form_algebra(g, U = 0, trivial rep on Q, Jtilde = k <x, [y, z]>)
/// with <,> the Killing form.
TwoTermAlgebra skeletal_string(const LieAlgebra& g, const Rational& k);

// ---------------------------------------------------------------------------
// Seeded random instances
// ---------------------------------------------------------------------------

struct RandomProfile {
  std::vector<std::string> lie_algebras{"abelian1", "abelian2", "abelian3", "heisenberg3",
                                        "sl2",      "so3",      "nonabelian2"};
  std::vector<std::string> representations{"zero", "trivial1", "trivial2", "adjoint", "adjoint+trivial1"};
  std::size_t max_n0 = 8;
  std::size_t max_n1 = 8;
  std::size_t max_dim_u = 3;
  /// Random element of the cocycle space; otherwise Jtilde = 0.
  bool random_cocycle = true;
  /// Transport along a random invertible (phi, Phi) with entries in [-2, 2].
  bool transport = true;

  /// Only abelian g, the zero representation, U = 0, no transport.
  static RandomProfile zero_only();
  /// Looks up "default" or "zero".
  static RandomProfile named(std::string_view name);
};

/// Deterministic in (seed, profile); the result is verified before return.
TwoTermAlgebra random_algebra(std::uint64_t seed, const RandomProfile& profile = {});

/// mt19937_64 with a bounded draw that does not depend on the standard
/// library's distribution implementations, so seeds reproduce across
/// toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Integer in [lo, hi] (modulo draw; the bias is irrelevant here).
  long uniform(long lo, long hi);

 private:
  std::mt19937_64 engine_;
};

/// Invertible n x n matrix with entries in [-bound, bound].
Matrix random_invertible(Rng& rng, std::size_t n, long bound = 2);
/// Antisymmetric [n0][n0][m] tensor with entries in [-bound, bound].
Tensor random_antisymmetric(Rng& rng, std::size_t n0, std::size_t m, long bound = 2);

}  // namespace l2a

#endif  // L2A_BUILDERS_HPP
