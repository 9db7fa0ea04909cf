#ifndef L2A_ALGEBRA_HPP
#define L2A_ALGEBRA_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "l2a/exactla.hpp"
#include "l2a/tensor.hpp"

namespace l2a {

// ---------------------------------------------------------------------------
// Shuffles
// ---------------------------------------------------------------------------

/// A permutation sigma of {0..m+n-1}, stored as images[i] = sigma(i), with
/// its ordinary sign.
struct Shuffle {
  std::vector<std::size_t> images;
  int sign = 1;
};

/// All (m,n)-shuffles: permutations increasing on the first m and on the last
/// n positions, in lexicographic order of their image lists.
struct ShuffleSet {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<Shuffle> elements;
};

inline constexpr std::size_t kMaxShuffleLength = 8;

/// Cached table lookup; requires m + n <= kMaxShuffleLength.
const ShuffleSet& shuffles(std::size_t m, std::size_t n);

/// Sign of an arbitrary permutation given by its image list.
int permutation_sign(const std::vector<std::size_t>& images);

// ---------------------------------------------------------------------------
// 2-term L-infinity algebras
// ---------------------------------------------------------------------------

/// A 2-term L-infinity algebra L1 --d--> L0 given by structure constants
/// with respect to bases e_0.. of L0 and f_0.. of L1:
///
///   d(f_j)          = sum_i d(i, j) e_i
///   [e_i, e_j]      = sum_k b00(i, j, k) e_k
///   [e_i, f_j]      = sum_k b01(i, j, k) f_k      ([f_j, e_i] = -[e_i, f_j])
///   J(e_i, e_j, e_k) = sum_l jac(i, j, k, l) f_l
///
/// The bracket of two degree-1 elements is zero for degree reasons.
struct TwoTermAlgebra {
  std::size_t n0 = 0;
  std::size_t n1 = 0;
  Matrix d;     // n0 x n1
  Tensor b00;   // [n0][n0][n0]
  Tensor b01;   // [n0][n1][n1]
  Tensor jac;   // [n0][n0][n0][n1]

  static TwoTermAlgebra zero(std::size_t n0, std::size_t n1);

  Vec differential(const Vec& v) const { return d.apply(v); }
  /// [x, y] for x, y in L0.
  Vec bracket00(const Vec& x, const Vec& y) const;
  /// [x, v] for x in L0, v in L1.
  Vec bracket01(const Vec& x, const Vec& v) const;
  /// J(x, y, z) for x, y, z in L0.
  Vec jacobiator(const Vec& x, const Vec& y, const Vec& z) const;

  friend bool operator==(const TwoTermAlgebra& a, const TwoTermAlgebra& b) {
    return a.n0 == b.n0 && a.n1 == b.n1 && a.d == b.d && a.b00 == b.b00 && a.b01 == b.b01 &&
           a.jac == b.jac;
  }
};

using AlgebraPtr = std::shared_ptr<const TwoTermAlgebra>;

inline AlgebraPtr share(TwoTermAlgebra algebra) {
  return std::make_shared<const TwoTermAlgebra>(std::move(algebra));
}

/// Element of L0 (+) L1.
struct GradedVector {
  Vec l0;
  Vec l1;
  friend bool operator==(const GradedVector&, const GradedVector&) = default;
};

/// Graded bracket extended bilinearly: degree-0 part [x0,y0], degree-1 part
/// [x0,y1] - [y0,x1]. The [x1,y1] component vanishes.
GradedVector bracket(const TwoTermAlgebra& algebra, const GradedVector& x, const GradedVector& y);

/// Checks shapes and the antisymmetry of b00 and jac. Returns a description
/// of the first violation found, e.g. "b00 antisymmetry violated at (0,0)".
std::optional<std::string> structural_defect(const TwoTermAlgebra& algebra);

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

/// Outcome of one defining identity checked over all basis tuples.
struct EquationResult {
  std::string label;                 // the identity, written out
  bool passed = true;
  std::vector<std::size_t> tuple;    // first failing basis tuple (lexicographic)
  Vec discrepancy;                   // left side minus right side there
};

struct VerificationReport {
  std::optional<std::string> structural_error;
  std::vector<EquationResult> equations;

  bool passed() const;
  /// Human-readable report, one line per identity.
  std::string describe() const;
};

/// Checks the five defining identities of a 2-term L-infinity algebra on
/// basis tuples; multilinearity makes that sufficient. The tuples visited:
///   d[x,v] = [x,dv]          every (e_a, f_b)
///   [du,v] = [u,dv]          every (f_a, f_b)
///   dJ(x,y,z) = Jac(x,y,z)   increasing (a,b,c)
///   J(dv,y,z) = Jac(v,y,z)   every f_p with increasing (b,c)
///   coherence of J           increasing (a,b,c,e)
/// Structural defects are reported instead of running the identities.
VerificationReport verify(const TwoTermAlgebra& algebra);

struct HomologyDims {
  std::size_t h0 = 0;
  std::size_t h1 = 0;
  friend bool operator==(const HomologyDims&, const HomologyDims&) = default;
};

HomologyDims homology_dims(const TwoTermAlgebra& algebra);

}  // namespace l2a

#endif  // L2A_ALGEBRA_HPP
