#ifndef L2A_COHOMOLOGY_HPP
#define L2A_COHOMOLOGY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "l2a/exactla.hpp"
#include "l2a/tensor.hpp"

namespace l2a {

/// Finite-dimensional Lie algebra: [e_i, e_j] = sum_k sc(i, j, k) e_k.
struct LieAlgebra {
  std::size_t dim = 0;
  Tensor sc;  // [dim][dim][dim]

  static LieAlgebra abelian(std::size_t dim);

  Vec bracket(const Vec& x, const Vec& y) const;
  /// Matrix of ad(e_i): column j holds [e_i, e_j].
  Matrix ad(std::size_t i) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.dim == b.dim && a.sc == b.sc; }
};

/// Antisymmetry and Jacobi on basis triples; nullopt if both hold.
std::optional<std::string> lie_algebra_defect(const LieAlgebra& g);

/// Representation rho: g -> gl(V), one dimV x dimV matrix per basis vector.
struct Representation {
  LieAlgebra g;
  std::size_t dimV = 0;
  std::vector<Matrix> rho;

  /// rho(x) for an arbitrary x in g.
  Matrix action(const Vec& x) const;

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.g == b.g && a.dimV == b.dimV && a.rho == b.rho;
  }
};

/// Shape checks and rho([x,y]) = rho(x)rho(y) - rho(y)rho(x) on basis pairs.
std::optional<std::string> representation_defect(const Representation& rep);

// ---------------------------------------------------------------------------
// Increasing index tuples (the canonical basis of the exterior powers)
// ---------------------------------------------------------------------------

std::size_t binomial(std::size_t n, std::size_t k);

/// All strictly increasing k-tuples from {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t k);

/// Position of an increasing tuple in increasing_tuples(n, tuple.size()).
std::size_t tuple_rank(std::span<const std::size_t> tuple, std::size_t n);

/// Alternating n-linear map Lambda^n g -> V. Values are stored on increasing
/// tuples only: values[rank(tuple) * dimV + v], i.e. tuples lexicographic with
/// the V index fastest. This is also the coordinate order of delta_matrix.
struct Cochain {
  std::size_t degree = 0;
  std::size_t dim_g = 0;
  std::size_t dimV = 0;
  Vec values;

  static Cochain zero(std::size_t degree, std::size_t dim_g, std::size_t dimV);

  std::size_t tuple_count() const { return binomial(dim_g, degree); }
  Vec at_increasing(std::span<const std::size_t> tuple) const;
  void set_increasing(std::span<const std::size_t> tuple, const Vec& value);
  /// Value on an arbitrary index tuple: zero on repeats, otherwise the
  /// permutation sign times the sorted value.
  Vec evaluate(std::span<const std::size_t> indices) const;
  /// Value with the first argument an arbitrary vector of g.
  Vec evaluate_first(const Vec& x, std::span<const std::size_t> rest) const;

  bool is_zero() const { return l2a::is_zero(values); }
  friend bool operator==(const Cochain&, const Cochain&) = default;
};

/// Chevalley-Eilenberg differential
///   (delta f)(x_1..x_{n+1}) = sum_{sh(1,n)} sign rho(x_s1) f(x_s2, .., x_s(n+1))
///                           - sum_{sh(2,n-1)} sign f([x_s1, x_s2], x_s3, ..)
/// evaluated on increasing tuples. If n + 1 > dim g the result lives in the
/// zero space and has no values.
Cochain delta(const Cochain& f, const Representation& rep);

/// Matrix of delta: C_n -> C_{n+1} in the increasing-tuple (x) V basis.
Matrix delta_matrix(std::size_t n, const Representation& rep);

bool is_cocycle(const Cochain& f, const Representation& rep);

/// A primitive g with delta(g) = f (free variables zero), if one exists.
/// Requires f.degree >= 1.
std::optional<Cochain> is_coboundary(const Cochain& f, const Representation& rep);

/// dim ker delta_n - rank delta_{n-1}.
std::size_t cohomology_dim(std::size_t n, const Representation& rep);

/// Cocycles whose classes form a basis of H^n: kernel vectors of delta_n that
/// extend a basis of im delta_{n-1}, chosen greedily in kernel-basis order.
std::vector<Cochain> cohomology_basis(std::size_t n, const Representation& rep);

/// psi (dim h x dim g) preserves brackets on basis pairs.
bool is_lie_morphism(const Matrix& psi, const LieAlgebra& g, const LieAlgebra& h);

/// The representation sigma o psi of g.
Representation pullback(const Representation& target, const Matrix& psi, const LieAlgebra& g);

/// t rho(x) = pulled(x) t for every basis vector x of g.
bool is_intertwiner(const Matrix& t, const Representation& source, const Representation& pulled);

/// psi^* K: (x_1..x_n) -> K(psi x_1, .., psi x_n), a cochain on g.
Cochain pullback_cochain(const Cochain& k, const Matrix& psi, std::size_t dim_g);

/// Decides whether J in C_n(g, rho, V) and K in C_n(h, sigma, W) are
/// cohomologous along the given psi: g -> h and t: V -> W, i.e. finds Phi in
/// C_{n-1}(g, sigma o psi, W) with
///   t(J(x_1..x_n)) - K(psi x_1, .., psi x_n) = (delta Phi)(x_1..x_n).
/// Throws Error(NotLieMorphism) / Error(NotIntertwiner) when psi or t fail
/// their checks. Requires n >= 1.
std::optional<Cochain> cohomologous(const Cochain& J, const Representation& source, const Cochain& K,
                                    const Representation& target, const Matrix& psi, const Matrix& t);

}  // namespace l2a

#endif  // L2A_COHOMOLOGY_HPP
