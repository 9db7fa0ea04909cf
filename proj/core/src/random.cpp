#include <algorithm>

#include "l2a/builders.hpp"
#include "l2a/classify.hpp"
#include "l2a/error.hpp"

namespace l2a {

long Rng::uniform(long lo, long hi) {
  const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % range);
}

Matrix random_invertible(Rng& rng, std::size_t n, long bound) {
  while (true) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = rng.uniform(-bound, bound);
    if (rank(m) == n) return m;
  }
}

Tensor random_antisymmetric(Rng& rng, std::size_t n0, std::size_t m, long bound) {
  Tensor t({n0, n0, m});
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = i + 1; j < n0; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const Rational value = rng.uniform(-bound, bound);
        t(i, j, k) = value;
        t(j, i, k) = -value;
      }
  return t;
}

RandomProfile RandomProfile::zero_only() {
  RandomProfile p;
  p.lie_algebras = {"abelian0", "abelian1", "abelian2", "abelian3"};
  p.representations = {"zero"};
  p.max_dim_u = 0;
  p.random_cocycle = false;
  p.transport = false;
  return p;
}

RandomProfile RandomProfile::named(std::string_view name) {
  if (name == "default") return RandomProfile{};
  if (name == "zero") return zero_only();
  throw Error(ErrorCode::Parse, "unknown random profile: " + std::string(name));
}

TwoTermAlgebra random_algebra(std::uint64_t seed, const RandomProfile& profile) {
  if (profile.lie_algebras.empty() || profile.representations.empty())
    throw Error(ErrorCode::Parse, "random profile has an empty catalog selection");
  Rng rng(seed);
  auto pick = [&](const std::vector<std::string>& names) -> const std::string& {
    return names[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(names.size()) - 1))];
  };

  constexpr int kAttempts = 64;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const LieAlgebra g = catalog::lie_algebra(pick(profile.lie_algebras));
    const Representation rep = catalog::representation(g, pick(profile.representations));
    if (g.dim > profile.max_n0 || rep.dimV > profile.max_n1) continue;
    const std::size_t u_bound =
        std::min({profile.max_dim_u, profile.max_n0 - g.dim, profile.max_n1 - rep.dimV});
    const auto dim_u = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(u_bound)));

    Cochain jtilde = Cochain::zero(3, g.dim, rep.dimV);
    if (profile.random_cocycle) {
      for (const auto& z : kernel_basis(delta_matrix(3, rep)).basis) axpy(jtilde.values, rng.uniform(-2, 2), z);
    }
    TwoTermAlgebra algebra = normal_form_algebra(Quadruple{g, dim_u, rep, std::move(jtilde)});
    if (profile.transport) {
      const Matrix phi0 = random_invertible(rng, algebra.n0);
      const Matrix phi1 = random_invertible(rng, algebra.n1);
      const Tensor Phi = random_antisymmetric(rng, algebra.n0, algebra.n1);
      algebra = transport(algebra, phi0, phi1, Phi).algebra;
    }
    if (const auto report = verify(algebra); !report.passed())
      throw Error(ErrorCode::Internal, "random algebra fails verification: " + report.describe());
    return algebra;
  }
  throw Error(ErrorCode::Parse, "random profile admits no catalog entry within its dimension bounds");
}

}  // namespace l2a
