#include "l2a/classify.hpp"

#include <algorithm>
#include <array>

#include "l2a/builders.hpp"
#include "l2a/error.hpp"

namespace l2a {

namespace {

Error internal(const std::string& what) { return Error(ErrorCode::Internal, what); }

std::vector<Vec> concat(std::vector<Vec> a, const std::vector<Vec>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Matrix invert_or_throw(const Matrix& m, const std::string& what) {
  if (m.rows() == 0 && m.cols() == 0) return m;
  auto inv = invert(m);
  if (!inv) throw internal(what + " is singular");
  return *inv;
}

bool invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

/// Phi(x, y) for arbitrary x, y given a [n][n][k] tensor.
Vec apply_bilinear(const Tensor& t, const Vec& x, const Vec& y) {
  const std::size_t n = t.extent(0);
  Vec out(t.extent(2));
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Rational c = x[i] * y[j];
      for (std::size_t k = 0; k < out.size(); ++k)
        if (sgn(t(i, j, k)) != 0) out[k] += c * t(i, j, k);
    }
  }
  return out;
}

/// Reads the quadruple off an algebra of normal-form shape, or nullopt.
std::optional<Quadruple> read_normal_form(const TwoTermAlgebra& algebra) {
  const std::size_t u = rank(algebra.d);
  if (u > algebra.n0 || u > algebra.n1) return std::nullopt;
  const std::size_t m = algebra.n0 - u;
  const std::size_t dimV = algebra.n1 - u;
  Quadruple q{LieAlgebra::abelian(m), u, {}, Cochain::zero(3, m, dimV)};
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) q.g.sc(a, b, c) = algebra.b00(a, b, c);
  q.rep = catalog::trivial(q.g, dimV);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t p = 0; p < dimV; ++p)
      for (std::size_t r = 0; r < dimV; ++r) q.rep.rho[a](r, p) = algebra.b01(a, p, r);
  for (const auto& t : increasing_tuples(m, 3)) {
    Vec value(dimV);
    for (std::size_t l = 0; l < dimV; ++l) value[l] = algebra.jac(t[0], t[1], t[2], l);
    q.jtilde.set_increasing(t, value);
  }
  try {
    if (!(normal_form_algebra(q) == algebra)) return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
  return q;
}

}  // namespace

Decomposition decompose(const TwoTermAlgebra& algebra) {
  const std::size_t n0 = algebra.n0;
  const std::size_t n1 = algebra.n1;
  Decomposition dec;
  dec.imd_basis = image_basis(algebra.d);
  dec.g_basis = complement(dec.imd_basis);
  dec.kerd_basis = kernel_basis(algebra.d);
  dec.U_basis = complement(dec.kerd_basis);
  const std::size_t m = dec.g_basis.dim();
  const std::size_t u = dec.U_basis.dim();
  const std::size_t dimV = dec.kerd_basis.dim();

  dec.l0_coords = invert_or_throw(Matrix::from_columns(n0, concat(dec.g_basis.basis, dec.imd_basis.basis)),
                                  "L0 basis");
  dec.l1_coords = invert_or_throw(Matrix::from_columns(n1, concat(dec.kerd_basis.basis, dec.U_basis.basis)),
                                  "L1 basis");
  const Matrix imd_coords = dec.l0_coords.block(m, 0, u, n0);
  Matrix d_on_u(u, u);
  for (std::size_t q = 0; q < u; ++q) {
    const Vec image = imd_coords.apply(algebra.differential(dec.U_basis.basis[q]));
    for (std::size_t r = 0; r < u; ++r) d_on_u(r, q) = image[r];
  }
  dec.f = direct_sum(Matrix::identity(dimV), d_on_u);
  dec.h = invert_or_throw(d_on_u, "d restricted to U") * imd_coords;
  return dec;
}

Quadruple extract_triple(const TwoTermAlgebra& algebra, const Decomposition& dec) {
  const std::size_t n0 = algebra.n0;
  const std::size_t n1 = algebra.n1;
  const std::size_t m = dec.g_basis.dim();
  const std::size_t dimV = dec.kerd_basis.dim();
  const auto& G = dec.g_basis.basis;
  const auto& K = dec.kerd_basis.basis;
  const Matrix to_g = dec.l0_coords.block(0, 0, m, n0);
  const Matrix to_kerd = dec.l1_coords.block(0, 0, dimV, n1);
  const Matrix u_mat = dec.U_basis.as_matrix();
  auto h_in_l1 = [&](const Vec& x) { return u_mat.apply(dec.h.apply(x)); };

  Quadruple q{LieAlgebra::abelian(m), dec.U_basis.dim(), {}, Cochain::zero(3, m, dimV)};
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) q.g.sc.set_fibre(a, b, to_g.apply(algebra.bracket00(G[a], G[b])));
  q.rep = catalog::trivial(q.g, dimV);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t p = 0; p < dimV; ++p) {
      const Vec image = to_kerd.apply(algebra.bracket01(G[a], K[p]));
      for (std::size_t r = 0; r < dimV; ++r) q.rep.rho[a](r, p) = image[r];
    }
  const auto& sh12 = shuffles(1, 2);
  for (const auto& t : increasing_tuples(m, 3)) {
    const std::array<const Vec*, 3> x{&G[t[0]], &G[t[1]], &G[t[2]]};
    Vec value = algebra.jacobiator(*x[0], *x[1], *x[2]);
    for (const auto& s : sh12.elements) {
      const auto& p = s.images;
      axpy(value, -s.sign, algebra.bracket01(*x[p[0]], h_in_l1(algebra.bracket00(*x[p[1]], *x[p[2]]))));
    }
    q.jtilde.set_increasing(t, to_kerd.apply(value));
  }

  if (auto defect = lie_algebra_defect(q.g)) throw internal("extracted bracket: " + *defect);
  if (auto defect = representation_defect(q.rep)) throw internal("extracted representation: " + *defect);
  if (!is_cocycle(q.jtilde, q.rep)) throw internal("extracted Jtilde is not a cocycle");
  return q;
}

AlgebraWithMorphism transport(const TwoTermAlgebra& algebra, const Matrix& phi0, const Matrix& phi1,
                              const Tensor& Phi) {
  const std::size_t n0 = algebra.n0;
  const std::size_t n1 = algebra.n1;
  if (phi0.rows() != n0 || phi0.cols() != n0 || phi1.rows() != n1 || phi1.cols() != n1 ||
      Phi.shape() != std::vector<std::size_t>{n0, n0, n1}) {
    throw Error(ErrorCode::DimensionMismatch, "transport: maps do not match the algebra");
  }
  const auto inv0 = n0 == 0 ? std::optional<Matrix>(phi0) : invert(phi0);
  const auto inv1 = n1 == 0 ? std::optional<Matrix>(phi1) : invert(phi1);
  if (!inv0 || !inv1) throw Error(ErrorCode::Singular, "transport: phi is not invertible");
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = i; j < n0; ++j)
      for (std::size_t k = 0; k < n1; ++k)
        if (Phi(i, j, k) != -Phi(j, i, k))
          throw Error(ErrorCode::Structural,
                    "Phi antisymmetry violated at (" + std::to_string(i) + "," + std::to_string(j) + ")");

  TwoTermAlgebra out = TwoTermAlgebra::zero(n0, n1);
  out.d = phi0 * algebra.d * *inv1;
  std::vector<Vec> X(n0), Y(n1);
  for (std::size_t a = 0; a < n0; ++a) X[a] = inv0->column(a);
  for (std::size_t b = 0; b < n1; ++b) Y[b] = inv1->column(b);

  for (std::size_t a = 0; a < n0; ++a)
    for (std::size_t b = 0; b < n0; ++b) {
      Vec value = phi0.apply(algebra.bracket00(X[a], X[b]));
      axpy(value, -1, out.differential(apply_bilinear(Phi, X[a], X[b])));
      out.b00.set_fibre(a, b, value);
    }
  for (std::size_t a = 0; a < n0; ++a)
    for (std::size_t b = 0; b < n1; ++b) {
      Vec value = phi1.apply(algebra.bracket01(X[a], Y[b]));
      axpy(value, 1, apply_bilinear(Phi, algebra.differential(Y[b]), X[a]));
      out.b01.set_fibre(a, b, value);
    }
  const auto& sh12 = shuffles(1, 2);
  for (const auto& t : increasing_tuples(n0, 3)) {
    const std::array<std::size_t, 3> idx{t[0], t[1], t[2]};
    Vec value = phi1.apply(algebra.jacobiator(X[idx[0]], X[idx[1]], X[idx[2]]));
    for (const auto& s : sh12.elements) {
      const auto& p = s.images;
      const Vec& x1 = X[idx[p[0]]];
      const Vec& x2 = X[idx[p[1]]];
      const Vec& x3 = X[idx[p[2]]];
      axpy(value, -s.sign, out.bracket01(unit_vec(n0, idx[p[0]]), apply_bilinear(Phi, x2, x3)));
      axpy(value, -s.sign, apply_bilinear(Phi, x1, algebra.bracket00(x2, x3)));
    }
    // fill all orderings of the index triple
    std::array<std::size_t, 3> perm{0, 1, 2};
    do {
      const int sign = permutation_sign({perm[0], perm[1], perm[2]});
      Vec signed_value = value;
      if (sign < 0)
        for (auto& c : signed_value) c = -c;
      out.jac.set_fibre(idx[perm[0]], idx[perm[1]], idx[perm[2]], signed_value);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  auto source = share(algebra);
  auto target = share(std::move(out));
  Morphism morphism{source, target, phi0, phi1, Phi};
  if (const auto report = verify(*target); !report.passed())
    throw internal("transported algebra fails verification: " + report.describe());
  if (const auto report = verify_morphism(morphism); !report.passed())
    throw internal("transport morphism fails verification: " + report.describe());
  return {*target, std::move(morphism)};
}

NormalForm normal_form(const TwoTermAlgebra& algebra) {
  const std::size_t n0 = algebra.n0;
  const std::size_t n1 = algebra.n1;
  const Decomposition dec = decompose(algebra);
  Quadruple q = extract_triple(algebra, dec);
  const std::size_t m = q.g.dim;
  const std::size_t u = q.dim_u;
  const std::size_t dimV = q.rep.dimV;
  auto target = share(normal_form_algebra(q));

  const Matrix to_g = dec.l0_coords.block(0, 0, m, n0);
  const Matrix to_imd = dec.l0_coords.block(m, 0, u, n0);
  const Matrix to_kerd = dec.l1_coords.block(0, 0, dimV, n1);
  const Matrix g_mat = dec.g_basis.as_matrix();
  const Matrix u_mat = dec.U_basis.as_matrix();
  auto h_in_l1 = [&](const Vec& x) { return u_mat.apply(dec.h.apply(x)); };

  Tensor Phi({n0, n0, dimV + u});
  for (std::size_t a = 0; a < n0; ++a)
    for (std::size_t b = 0; b < n0; ++b) {
      const Vec x = unit_vec(n0, a);
      const Vec y = unit_vec(n0, b);
      const Vec y_g = g_mat.apply(to_g.apply(y));
      Vec inner = algebra.bracket01(x, h_in_l1(y));
      axpy(inner, -1, algebra.bracket01(y_g, h_in_l1(x)));
      Vec value = to_kerd.apply(inner);
      const Vec u_part = to_imd.apply(algebra.bracket00(x, y));
      value.insert(value.end(), u_part.begin(), u_part.end());
      Phi.set_fibre(a, b, value);
    }

  Morphism morphism{share(algebra), target, dec.l0_coords, dec.f * dec.l1_coords, std::move(Phi)};
  if (const auto report = verify_morphism(morphism); !report.passed())
    throw internal("normalizing morphism fails verification: " + report.describe());
  if (!is_isomorphism(morphism)) throw internal("normalizing morphism is not invertible");
  return {*target, std::move(morphism), std::move(q)};
}

TwoTermAlgebra skeleton(const TwoTermAlgebra& algebra) {
  Quadruple q = extract_triple(algebra, decompose(algebra));
  q.dim_u = 0;
  return normal_form_algebra(q);
}

// ---------------------------------------------------------------------------
// Invariants
// ---------------------------------------------------------------------------

namespace {

std::vector<Vec> span_of_brackets(const LieAlgebra& g, const std::vector<Vec>& left, const std::vector<Vec>& right) {
  std::vector<Vec> brackets;
  for (const auto& x : left)
    for (const auto& y : right) brackets.push_back(g.bracket(x, y));
  if (brackets.empty()) return {};
  return image_basis(Matrix::from_columns(g.dim, brackets)).basis;
}

std::vector<Vec> standard_basis(std::size_t n) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vec(n, i));
  return out;
}

template <typename Next>
std::vector<std::size_t> series(const LieAlgebra& g, Next next) {
  std::vector<Vec> current = standard_basis(g.dim);
  std::vector<std::size_t> dims{current.size()};
  while (!current.empty()) {
    current = next(current);
    if (current.size() == dims.back()) break;
    dims.push_back(current.size());
  }
  return dims;
}

std::string join(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> derived_series(const LieAlgebra& g) {
  return series(g, [&](const std::vector<Vec>& s) { return span_of_brackets(g, s, s); });
}

std::vector<std::size_t> lower_central_series(const LieAlgebra& g) {
  const auto all = standard_basis(g.dim);
  return series(g, [&](const std::vector<Vec>& s) { return span_of_brackets(g, all, s); });
}

std::size_t center_dim(const LieAlgebra& g) {
  // x is central iff ad(x) = 0, a linear condition on the coordinates of x
  Matrix conditions(g.dim * g.dim, g.dim);
  for (std::size_t a = 0; a < g.dim; ++a)
    for (std::size_t b = 0; b < g.dim; ++b)
      for (std::size_t c = 0; c < g.dim; ++c) conditions(b * g.dim + c, a) = g.sc(a, b, c);
  return g.dim - rank(conditions);
}

std::vector<std::pair<std::string, std::string>> InvariantVector::fields() const {
  std::vector<std::pair<std::string, std::string>> out{
      {"dim g", std::to_string(dim_g)},
      {"dim U", std::to_string(dim_u)},
      {"dim V", std::to_string(dim_v)},
      {"n0", std::to_string(n0)},
      {"n1", std::to_string(n1)},
      {"h0", std::to_string(homology.h0)},
      {"h1", std::to_string(homology.h1)},
      {"derived series", join(derived)},
      {"lower central series", join(lower_central)},
      {"center", std::to_string(center)},
      {"Killing rank", std::to_string(killing_rank)},
  };
  for (std::size_t n = 0; n < cohomology.size(); ++n)
    out.emplace_back("H" + std::to_string(n), std::to_string(cohomology[n]));
  out.emplace_back("Jtilde coboundary flag", jtilde_coboundary ? "true" : "false");
  return out;
}

InvariantVector invariants(const TwoTermAlgebra& algebra) {
  const Quadruple q = extract_triple(algebra, decompose(algebra));
  InvariantVector inv;
  inv.n0 = algebra.n0;
  inv.n1 = algebra.n1;
  inv.dim_g = q.g.dim;
  inv.dim_u = q.dim_u;
  inv.dim_v = q.rep.dimV;
  inv.homology = homology_dims(algebra);
  inv.derived = derived_series(q.g);
  inv.lower_central = lower_central_series(q.g);
  inv.center = center_dim(q.g);
  inv.killing_rank = rank(killing_form(q.g));
  for (std::size_t n = 0; n <= 3; ++n) inv.cohomology.push_back(cohomology_dim(n, q.rep));
  inv.jtilde_coboundary = is_coboundary(q.jtilde, q.rep).has_value();
  return inv;
}

Distinction distinguish(const TwoTermAlgebra& a, const TwoTermAlgebra& b) {
  const auto fa = invariants(a).fields();
  const auto fb = invariants(b).fields();
  for (std::size_t i = 0; i < fa.size(); ++i)
    if (fa[i].second != fb[i].second) return {fa[i].first};
  return {};
}

// ---------------------------------------------------------------------------
// Certification
// ---------------------------------------------------------------------------

std::string certify_failure_name(CertifyFailure failure) {
  switch (failure) {
    case CertifyFailure::ChiNotLieIsomorphism: return "chi is not a Lie algebra isomorphism";
    case CertifyFailure::FUNotInvertible: return "fU is not invertible";
    case CertifyFailure::TVNotIntertwiner: return "tV is not an invertible intertwiner over chi";
    case CertifyFailure::NotCohomologous: return "cocycles not cohomologous";
  }
  return "unknown failure";
}

std::variant<Morphism, CertifyFailure> certify_isomorphism(const TwoTermAlgebra& l, const TwoTermAlgebra& m,
                                                           const Matrix& chi, const Matrix& fU,
                                                           const Matrix& tV) {
  const NormalForm nl = normal_form(l);
  const NormalForm nm = normal_form(m);
  const Quadruple& p = nl.quadruple;
  const Quadruple& q = nm.quadruple;

  if (chi.rows() != q.g.dim || chi.cols() != p.g.dim || !invertible(chi) || !is_lie_morphism(chi, p.g, q.g))
    return CertifyFailure::ChiNotLieIsomorphism;
  if (fU.rows() != q.dim_u || fU.cols() != p.dim_u || !invertible(fU)) return CertifyFailure::FUNotInvertible;
  if (tV.rows() != q.rep.dimV || tV.cols() != p.rep.dimV || !invertible(tV) ||
      !is_intertwiner(tV, p.rep, pullback(q.rep, chi, p.g)))
    return CertifyFailure::TVNotIntertwiner;
  const auto primitive = cohomologous(p.jtilde, p.rep, q.jtilde, q.rep, chi, tV);
  if (!primitive) return CertifyFailure::NotCohomologous;

  const std::size_t n0 = nl.algebra.n0;
  const std::size_t target_n1 = nm.algebra.n1;
  Tensor Phi({n0, n0, target_n1});
  for (std::size_t a = 0; a < p.g.dim; ++a)
    for (std::size_t b = 0; b < p.g.dim; ++b) {
      const std::array<std::size_t, 2> idx{a, b};
      const Vec value = primitive->evaluate(idx);
      for (std::size_t r = 0; r < value.size(); ++r) Phi(a, b, r) = value[r];
    }
  Morphism core{nl.morphism.target, nm.morphism.target, direct_sum(chi, fU), direct_sum(tV, fU), std::move(Phi)};
  if (const auto report = verify_morphism(core); !report.passed())
    throw internal("assembled isomorphism fails verification: " + report.describe());

  const auto back = inverse(nm.morphism);
  if (!back) throw internal("normalizing morphism is not invertible");
  Morphism result = compose(compose(nl.morphism, core), *back);
  if (const auto report = verify_morphism(result); !report.passed())
    throw internal("certified isomorphism fails verification: " + report.describe());
  return result;
}

QuadrupleMaps extract_quadruple_maps(const Morphism& m) {
  const auto p = read_normal_form(*m.source);
  const auto q = read_normal_form(*m.target);
  if (!p || !q) throw Error(ErrorCode::Structural, "extract_quadruple_maps: endpoint is not in normal form");
  if (!is_isomorphism(m)) throw internal("extract_quadruple_maps: morphism is not an isomorphism");

  const std::size_t mg = p->g.dim;
  const std::size_t mg2 = q->g.dim;
  QuadrupleMaps out;
  out.tau = m.phi0.block(0, 0, mg2, mg);
  out.fU = m.phi0.block(mg2, mg, q->dim_u, p->dim_u);
  out.tV = m.phi1.block(0, 0, q->rep.dimV, p->rep.dimV);
  out.witness = Cochain::zero(2, mg, q->rep.dimV);
  for (const auto& t : increasing_tuples(mg, 2)) {
    Vec value(q->rep.dimV);
    for (std::size_t r = 0; r < value.size(); ++r) value[r] = m.Phi(t[0], t[1], r);
    out.witness.set_increasing(t, value);
  }

  if (!invertible(out.tau) || !is_lie_morphism(out.tau, p->g, q->g)) throw internal("tau is not a Lie isomorphism");
  if (!invertible(out.fU)) throw internal("fU is not invertible");
  const Representation pulled = pullback(q->rep, out.tau, p->g);
  if (!invertible(out.tV) || !is_intertwiner(out.tV, p->rep, pulled))
    throw internal("tV is not an intertwiner isomorphism");
  const Cochain pulled_j = pullback_cochain(q->jtilde, out.tau, mg);
  Cochain expected = Cochain::zero(3, mg, q->rep.dimV);
  for (const auto& t : increasing_tuples(mg, 3)) {
    Vec value = out.tV.apply(p->jtilde.at_increasing(t));
    axpy(value, -1, pulled_j.at_increasing(t));
    expected.set_increasing(t, value);
  }
  if (!(delta(out.witness, pulled) == expected)) throw internal("witness does not relate the cocycles");
  return out;
}

}  // namespace l2a
