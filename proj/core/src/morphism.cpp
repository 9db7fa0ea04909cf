#include "l2a/morphism.hpp"

#include <array>

#include "l2a/error.hpp"
#include "report_util.hpp"

namespace l2a {

Vec Morphism::homotopy(const Vec& x, const Vec& y) const {
  const std::size_t n0 = source->n0;
  const std::size_t m1 = target->n1;
  Vec out(m1);
  for (std::size_t i = 0; i < n0; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n0; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Rational c = x[i] * y[j];
      for (std::size_t k = 0; k < m1; ++k) {
        const Rational& s = Phi(i, j, k);
        if (sgn(s) != 0) out[k] += c * s;
      }
    }
  }
  return out;
}

bool operator==(const Morphism& a, const Morphism& b) {
  return *a.source == *b.source && *a.target == *b.target && a.phi0 == b.phi0 && a.phi1 == b.phi1 &&
         a.Phi == b.Phi;
}

Morphism identity_morphism(AlgebraPtr algebra) {
  const std::size_t n0 = algebra->n0;
  const std::size_t n1 = algebra->n1;
  return Morphism{algebra, algebra, Matrix::identity(n0), Matrix::identity(n1), Tensor({n0, n0, n1})};
}

namespace {

void check_shapes(const Morphism& m) {
  if (!m.source || !m.target) throw Error(ErrorCode::DimensionMismatch, "morphism endpoint missing");
  const auto& s = *m.source;
  const auto& t = *m.target;
  if (m.phi0.rows() != t.n0 || m.phi0.cols() != s.n0 || m.phi1.rows() != t.n1 || m.phi1.cols() != s.n1 ||
      m.Phi.shape() != std::vector<std::size_t>{s.n0, s.n0, t.n1}) {
    throw Error(ErrorCode::DimensionMismatch, "morphism maps do not match endpoint dimensions");
  }
}

}  // namespace

VerificationReport verify_morphism(const Morphism& m) {
  check_shapes(m);
  const auto& s = *m.source;
  const auto& t = *m.target;
  VerificationReport report;
  for (std::size_t i = 0; i < s.n0; ++i)
    for (std::size_t j = i; j < s.n0; ++j)
      for (std::size_t k = 0; k < t.n1; ++k)
        if (m.Phi(i, j, k) != -m.Phi(j, i, k)) {
          report.structural_error =
              "Phi antisymmetry violated at (" + std::to_string(i) + "," + std::to_string(j) + ")";
          return report;
        }

  auto e = [&](std::size_t i) { return unit_vec(s.n0, i); };
  auto f = [&](std::size_t i) { return unit_vec(s.n1, i); };

  EquationResult eq6{"phi(dv) = d'(phi v)"};
  const Matrix lhs6 = m.phi0 * s.d;
  const Matrix rhs6 = t.d * m.phi1;
  for (std::size_t v = 0; v < s.n1; ++v)
    detail::record(eq6, {v}, detail::minus(lhs6.column(v), rhs6.column(v)));

  EquationResult eq7{"d'Phi(x,y) = phi[x,y] - [phi x,phi y]'"};
  for (std::size_t x = 0; x < s.n0; ++x)
    for (std::size_t y = x + 1; y < s.n0; ++y) {
      const Vec lhs = t.differential(m.Phi.fibre(x, y));
      Vec rhs = m.phi0.apply(s.b00.fibre(x, y));
      axpy(rhs, -1, t.bracket00(m.phi0.column(x), m.phi0.column(y)));
      detail::record(eq7, {x, y}, detail::minus(lhs, rhs));
    }

  EquationResult eq8{"Phi(dv,y) = phi[v,y] - [phi v,phi y]'"};
  for (std::size_t v = 0; v < s.n1; ++v)
    for (std::size_t y = 0; y < s.n0; ++y) {
      const Vec lhs = m.homotopy(s.differential(f(v)), e(y));
      // [v,y] = -[y,v] and [phi v, phi y]' = -[phi y, phi v]'
      Vec rhs = detail::minus(Vec(t.n1), m.phi1.apply(s.b01.fibre(y, v)));
      axpy(rhs, 1, t.bracket01(m.phi0.column(y), m.phi1.column(v)));
      detail::record(eq8, {v, y}, detail::minus(lhs, rhs));
    }

  EquationResult eq9{"phi J(x,y,z) - J'(phi x,phi y,phi z) = sum_sh(1,2) [phi x,Phi(y,z)]' + Phi(x,[y,z])"};
  const auto& sh12 = shuffles(1, 2);
  for (std::size_t a = 0; a < s.n0; ++a)
    for (std::size_t b = a + 1; b < s.n0; ++b)
      for (std::size_t c = b + 1; c < s.n0; ++c) {
        const std::array<std::size_t, 3> x{a, b, c};
        Vec lhs = m.phi1.apply(s.jac.fibre(a, b, c));
        axpy(lhs, -1, t.jacobiator(m.phi0.column(a), m.phi0.column(b), m.phi0.column(c)));
        Vec rhs(t.n1);
        for (const auto& sh : sh12.elements) {
          const auto& p = sh.images;
          axpy(rhs, sh.sign, t.bracket01(m.phi0.column(x[p[0]]), m.Phi.fibre(x[p[1]], x[p[2]])));
          axpy(rhs, sh.sign, m.homotopy(e(x[p[0]]), s.b00.fibre(x[p[1]], x[p[2]])));
        }
        detail::record(eq9, {a, b, c}, detail::minus(lhs, rhs));
      }

  report.equations = {std::move(eq6), std::move(eq7), std::move(eq8), std::move(eq9)};
  return report;
}

Morphism compose(const Morphism& first, const Morphism& second) {
  check_shapes(first);
  check_shapes(second);
  if (!(*first.target == *second.source)) {
    throw Error(ErrorCode::DimensionMismatch, "compose: first.target is not second.source");
  }
  const std::size_t n0 = first.source->n0;
  const std::size_t m1 = second.target->n1;
  Morphism out{first.source, second.target, second.phi0 * first.phi0, second.phi1 * first.phi1,
               Tensor({n0, n0, m1})};
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t y = 0; y < n0; ++y) {
      Vec psi = second.homotopy(first.phi0.column(x), first.phi0.column(y));
      axpy(psi, 1, second.phi1.apply(first.Phi.fibre(x, y)));
      out.Phi.set_fibre(x, y, psi);
    }
  return out;
}

std::optional<Morphism> inverse(const Morphism& m) {
  check_shapes(m);
  if (!m.phi0.is_square() || !m.phi1.is_square()) return std::nullopt;
  auto inv0 = invert(m.phi0);
  auto inv1 = invert(m.phi1);
  if (!inv0 || !inv1) return std::nullopt;
  const std::size_t n0 = m.target->n0;
  const std::size_t n1 = m.source->n1;
  Morphism out{m.target, m.source, *inv0, *inv1, Tensor({n0, n0, n1})};
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t y = 0; y < n0; ++y) {
      const Vec inner = m.homotopy(inv0->column(x), inv0->column(y));
      Vec value = inv1->apply(inner);
      for (auto& c : value) c = -c;
      out.Phi.set_fibre(x, y, value);
    }
  return out;
}

bool is_isomorphism(const Morphism& m) {
  check_shapes(m);
  return m.phi0.is_square() && m.phi1.is_square() && rank(m.phi0) == m.phi0.rows() &&
         rank(m.phi1) == m.phi1.rows();
}

}  // namespace l2a
