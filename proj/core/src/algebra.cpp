#include "l2a/algebra.hpp"

#include <array>
#include <sstream>

#include "l2a/error.hpp"
#include "report_util.hpp"

namespace l2a {

int permutation_sign(const std::vector<std::size_t>& images) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (images[i] > images[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

namespace {

ShuffleSet build_shuffles(std::size_t m, std::size_t n) {
  ShuffleSet set{m, n, {}};
  const std::size_t total = m + n;
  std::vector<std::size_t> head(m);
  for (std::size_t i = 0; i < m; ++i) head[i] = i;
  while (true) {
    std::vector<bool> used(total, false);
    std::vector<std::size_t> images = head;
    for (auto h : head) used[h] = true;
    for (std::size_t v = 0; v < total; ++v)
      if (!used[v]) images.push_back(v);
    const int sign = permutation_sign(images);
    set.elements.push_back({std::move(images), sign});

    // next combination of size m from {0..total-1} in lexicographic order
    std::size_t i = m;
    while (i > 0 && head[i - 1] == total - m + (i - 1)) --i;
    if (i == 0) break;
    ++head[i - 1];
    for (std::size_t j = i; j < m; ++j) head[j] = head[j - 1] + 1;
  }
  return set;
}

using ShuffleTable = std::array<std::array<ShuffleSet, kMaxShuffleLength + 1>, kMaxShuffleLength + 1>;

const ShuffleTable& shuffle_table() {
  static const ShuffleTable table = [] {
    ShuffleTable t;
    for (std::size_t m = 0; m <= kMaxShuffleLength; ++m)
      for (std::size_t n = 0; m + n <= kMaxShuffleLength; ++n) t[m][n] = build_shuffles(m, n);
    return t;
  }();
  return table;
}

}  // namespace

const ShuffleSet& shuffles(std::size_t m, std::size_t n) {
  if (m + n > kMaxShuffleLength) {
    throw Error(ErrorCode::DimensionMismatch, "shuffles: m + n exceeds the supported length");
  }
  return shuffle_table()[m][n];
}

TwoTermAlgebra TwoTermAlgebra::zero(std::size_t n0, std::size_t n1) {
  TwoTermAlgebra a;
  a.n0 = n0;
  a.n1 = n1;
  a.d = Matrix(n0, n1);
  a.b00 = Tensor({n0, n0, n0});
  a.b01 = Tensor({n0, n1, n1});
  a.jac = Tensor({n0, n0, n0, n1});
  return a;
}

Vec TwoTermAlgebra::bracket00(const Vec& x, const Vec& y) const {
  Vec out(n0);
  for (std::size_t i = 0; i < n0; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n0; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Rational c = x[i] * y[j];
      for (std::size_t k = 0; k < n0; ++k) {
        const Rational& s = b00(i, j, k);
        if (sgn(s) != 0) out[k] += c * s;
      }
    }
  }
  return out;
}

Vec TwoTermAlgebra::bracket01(const Vec& x, const Vec& v) const {
  Vec out(n1);
  for (std::size_t i = 0; i < n0; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n1; ++j) {
      if (sgn(v[j]) == 0) continue;
      const Rational c = x[i] * v[j];
      for (std::size_t k = 0; k < n1; ++k) {
        const Rational& s = b01(i, j, k);
        if (sgn(s) != 0) out[k] += c * s;
      }
    }
  }
  return out;
}

Vec TwoTermAlgebra::jacobiator(const Vec& x, const Vec& y, const Vec& z) const {
  Vec out(n1);
  for (std::size_t i = 0; i < n0; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n0; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < n0; ++k) {
        if (sgn(z[k]) == 0) continue;
        const Rational c = xy * z[k];
        for (std::size_t l = 0; l < n1; ++l) {
          const Rational& s = jac(i, j, k, l);
          if (sgn(s) != 0) out[l] += c * s;
        }
      }
    }
  }
  return out;
}

GradedVector bracket(const TwoTermAlgebra& algebra, const GradedVector& x, const GradedVector& y) {
  if (x.l0.size() != algebra.n0 || y.l0.size() != algebra.n0 || x.l1.size() != algebra.n1 ||
      y.l1.size() != algebra.n1) {
    throw Error(ErrorCode::DimensionMismatch, "bracket: graded vector has wrong dimensions");
  }
  GradedVector out{algebra.bracket00(x.l0, y.l0), algebra.bracket01(x.l0, y.l1)};
  axpy(out.l1, -1, algebra.bracket01(y.l0, x.l1));
  return out;
}

namespace {

std::string tuple_text(std::initializer_list<std::size_t> idx) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (auto i : idx) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << ')';
  return os.str();
}

}  // namespace

std::optional<std::string> structural_defect(const TwoTermAlgebra& a) {
  const std::size_t n0 = a.n0;
  const std::size_t n1 = a.n1;
  if (a.d.rows() != n0 || a.d.cols() != n1) return "d has shape mismatching (n0, n1)";
  if (a.b00.shape() != std::vector<std::size_t>{n0, n0, n0}) return "b00 has wrong shape";
  if (a.b01.shape() != std::vector<std::size_t>{n0, n1, n1}) return "b01 has wrong shape";
  if (a.jac.shape() != std::vector<std::size_t>{n0, n0, n0, n1}) return "jac has wrong shape";

  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = i; j < n0; ++j)
      for (std::size_t k = 0; k < n0; ++k)
        if (a.b00(i, j, k) != -a.b00(j, i, k))
          return "b00 antisymmetry violated at " + tuple_text({i, j});

  // Full antisymmetry follows from antisymmetry under the two adjacent
  // transpositions.
  for (std::size_t i = 0; i < n0; ++i)
    for (std::size_t j = 0; j < n0; ++j)
      for (std::size_t k = 0; k < n0; ++k)
        for (std::size_t l = 0; l < n1; ++l) {
          const Rational& v = a.jac(i, j, k, l);
          if (v != -a.jac(j, i, k, l) || v != -a.jac(i, k, j, l))
            return "jac antisymmetry violated at " + tuple_text({i, j, k});
        }
  return std::nullopt;
}

bool VerificationReport::passed() const {
  if (structural_error) return false;
  for (const auto& e : equations)
    if (!e.passed) return false;
  return true;
}

std::string VerificationReport::describe() const {
  std::ostringstream os;
  if (structural_error) {
    os << "structural error: " << *structural_error << '\n';
    return os.str();
  }
  for (const auto& e : equations) {
    os << (e.passed ? "PASS " : "FAIL ") << e.label;
    if (!e.passed) {
      os << " at (";
      for (std::size_t i = 0; i < e.tuple.size(); ++i) os << (i ? "," : "") << e.tuple[i];
      os << ") discrepancy [";
      for (std::size_t i = 0; i < e.discrepancy.size(); ++i)
        os << (i ? " " : "") << to_string(e.discrepancy[i]);
      os << ']';
    }
    os << '\n';
  }
  return os.str();
}


VerificationReport verify(const TwoTermAlgebra& a) {
  VerificationReport report;
  report.structural_error = structural_defect(a);
  if (report.structural_error) return report;

  const std::size_t n0 = a.n0;
  const std::size_t n1 = a.n1;
  auto e = [n0](std::size_t i) { return unit_vec(n0, i); };
  auto f = [n1](std::size_t i) { return unit_vec(n1, i); };

  EquationResult eq1{"d[x,v] = [x,dv]"};
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t v = 0; v < n1; ++v) {
      const Vec lhs = a.differential(a.bracket01(e(x), f(v)));
      const Vec rhs = a.bracket00(e(x), a.differential(f(v)));
      detail::record(eq1, {x, v}, detail::minus(lhs, rhs));
    }

  EquationResult eq2{"[du,v] = [u,dv]"};
  for (std::size_t u = 0; u < n1; ++u)
    for (std::size_t v = 0; v < n1; ++v) {
      const Vec lhs = a.bracket01(a.differential(f(u)), f(v));
      // [u, dv] = -[dv, u]
      const Vec rhs = detail::minus(Vec(n1), a.bracket01(a.differential(f(v)), f(u)));
      detail::record(eq2, {u, v}, detail::minus(lhs, rhs));
    }

  EquationResult eq3{"dJ(x,y,z) = [x,[y,z]] - [[x,y],z] - [y,[x,z]]"};
  for (std::size_t x = 0; x < n0; ++x)
    for (std::size_t y = x + 1; y < n0; ++y)
      for (std::size_t z = y + 1; z < n0; ++z) {
        const Vec lhs = a.differential(a.jacobiator(e(x), e(y), e(z)));
        Vec rhs = a.bracket00(e(x), a.b00.fibre(y, z));
        axpy(rhs, -1, a.bracket00(a.b00.fibre(x, y), e(z)));
        axpy(rhs, -1, a.bracket00(e(y), a.b00.fibre(x, z)));
        detail::record(eq3, {x, y, z}, detail::minus(lhs, rhs));
      }

  EquationResult eq4{"J(dv,y,z) = [v,[y,z]] - [[v,y],z] - [y,[v,z]]"};
  for (std::size_t v = 0; v < n1; ++v)
    for (std::size_t y = 0; y < n0; ++y)
      for (std::size_t z = y + 1; z < n0; ++z) {
        const Vec lhs = a.jacobiator(a.differential(f(v)), e(y), e(z));
        // [v,w] = -[w,v] for w in L0, so the right side expands to
        // -[[y,z],v] - [z,[y,v]] + [y,[z,v]].
        Vec rhs = detail::minus(Vec(n1), a.bracket01(a.b00.fibre(y, z), f(v)));
        axpy(rhs, -1, a.bracket01(e(z), a.b01.fibre(y, v)));
        axpy(rhs, 1, a.bracket01(e(y), a.b01.fibre(z, v)));
        detail::record(eq4, {v, y, z}, detail::minus(lhs, rhs));
      }

  EquationResult eq5{"sum_sh(1,3) [x,J(x,x,x)] - sum_sh(2,2) J([x,x],x,x) = 0"};
  const auto& sh13 = shuffles(1, 3);
  const auto& sh22 = shuffles(2, 2);
  for (std::size_t i0 = 0; i0 < n0; ++i0)
    for (std::size_t i1 = i0 + 1; i1 < n0; ++i1)
      for (std::size_t i2 = i1 + 1; i2 < n0; ++i2)
        for (std::size_t i3 = i2 + 1; i3 < n0; ++i3) {
          const std::array<std::size_t, 4> x{i0, i1, i2, i3};
          Vec total(n1);
          for (const auto& s : sh13.elements) {
            const auto& p = s.images;
            const Vec j = a.jac.fibre(x[p[1]], x[p[2]], x[p[3]]);
            axpy(total, s.sign, a.bracket01(e(x[p[0]]), j));
          }
          for (const auto& s : sh22.elements) {
            const auto& p = s.images;
            const Vec br = a.b00.fibre(x[p[0]], x[p[1]]);
            axpy(total, -s.sign, a.jacobiator(br, e(x[p[2]]), e(x[p[3]])));
          }
          detail::record(eq5, {i0, i1, i2, i3}, std::move(total));
        }

  report.equations = {std::move(eq1), std::move(eq2), std::move(eq3), std::move(eq4), std::move(eq5)};
  return report;
}

HomologyDims homology_dims(const TwoTermAlgebra& algebra) {
  const std::size_t r = rank(algebra.d);
  return {algebra.n0 - r, algebra.n1 - r};
}

}  // namespace l2a
