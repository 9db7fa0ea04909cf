#include "l2a/builders.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <string>

#include "l2a/error.hpp"

namespace l2a {

TwoTermAlgebra normal_form_algebra(const Quadruple& q) {
  auto invalid = [](const std::string& what) { return Error(ErrorCode::InvalidQuadruple, what); };
  if (auto defect = lie_algebra_defect(q.g)) throw invalid("g: " + *defect);
  if (!(q.rep.g == q.g)) throw invalid("representation is not defined on g");
  if (auto defect = representation_defect(q.rep)) throw invalid("rho: " + *defect);
  const std::size_t m = q.g.dim;
  const std::size_t dimV = q.rep.dimV;
  const std::size_t u = q.dim_u;
  if (q.jtilde.degree != 3 || q.jtilde.dim_g != m || q.jtilde.dimV != dimV ||
      q.jtilde.values.size() != binomial(m, 3) * dimV) {
    throw invalid("Jtilde is not a 3-cochain on g with values in V");
  }
  if (!is_cocycle(q.jtilde, q.rep)) throw invalid("Jtilde is not a cocycle");

  TwoTermAlgebra out = TwoTermAlgebra::zero(m + u, dimV + u);
  for (std::size_t p = 0; p < u; ++p) out.d(m + p, dimV + p) = 1;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) out.b00(a, b, c) = q.g.sc(a, b, c);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t p = 0; p < dimV; ++p)
      for (std::size_t r = 0; r < dimV; ++r) out.b01(a, p, r) = q.rep.rho[a](r, p);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        const std::array<std::size_t, 3> idx{a, b, c};
        const Vec value = q.jtilde.evaluate(idx);
        for (std::size_t l = 0; l < dimV; ++l) out.jac(a, b, c, l) = value[l];
      }
  return out;
}

// ---------------------------------------------------------------------------
// Quaternions
// ---------------------------------------------------------------------------

Quaternion Quaternion::basis(std::size_t index) {
  Quaternion q{0, 0, 0, 0};
  switch (index) {
    case 0: q.re = 1; break;
    case 1: q.i = 1; break;
    case 2: q.j = 1; break;
    case 3: q.k = 1; break;
    default: throw Error(ErrorCode::DimensionMismatch, "quaternion basis index out of range");
  }
  return q;
}

Quaternion Quaternion::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw Error(ErrorCode::Parse, "empty quaternion");
  Quaternion q{0, 0, 0, 0};
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1;
      ++pos;
    } else if (pos != 0) {
      throw Error(ErrorCode::Parse, "malformed quaternion: " + s);
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    pos = end;
    if (term.empty()) throw Error(ErrorCode::Parse, "malformed quaternion: " + s);
    Rational* slot = &q.re;
    const char unit = term.back();
    if (unit == 'i' || unit == 'j' || unit == 'k') {
      slot = unit == 'i' ? &q.i : unit == 'j' ? &q.j : &q.k;
      term.pop_back();
      if (term.empty()) term = "1";
    }
    *slot += sign * parse_rational(term);
  }
  return q;
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.re * b.re - a.i * b.i - a.j * b.j - a.k * b.k, a.re * b.i + a.i * b.re + a.j * b.k - a.k * b.j,
          a.re * b.j - a.i * b.k + a.j * b.re + a.k * b.i, a.re * b.k + a.i * b.j - a.j * b.i + a.k * b.re};
}

Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.re + b.re, a.i + b.i, a.j + b.j, a.k + b.k};
}

Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.re - b.re, a.i - b.i, a.j - b.j, a.k - b.k};
}

TwoTermAlgebra quaternion_example(const Quaternion& v) {
  TwoTermAlgebra out = TwoTermAlgebra::zero(4, 4);
  out.d(0, 0) = 1;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t c = 0; c < 4; ++c) {
      const Vec p = (Quaternion::basis(a).imaginary() * Quaternion::basis(c).imaginary()).imaginary().coords();
      for (std::size_t r = 0; r < 4; ++r) {
        out.b00(a, c, r) = p[r];
        out.b01(a, c, r) = p[r];
      }
    }
  const Vec im = v.imaginary().coords();
  for (std::size_t a = 1; a < 4; ++a)
    for (std::size_t b = 1; b < 4; ++b)
      for (std::size_t c = 1; c < 4; ++c) {
        if (a == b || b == c || a == c) continue;
        const int s = permutation_sign({a - 1, b - 1, c - 1});
        for (std::size_t r = 0; r < 4; ++r) out.jac(a, b, c, r) = s * im[r];
      }
  return out;
}

Morphism example27_automorphism(const Quaternion& v) {
  auto algebra = share(quaternion_example(v));
  Matrix phi(4, 4);
  phi(0, 0) = 1;
  phi(2, 1) = 1;  // i -> j
  phi(3, 2) = 1;  // j -> k
  phi(1, 3) = 1;  // k -> i
  Tensor Phi({4, 4, 4});
  auto set = [&](std::size_t x, std::size_t y, std::size_t target, const Quaternion& diff) {
    const Rational c = (v * diff).re;
    Phi(x, y, target) = c;
    Phi(y, x, target) = -c;
  };
  const auto i = Quaternion::basis(1);
  const auto j = Quaternion::basis(2);
  const auto k = Quaternion::basis(3);
  set(1, 2, 3, i - j);
  set(2, 3, 1, j - k);
  set(3, 1, 2, k - i);
  return Morphism{algebra, algebra, phi, phi, std::move(Phi)};
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

namespace catalog {

namespace {

void set_bracket(LieAlgebra& g, std::size_t a, std::size_t b, std::size_t c, const Rational& value) {
  g.sc(a, b, c) = value;
  g.sc(b, a, c) = -value;
}

std::optional<std::size_t> suffix_number(std::string_view name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
  const auto digits = name.substr(prefix.size());
  if (digits.empty()) return std::nullopt;
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  return n;
}

}  // namespace

LieAlgebra abelian(std::size_t n) { return LieAlgebra::abelian(n); }

LieAlgebra heisenberg3() {
  auto g = LieAlgebra::abelian(3);
  set_bracket(g, 0, 1, 2, 1);
  return g;
}

LieAlgebra sl2() {
  auto g = LieAlgebra::abelian(3);
  set_bracket(g, 0, 1, 1, 2);
  set_bracket(g, 0, 2, 2, -2);
  set_bracket(g, 1, 2, 0, 1);
  return g;
}

LieAlgebra so3() {
  auto g = LieAlgebra::abelian(3);
  set_bracket(g, 0, 1, 2, 1);
  set_bracket(g, 1, 2, 0, 1);
  set_bracket(g, 2, 0, 1, 1);
  return g;
}

LieAlgebra nonabelian2() {
  auto g = LieAlgebra::abelian(2);
  set_bracket(g, 0, 1, 1, 1);
  return g;
}

LieAlgebra lie_algebra(std::string_view name) {
  if (name == "heisenberg3") return heisenberg3();
  if (name == "sl2") return sl2();
  if (name == "so3") return so3();
  if (name == "nonabelian2") return nonabelian2();
  if (auto n = suffix_number(name, "abelian")) return abelian(*n);
  throw Error(ErrorCode::Parse, "unknown Lie algebra: " + std::string(name));
}

Representation trivial(const LieAlgebra& g, std::size_t n) {
  return Representation{g, n, std::vector<Matrix>(g.dim, Matrix(n, n))};
}

Representation adjoint(const LieAlgebra& g) {
  Representation rep{g, g.dim, {}};
  for (std::size_t i = 0; i < g.dim; ++i) rep.rho.push_back(g.ad(i));
  return rep;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (!(a.g == b.g)) throw Error(ErrorCode::DimensionMismatch, "direct sum of representations of different algebras");
  Representation rep{a.g, a.dimV + b.dimV, {}};
  for (std::size_t i = 0; i < a.g.dim; ++i) rep.rho.push_back(l2a::direct_sum(a.rho[i], b.rho[i]));
  return rep;
}

Representation representation(const LieAlgebra& g, std::string_view name) {
  const auto plus = name.find('+');
  if (plus != std::string_view::npos)
    return direct_sum(representation(g, name.substr(0, plus)), representation(g, name.substr(plus + 1)));
  if (name == "zero") return trivial(g, 0);
  if (name == "trivial") return trivial(g, 1);
  if (name == "adjoint") return adjoint(g);
  if (auto n = suffix_number(name, "trivial")) return trivial(g, *n);
  throw Error(ErrorCode::Parse, "unknown representation: " + std::string(name));
}

}  // namespace catalog

Matrix killing_form(const LieAlgebra& g) {
  std::vector<Matrix> ad;
  for (std::size_t i = 0; i < g.dim; ++i) ad.push_back(g.ad(i));
  Matrix k(g.dim, g.dim);
  for (std::size_t a = 0; a < g.dim; ++a)
    for (std::size_t b = 0; b < g.dim; ++b) {
      const Matrix p = ad[a] * ad[b];
      Rational tr = 0;
      for (std::size_t i = 0; i < g.dim; ++i) tr += p(i, i);
      k(a, b) = tr;
    }
  return k;
}

TwoTermAlgebra skeletal_string(const LieAlgebra& g, const Rational& k) {
  const Matrix K = killing_form(g);
  Cochain j = Cochain::zero(3, g.dim, 1);
  for (const auto& t : increasing_tuples(g.dim, 3)) {
    Rational value = 0;
    for (std::size_t c = 0; c < g.dim; ++c) value += g.sc(t[1], t[2], c) * K(t[0], c);
    j.set_increasing(t, {k * value});
  }
  return normal_form_algebra(Quadruple{g, 0, catalog::trivial(g, 1), std::move(j)});
}

}  // namespace l2a
