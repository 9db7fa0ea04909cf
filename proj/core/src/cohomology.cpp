#include "l2a/cohomology.hpp"

#include <algorithm>

#include "l2a/algebra.hpp"
#include "l2a/error.hpp"

namespace l2a {

LieAlgebra LieAlgebra::abelian(std::size_t dim) { return LieAlgebra{dim, Tensor({dim, dim, dim})}; }

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  Vec out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Rational c = x[i] * y[j];
      for (std::size_t k = 0; k < dim; ++k)
        if (sgn(sc(i, j, k)) != 0) out[k] += c * sc(i, j, k);
    }
  }
  return out;
}

Matrix LieAlgebra::ad(std::size_t i) const {
  Matrix m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = 0; k < dim; ++k) m(k, j) = sc(i, j, k);
  return m;
}

std::optional<std::string> lie_algebra_defect(const LieAlgebra& g) {
  if (g.sc.shape() != std::vector<std::size_t>{g.dim, g.dim, g.dim}) return "structure constants have wrong shape";
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = i; j < g.dim; ++j)
      for (std::size_t k = 0; k < g.dim; ++k)
        if (g.sc(i, j, k) != -g.sc(j, i, k))
          return "bracket antisymmetry violated at (" + std::to_string(i) + "," + std::to_string(j) + ")";
  for (std::size_t a = 0; a < g.dim; ++a)
    for (std::size_t b = a + 1; b < g.dim; ++b)
      for (std::size_t c = b + 1; c < g.dim; ++c) {
        const Vec ea = unit_vec(g.dim, a);
        const Vec eb = unit_vec(g.dim, b);
        const Vec ec = unit_vec(g.dim, c);
        Vec jac = g.bracket(ea, g.bracket(eb, ec));
        axpy(jac, 1, g.bracket(eb, g.bracket(ec, ea)));
        axpy(jac, 1, g.bracket(ec, g.bracket(ea, eb)));
        if (!is_zero(jac))
          return "Jacobi identity violated at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                 std::to_string(c) + ")";
      }
  return std::nullopt;
}

Matrix Representation::action(const Vec& x) const {
  Matrix m(dimV, dimV);
  for (std::size_t i = 0; i < g.dim; ++i)
    if (sgn(x[i]) != 0) m = m + x[i] * rho[i];
  return m;
}

std::optional<std::string> representation_defect(const Representation& rep) {
  if (rep.rho.size() != rep.g.dim) return "one matrix per basis vector of g is required";
  for (const auto& m : rep.rho)
    if (m.rows() != rep.dimV || m.cols() != rep.dimV) return "representation matrix has wrong shape";
  for (std::size_t a = 0; a < rep.g.dim; ++a)
    for (std::size_t b = a + 1; b < rep.g.dim; ++b) {
      const Matrix lhs = rep.action(rep.g.sc.fibre(a, b));
      const Matrix rhs = rep.rho[a] * rep.rho[b] - rep.rho[b] * rep.rho[a];
      if (!(lhs == rhs))
        return "representation law violated at (" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
  return std::nullopt;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = i;
  while (true) {
    out.push_back(t);
    std::size_t i = k;
    while (i > 0 && t[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

std::size_t tuple_rank(std::span<const std::size_t> tuple, std::size_t n) {
  const std::size_t k = tuple.size();
  std::size_t r = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = start; j < tuple[i]; ++j) r += binomial(n - 1 - j, k - 1 - i);
    start = tuple[i] + 1;
  }
  return r;
}

Cochain Cochain::zero(std::size_t degree, std::size_t dim_g, std::size_t dimV) {
  return Cochain{degree, dim_g, dimV, Vec(binomial(dim_g, degree) * dimV)};
}

Vec Cochain::at_increasing(std::span<const std::size_t> tuple) const {
  const std::size_t base = tuple_rank(tuple, dim_g) * dimV;
  return Vec(values.begin() + static_cast<std::ptrdiff_t>(base),
             values.begin() + static_cast<std::ptrdiff_t>(base + dimV));
}

void Cochain::set_increasing(std::span<const std::size_t> tuple, const Vec& value) {
  const std::size_t base = tuple_rank(tuple, dim_g) * dimV;
  std::copy(value.begin(), value.end(), values.begin() + static_cast<std::ptrdiff_t>(base));
}

Vec Cochain::evaluate(std::span<const std::size_t> indices) const {
  std::vector<std::size_t> sorted(indices.begin(), indices.end());
  // insertion sort, counting transpositions
  int sign = 1;
  for (std::size_t i = 1; i < sorted.size(); ++i)
    for (std::size_t j = i; j > 0 && sorted[j - 1] > sorted[j]; --j) {
      std::swap(sorted[j - 1], sorted[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) return Vec(dimV);
  Vec v = at_increasing(sorted);
  if (sign < 0)
    for (auto& c : v) c = -c;
  return v;
}

Vec Cochain::evaluate_first(const Vec& x, std::span<const std::size_t> rest) const {
  Vec out(dimV);
  std::vector<std::size_t> idx(rest.size() + 1);
  std::copy(rest.begin(), rest.end(), idx.begin() + 1);
  for (std::size_t c = 0; c < dim_g; ++c) {
    if (sgn(x[c]) == 0) continue;
    idx[0] = c;
    axpy(out, x[c], evaluate(idx));
  }
  return out;
}

namespace {

void check_compatible(const Cochain& f, const Representation& rep) {
  if (f.dim_g != rep.g.dim || f.dimV != rep.dimV) {
    throw Error(ErrorCode::DimensionMismatch, "cochain does not belong to this representation");
  }
}

}  // namespace

Cochain delta(const Cochain& f, const Representation& rep) {
  check_compatible(f, rep);
  const std::size_t n = f.degree;
  const std::size_t dim = rep.g.dim;
  Cochain out = Cochain::zero(n + 1, dim, rep.dimV);
  if (n + 1 > dim) return out;

  const auto& sh1 = shuffles(1, n);
  std::vector<std::size_t> rest(n);
  for (const auto& t : increasing_tuples(dim, n + 1)) {
    Vec value(rep.dimV);
    for (const auto& s : sh1.elements) {
      const auto& p = s.images;
      for (std::size_t i = 0; i < n; ++i) rest[i] = t[p[i + 1]];
      axpy(value, s.sign, rep.rho[t[p[0]]].apply(f.at_increasing(rest)));
    }
    if (n >= 1) {
      const auto& sh2 = shuffles(2, n - 1);
      std::vector<std::size_t> tail(n - 1);
      for (const auto& s : sh2.elements) {
        const auto& p = s.images;
        for (std::size_t i = 0; i + 1 < n; ++i) tail[i] = t[p[i + 2]];
        axpy(value, -s.sign, f.evaluate_first(rep.g.sc.fibre(t[p[0]], t[p[1]]), tail));
      }
    }
    out.set_increasing(t, value);
  }
  return out;
}

Matrix delta_matrix(std::size_t n, const Representation& rep) {
  const std::size_t dim = rep.g.dim;
  const std::size_t cols = binomial(dim, n) * rep.dimV;
  const std::size_t rows = binomial(dim, n + 1) * rep.dimV;
  Matrix m(rows, cols);
  if (rows == 0) return m;
  for (std::size_t c = 0; c < cols; ++c) {
    Cochain basis = Cochain::zero(n, dim, rep.dimV);
    basis.values[c] = 1;
    const Cochain image = delta(basis, rep);
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = image.values[r];
  }
  return m;
}

bool is_cocycle(const Cochain& f, const Representation& rep) { return delta(f, rep).is_zero(); }

std::optional<Cochain> is_coboundary(const Cochain& f, const Representation& rep) {
  check_compatible(f, rep);
  if (f.degree == 0) {
    throw Error(ErrorCode::DimensionMismatch, "is_coboundary: degree-0 cochains have no primitives");
  }
  const Matrix a = delta_matrix(f.degree - 1, rep);
  const auto x = solve(a, Matrix::from_columns(f.values.size(), {f.values}));
  if (!x) return std::nullopt;
  return Cochain{f.degree - 1, f.dim_g, f.dimV, x->column(0)};
}

std::size_t cohomology_dim(std::size_t n, const Representation& rep) {
  const Matrix dn = delta_matrix(n, rep);
  const std::size_t kernel = dn.cols() - rank(dn);
  const std::size_t image = n == 0 ? 0 : rank(delta_matrix(n - 1, rep));
  return kernel - image;
}

std::vector<Cochain> cohomology_basis(std::size_t n, const Representation& rep) {
  const std::size_t dim = rep.g.dim;
  const Subspace kernel = kernel_basis(delta_matrix(n, rep));
  std::vector<Vec> span;
  if (n > 0) span = image_basis(delta_matrix(n - 1, rep)).basis;
  const std::size_t ambient = kernel.ambient_dim;
  std::size_t current = span.size();
  std::vector<Cochain> out;
  for (const auto& v : kernel.basis) {
    span.push_back(v);
    const std::size_t r = rank(Matrix::from_columns(ambient, span));
    if (r > current) {
      current = r;
      out.push_back(Cochain{n, dim, rep.dimV, v});
    } else {
      span.pop_back();
    }
  }
  return out;
}

bool is_lie_morphism(const Matrix& psi, const LieAlgebra& g, const LieAlgebra& h) {
  if (psi.rows() != h.dim || psi.cols() != g.dim) return false;
  for (std::size_t a = 0; a < g.dim; ++a)
    for (std::size_t b = a + 1; b < g.dim; ++b) {
      const Vec lhs = psi.apply(g.sc.fibre(a, b));
      const Vec rhs = h.bracket(psi.column(a), psi.column(b));
      if (lhs != rhs) return false;
    }
  return true;
}

Representation pullback(const Representation& target, const Matrix& psi, const LieAlgebra& g) {
  if (psi.rows() != target.g.dim || psi.cols() != g.dim) {
    throw Error(ErrorCode::DimensionMismatch, "pullback: psi has wrong shape");
  }
  Representation out{g, target.dimV, {}};
  for (std::size_t a = 0; a < g.dim; ++a) out.rho.push_back(target.action(psi.column(a)));
  return out;
}

bool is_intertwiner(const Matrix& t, const Representation& source, const Representation& pulled) {
  if (t.rows() != pulled.dimV || t.cols() != source.dimV || source.g.dim != pulled.g.dim) return false;
  for (std::size_t a = 0; a < source.g.dim; ++a)
    if (!(t * source.rho[a] == pulled.rho[a] * t)) return false;
  return true;
}

Cochain pullback_cochain(const Cochain& k, const Matrix& psi, std::size_t dim_g) {
  if (psi.rows() != k.dim_g || psi.cols() != dim_g) {
    throw Error(ErrorCode::DimensionMismatch, "pullback_cochain: psi has wrong shape");
  }
  const std::size_t n = k.degree;
  Cochain out = Cochain::zero(n, dim_g, k.dimV);
  for (const auto& t : increasing_tuples(dim_g, n)) {
    // expand K(psi x_1, .., psi x_n) over all index tuples of h
    Vec value(k.dimV);
    std::vector<std::size_t> idx(n, 0);
    const std::size_t h = k.dim_g;
    if (n > 0 && h == 0) continue;
    while (true) {
      Rational coeff = 1;
      for (std::size_t i = 0; i < n && sgn(coeff) != 0; ++i) coeff *= psi(idx[i], t[i]);
      if (sgn(coeff) != 0) axpy(value, coeff, k.evaluate(idx));
      std::size_t pos = n;
      while (pos > 0 && idx[pos - 1] + 1 == h) idx[--pos] = 0;
      if (pos == 0) break;
      ++idx[pos - 1];
    }
    out.set_increasing(t, value);
  }
  return out;
}

std::optional<Cochain> cohomologous(const Cochain& J, const Representation& source, const Cochain& K,
                                    const Representation& target, const Matrix& psi, const Matrix& t) {
  check_compatible(J, source);
  check_compatible(K, target);
  if (J.degree != K.degree) throw Error(ErrorCode::DimensionMismatch, "cohomologous: degrees differ");
  if (J.degree == 0) throw Error(ErrorCode::DimensionMismatch, "cohomologous: degree must be >= 1");
  if (!is_lie_morphism(psi, source.g, target.g)) {
    throw Error(ErrorCode::NotLieMorphism, "psi is not a Lie algebra morphism");
  }
  const Representation pulled = pullback(target, psi, source.g);
  if (!is_intertwiner(t, source, pulled)) {
    throw Error(ErrorCode::NotIntertwiner, "t is not an intertwiner over psi");
  }

  const std::size_t dim = source.g.dim;
  const Cochain pulled_k = pullback_cochain(K, psi, dim);
  Cochain lhs = Cochain::zero(J.degree, dim, target.dimV);
  for (const auto& tuple : increasing_tuples(dim, J.degree)) {
    Vec v = t.apply(J.at_increasing(tuple));
    axpy(v, -1, pulled_k.at_increasing(tuple));
    lhs.set_increasing(tuple, v);
  }
  const Matrix a = delta_matrix(J.degree - 1, pulled);
  const auto x = solve(a, Matrix::from_columns(lhs.values.size(), {lhs.values}));
  if (!x) return std::nullopt;
  return Cochain{J.degree - 1, dim, target.dimV, x->column(0)};
}

}  // namespace l2a
