#ifndef L2A_TESTS_ORACLES_HPP
#define L2A_TESTS_ORACLES_HPP

// Reference computations that share no code with the library beyond the
// Rational type and the plain data structs. They are deliberately naive.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <ostream>
#include <utility>
#include <vector>

#include "l2a/cohomology.hpp"

namespace oracle {

using l2a::Rational;
using Dense = std::vector<std::vector<Rational>>;

inline int inversion_sign(const std::vector<std::size_t>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

/// (m,n)-shuffles by filtering every permutation of m+n letters.
inline std::vector<std::pair<std::vector<std::size_t>, int>> shuffles(std::size_t m, std::size_t n) {
  std::vector<std::size_t> p(m + n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::pair<std::vector<std::size_t>, int>> out;
  do {
    if (std::is_sorted(p.begin(), p.begin() + static_cast<long>(m)) &&
        std::is_sorted(p.begin() + static_cast<long>(m), p.end()))
      out.emplace_back(p, inversion_sign(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Increasing k-tuples of {0..n-1}, lexicographic, by recursion.
inline void tuples_rec(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                       std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    tuples_rec(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<std::size_t>> tuples(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  tuples_rec(n, k, 0, cur, out);
  return out;
}

/// Rank by plain Gaussian elimination on a copy.
inline std::size_t rank(Dense m) {
  std::size_t r = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

/// Value of the unit cochain (tuple `basis`, component `comp`) on an
/// arbitrary index list: the sign sorting `idx` onto `basis`, else zero.
inline Rational unit_cochain(const std::vector<std::size_t>& basis, const std::vector<std::size_t>& idx) {
  std::vector<std::size_t> sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != basis) return 0;
  return inversion_sign(idx);
}

/// Textbook Chevalley-Eilenberg differential as a dense matrix:
///   (df)(x_0..x_n) = sum_i (-1)^i rho(x_i) f(.. x_i omitted ..)
///                  + sum_{i<j} (-1)^{i+j} f([x_i,x_j], .. x_i, x_j omitted ..)
/// Columns: increasing n-tuples x V; rows: increasing (n+1)-tuples x V.
inline Dense delta_matrix(std::size_t n, const l2a::Representation& rep) {
  const std::size_t dim = rep.g.dim;
  const std::size_t dv = rep.dimV;
  const auto src = tuples(dim, n);
  const auto dst = tuples(dim, n + 1);
  Dense m(dst.size() * dv, std::vector<Rational>(src.size() * dv));
  for (std::size_t s = 0; s < src.size(); ++s)
    for (std::size_t comp = 0; comp < dv; ++comp) {
      const std::size_t col = s * dv + comp;
      for (std::size_t t = 0; t < dst.size(); ++t) {
        const auto& x = dst[t];
        std::vector<Rational> value(dv);
        for (std::size_t i = 0; i <= n; ++i) {
          std::vector<std::size_t> rest;
          for (std::size_t l = 0; l <= n; ++l)
            if (l != i) rest.push_back(x[l]);
          const Rational f = unit_cochain(src[s], rest);
          if (f == 0) continue;
          const int sign = i % 2 == 0 ? 1 : -1;
          for (std::size_t r = 0; r < dv; ++r) value[r] += sign * f * rep.rho[x[i]](r, comp);
        }
        for (std::size_t i = 0; i <= n; ++i)
          for (std::size_t j = i + 1; j <= n; ++j) {
            const int sign = (i + j) % 2 == 0 ? 1 : -1;
            for (std::size_t k = 0; k < dim; ++k) {
              const Rational c = rep.g.sc(x[i], x[j], k);
              if (c == 0) continue;
              std::vector<std::size_t> args{k};
              for (std::size_t l = 0; l <= n; ++l)
                if (l != i && l != j) args.push_back(x[l]);
              value[comp] += sign * c * unit_cochain(src[s], args);
            }
          }
        for (std::size_t r = 0; r < dv; ++r) m[t * dv + r][col] = value[r];
      }
    }
  return m;
}

inline std::size_t cohomology_dim(std::size_t n, const l2a::Representation& rep) {
  const Dense dn = oracle::delta_matrix(n, rep);
  const std::size_t cols = tuples(rep.g.dim, n).size() * rep.dimV;
  const std::size_t kernel = cols - rank(dn);
  const std::size_t image = n == 0 ? 0 : rank(oracle::delta_matrix(n - 1, rep));
  return kernel - image;
}

/// Applies the dense differential to a cochain given by its values.
inline std::vector<Rational> apply(const Dense& m, const std::vector<Rational>& v) {
  std::vector<Rational> out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
  return out;
}

/// Jacobi identity on all basis triples, directly from structure constants.
inline bool satisfies_jacobi(const l2a::LieAlgebra& g) {
  const std::size_t n = g.dim;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t k = 0; k < n; ++k)
        if (g.sc(a, b, k) != -g.sc(b, a, k)) return false;
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t out = 0; out < n; ++out) {
          Rational s = 0;
          for (std::size_t m = 0; m < n; ++m)
            s += g.sc(b, c, m) * g.sc(a, m, out) + g.sc(c, a, m) * g.sc(b, m, out) + g.sc(a, b, m) * g.sc(c, m, out);
          if (s != 0) return false;
        }
    }
  return true;
}

/// rho([a,b]) = rho(a)rho(b) - rho(b)rho(a) entrywise.
inline bool satisfies_rep_law(const l2a::Representation& rep) {
  const std::size_t n = rep.g.dim;
  const std::size_t v = rep.dimV;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t r = 0; r < v; ++r)
        for (std::size_t c = 0; c < v; ++c) {
          Rational lhs = 0;
          for (std::size_t k = 0; k < n; ++k) lhs += rep.g.sc(a, b, k) * rep.rho[k](r, c);
          Rational rhs = 0;
          for (std::size_t m = 0; m < v; ++m)
            rhs += rep.rho[a](r, m) * rep.rho[b](m, c) - rep.rho[b](r, m) * rep.rho[a](m, c);
          if (lhs != rhs) return false;
        }
  return true;
}

/// Quaternion product from the multiplication table i^2 = j^2 = k^2 = ijk = -1.
struct Quat {
  Rational c[4];
};

inline Quat mul(const Quat& a, const Quat& b) {
  // table[x][y] = (sign, index) of e_x e_y for e = (1, i, j, k)
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static const int index[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  Quat out{};
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) out.c[index[x][y]] += sign[x][y] * a.c[x] * b.c[y];
  return out;
}

inline Quat unit(int i) {
  Quat q{};
  q.c[i] = 1;
  return q;
}

inline Quat im(Quat q) {
  q.c[0] = 0;
  return q;
}

/// trace(ad a ad b) from structure constants.
inline Rational killing(const l2a::LieAlgebra& g, std::size_t a, std::size_t b) {
  Rational t = 0;
  for (std::size_t j = 0; j < g.dim; ++j)
    for (std::size_t k = 0; k < g.dim; ++k) t += g.sc(a, k, j) * g.sc(b, j, k);
  return t;
}

}  // namespace oracle

namespace l2a {

inline void PrintTo(const Matrix& m, std::ostream* os) {
  *os << m.rows() << "x" << m.cols() << " [";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    *os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) *os << (c ? " " : "") << to_string(m(r, c));
  }
  *os << "]";
}

}  // namespace l2a

#endif  // L2A_TESTS_ORACLES_HPP
