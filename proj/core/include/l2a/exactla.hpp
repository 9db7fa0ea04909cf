#ifndef L2A_EXACTLA_HPP
#define L2A_EXACTLA_HPP

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace l2a {

/// Exact rational scalar. GMP keeps every value in canonical form
/// (positive denominator, reduced fraction).
using Rational = mpq_class;

/// Column vector of rationals.
using Vec = std::vector<Rational>;

/// Parses "p", "p/q", "-p/q" (an optional leading '+' is accepted) into a
/// canonical rational. Throws l2a::Error(ErrorCode::Parse) on bad input.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise, "-" for negatives.
std::string to_string(const Rational& q);

bool is_zero(const Vec& v);
Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
void axpy(Vec& y, const Rational& a, const Vec& x);

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// Builds a matrix from a list of equally long column vectors.
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& columns);
  static Matrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Rational>& entries() const { return data_; }

  Vec column(std::size_t c) const;
  Vec row(std::size_t r) const;
  Matrix transpose() const;
  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

  Vec apply(const Vec& x) const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Block-diagonal sum diag(a, b).
Matrix direct_sum(const Matrix& a, const Matrix& b);
/// Stacks matrices with equal column counts on top of each other.
Matrix vstack(const std::vector<Matrix>& blocks);

/// Subspace of Q^ambient_dim given by linearly independent basis columns.
struct Subspace {
  std::size_t ambient_dim = 0;
  std::vector<Vec> basis;

  std::size_t dim() const { return basis.size(); }
  /// ambient_dim x dim matrix whose columns are the basis vectors.
  Matrix as_matrix() const { return Matrix::from_columns(ambient_dim, basis); }
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form by Gauss-Jordan elimination; the first nonzero
/// entry in a column (scanning downward) is always taken as pivot.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Null space basis: one vector per free column of rref(m), in increasing
/// column order.
Subspace kernel_basis(const Matrix& m);

/// Column space basis made of the original pivot columns of m.
Subspace image_basis(const Matrix& m);

/// Greedy complement: the standard vectors e_0, e_1, ... that increase the
/// rank when appended to s.basis, in index order.
Subspace complement(const Subspace& s);

/// One solution of a * x = b with free variables set to zero, or nullopt if
/// the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

std::optional<Matrix> invert(const Matrix& m);

}  // namespace l2a

#endif  // L2A_EXACTLA_HPP
