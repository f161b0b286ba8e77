#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "kundt/scalar.hpp"

namespace kundt {

template <class F>
using Vec = std::vector<F>;

/// Dense row-major matrix over an exact field. Value type; every operation
/// returns a new matrix.
template <class F>
class Matrix {
 public:
  using value_type = F;
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}
  Matrix(std::initializer_list<std::initializer_list<F>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix from_columns(std::size_t rows, const std::vector<Vec<F>>& columns);
  static Matrix column_vector(const Vec<F>& v) { return from_columns(v.size(), {v}); }
  static Matrix diagonal(const Vec<F>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_square() const { return rows_ == cols_; }

  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Vec<F> column(std::size_t j) const;
  Vec<F> row(std::size_t i) const;
  Matrix transpose() const;
  Matrix scaled(const F& s) const;
  F trace() const;
  bool is_symmetric() const;
  bool is_zero() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Vec<F> operator*(const Vec<F>& v) const;
  bool operator==(const Matrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

struct SignatureTriple {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t null = 0;
  bool operator==(const SignatureTriple&) const = default;
};

/// Reduced row echelon form with the pivot column list. Pivots are the first
/// nonzero entry in column order.
template <class F>
struct RowEchelon {
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;
};

template <class F>
RowEchelon<F> row_reduce(const Matrix<F>& a);
template <class F>
std::size_t rank(const Matrix<F>& a);
/// Columns form a basis of the null space; 0 columns when trivial.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& a);
/// One exact solution of A x = b, nullopt when the system is inconsistent.
template <class F>
std::optional<Matrix<F>> solve_linear(const Matrix<F>& a, const Matrix<F>& b);
template <class F>
std::optional<Vec<F>> solve_linear(const Matrix<F>& a, const Vec<F>& b);
template <class F>
Matrix<F> inverse(const Matrix<F>& a);
/// Sylvester signature by symmetric Gaussian reduction (congruences only).
template <class F>
SignatureTriple signature(const Matrix<F>& s);
/// T^t S T.
template <class F>
Matrix<F> congruence(const Matrix<F>& t, const Matrix<F>& s);

/// B^t S B for a (possibly rectangular) basis matrix B: the Gram matrix of
/// the form S restricted to the column span of B.
template <class F>
Matrix<F> restricted_gram(const Matrix<F>& basis, const Matrix<F>& s);

template <class F>
F dot(const Vec<F>& x, const Vec<F>& y);
template <class F>
F bilinear(const Matrix<F>& form, const Vec<F>& x, const Vec<F>& y);
template <class F>
Vec<F> add(const Vec<F>& x, const Vec<F>& y);
template <class F>
Vec<F> sub(const Vec<F>& x, const Vec<F>& y);
template <class F>
Vec<F> scale(const F& s, const Vec<F>& x);
template <class F>
bool is_zero_vector(const Vec<F>& x);
template <class F>
Vec<F> unit_vector(std::size_t n, std::size_t i);

/// Embeds a rational matrix into a larger field.
template <class To, class From>
Matrix<To> convert(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = To(m(i, j));
  return out;
}

template <class To, class From>
Vec<To> convert(const Vec<From>& v) {
  Vec<To> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(To(x));
  return out;
}

/// Rescales to the smallest integer coordinates with positive leading entry.
/// Only defined for rational vectors; over Q(sqrt2) the leading entry is
/// normalized to 1 instead.
Vec<Rational> primitive_integer(const Vec<Rational>& v);
Vec<QSqrt2> primitive_integer(const Vec<QSqrt2>& v);

template <class F>
std::string to_string(const Matrix<F>& m);

}  // namespace kundt
