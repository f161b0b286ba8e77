#include "kundt/matrix.hpp"

#include <numeric>
#include <sstream>

namespace kundt {

template <class F>
Matrix<F>::Matrix(std::initializer_list<std::initializer_list<F>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

template <class F>
Matrix<F> Matrix<F>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
  return m;
}

template <class F>
Matrix<F> Matrix<F>::from_columns(std::size_t rows, const std::vector<Vec<F>>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw InputError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

template <class F>
Matrix<F> Matrix<F>::diagonal(const Vec<F>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

template <class F>
Vec<F> Matrix<F>::column(std::size_t j) const {
  Vec<F> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

template <class F>
Vec<F> Matrix<F>::row(std::size_t i) const {
  return Vec<F>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

template <class F>
Matrix<F> Matrix<F>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

template <class F>
Matrix<F> Matrix<F>::scaled(const F& s) const {
  Matrix m = *this;
  for (auto& x : m.data_) x = F(x * s);
  return m;
}

template <class F>
F Matrix<F>::trace() const {
  if (!is_square()) throw InputError("trace of non-square matrix");
  F t(0);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

template <class F>
bool Matrix<F>::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

template <class F>
bool Matrix<F>::is_zero() const {
  for (const auto& x : data_)
    if (!kundt::is_zero(x)) return false;
  return true;
}

template <class F>
Matrix<F> Matrix<F>::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix sum: dimension mismatch");
  Matrix m = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] += o.data_[k];
  return m;
}

template <class F>
Matrix<F> Matrix<F>::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix difference: dimension mismatch");
  Matrix m = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] -= o.data_[k];
  return m;
}

template <class F>
Matrix<F> Matrix<F>::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw InputError("matrix product: dimension mismatch");
  Matrix m(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const F& a = (*this)(i, k);
      if (kundt::is_zero(a)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) m(i, j) += a * o(k, j);
    }
  return m;
}

template <class F>
Vec<F> Matrix<F>::operator*(const Vec<F>& v) const {
  if (cols_ != v.size()) throw InputError("matrix-vector product: dimension mismatch");
  Vec<F> out(rows_, F(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
  return out;
}

template <class F>
RowEchelon<F> row_reduce(const Matrix<F>& a) {
  Matrix<F> r = a;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < r.cols() && lead_row < r.rows(); ++col) {
    std::size_t p = lead_row;
    while (p < r.rows() && is_zero(r(p, col))) ++p;
    if (p == r.rows()) continue;
    if (p != lead_row)
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(p, j), r(lead_row, j));
    F inv = F(1) / r(lead_row, col);
    for (std::size_t j = col; j < r.cols(); ++j) r(lead_row, j) = F(r(lead_row, j) * inv);
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead_row || is_zero(r(i, col))) continue;
      F factor = r(i, col);
      for (std::size_t j = col; j < r.cols(); ++j) r(i, j) -= factor * r(lead_row, j);
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return {std::move(r), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& a) {
  return row_reduce(a).pivots.size();
}

template <class F>
Matrix<F> kernel_basis(const Matrix<F>& a) {
  auto [r, pivots] = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(a.cols(), F(0));
    v[free] = F(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = F(-r(k, free));
    basis.push_back(std::move(v));
  }
  return Matrix<F>::from_columns(a.cols(), basis);
}

template <class F>
std::optional<Matrix<F>> solve_linear(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.rows() != b.rows()) throw InputError("solve_linear: row count mismatch");
  Matrix<F> aug(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
  }
  auto [r, pivots] = row_reduce(aug);
  if (!pivots.empty() && pivots.back() >= a.cols()) return std::nullopt;
  Matrix<F> x(a.cols(), b.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[k], j) = r(k, a.cols() + j);
  return x;
}

template <class F>
std::optional<Vec<F>> solve_linear(const Matrix<F>& a, const Vec<F>& b) {
  auto x = solve_linear(a, Matrix<F>::column_vector(b));
  if (!x) return std::nullopt;
  return x->column(0);
}

template <class F>
Matrix<F> inverse(const Matrix<F>& a) {
  if (!a.is_square()) throw InputError("inverse of non-square matrix");
  if (rank(a) != a.rows()) throw InputError("inverse of singular matrix");
  return *solve_linear(a, Matrix<F>::identity(a.rows()));
}

template <class F>
SignatureTriple signature(const Matrix<F>& s) {
  if (!s.is_symmetric()) throw InputError("signature: matrix is not symmetric");
  Matrix<F> m = s;
  const std::size_t n = m.rows();
  SignatureTriple sig;
  // Simultaneous row/column operations keep m congruent to s.
  auto add_multiple = [&](std::size_t dst, std::size_t src, const F& c) {
    for (std::size_t j = 0; j < n; ++j) m(dst, j) += c * m(src, j);
    for (std::size_t i = 0; i < n; ++i) m(i, dst) += c * m(i, src);
  };
  auto swap_index = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n; ++j) std::swap(m(a, j), m(b, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(m(i, a), m(i, b));
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(m(p, p))) ++p;
    if (p == n) {
      // No diagonal pivot left: manufacture one from an off-diagonal entry.
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
          if (!is_zero(m(i, j))) {
            add_multiple(i, j, F(1));
            p = i;
            found = true;
          }
      if (!found) break;
    }
    if (p != k) swap_index(p, k);
    const F pivot = m(k, k);
    (sign(pivot) > 0 ? sig.positive : sig.negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(m(i, k))) continue;
      add_multiple(i, k, F(-(m(i, k) / pivot)));
    }
  }
  sig.null = n - sig.positive - sig.negative;
  return sig;
}

template <class F>
Matrix<F> congruence(const Matrix<F>& t, const Matrix<F>& s) {
  if (!t.is_square() || !s.is_square() || t.rows() != s.rows())
    throw InputError("congruence: dimension mismatch");
  if (!s.is_symmetric()) throw InputError("congruence: form is not symmetric");
  if (rank(t) != t.rows()) throw InputError("congruence: transform is singular");
  return t.transpose() * s * t;
}

template <class F>
Matrix<F> restricted_gram(const Matrix<F>& basis, const Matrix<F>& s) {
  if (!s.is_square() || s.rows() != basis.rows()) throw InputError("restricted_gram: dimension mismatch");
  return basis.transpose() * s * basis;
}

template <class F>
F dot(const Vec<F>& x, const Vec<F>& y) {
  if (x.size() != y.size()) throw InputError("dot: length mismatch");
  F s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

template <class F>
F bilinear(const Matrix<F>& form, const Vec<F>& x, const Vec<F>& y) {
  return dot(x, form * y);
}

template <class F>
Vec<F> add(const Vec<F>& x, const Vec<F>& y) {
  if (x.size() != y.size()) throw InputError("vector sum: length mismatch");
  Vec<F> out = x;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += y[i];
  return out;
}

template <class F>
Vec<F> sub(const Vec<F>& x, const Vec<F>& y) {
  if (x.size() != y.size()) throw InputError("vector difference: length mismatch");
  Vec<F> out = x;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] -= y[i];
  return out;
}

template <class F>
Vec<F> scale(const F& s, const Vec<F>& x) {
  Vec<F> out = x;
  for (auto& v : out) v = F(v * s);
  return out;
}

template <class F>
bool is_zero_vector(const Vec<F>& x) {
  for (const auto& v : x)
    if (!is_zero(v)) return false;
  return true;
}

template <class F>
Vec<F> unit_vector(std::size_t n, std::size_t i) {
  Vec<F> v(n, F(0));
  v.at(i) = F(1);
  return v;
}

Vec<Rational> primitive_integer(const Vec<Rational>& v) {
  mpz_class den = 1;
  for (const auto& x : v) den = lcm(den, mpz_class(x.get_den()));
  mpz_class g = 0;
  for (const auto& x : v) g = gcd(g, mpz_class(x.get_num() * (den / x.get_den())));
  if (g == 0) return v;
  Vec<Rational> out;
  int lead = 0;
  for (const auto& x : v) {
    Rational y = x * Rational(den) / Rational(g);
    if (lead == 0) lead = sgn(y);
    out.push_back(y);
  }
  if (lead < 0)
    for (auto& y : out) y = -y;
  return out;
}

Vec<QSqrt2> primitive_integer(const Vec<QSqrt2>& v) {
  bool rational = true;
  for (const auto& x : v) rational = rational && x.is_rational();
  if (rational) {
    Vec<Rational> r;
    for (const auto& x : v) r.push_back(x.rational_part());
    return convert<QSqrt2>(primitive_integer(r));
  }
  for (const auto& x : v)
    if (!is_zero(x)) return scale(QSqrt2(1) / x, v);
  return v;
}

template <class F>
std::string to_string(const Matrix<F>& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
  }
  os << "]";
  return os.str();
}

#define KUNDT_INSTANTIATE_LINALG(F)                                                  \
  template class Matrix<F>;                                                          \
  template RowEchelon<F> row_reduce(const Matrix<F>&);                               \
  template std::size_t rank(const Matrix<F>&);                                       \
  template Matrix<F> kernel_basis(const Matrix<F>&);                                 \
  template std::optional<Matrix<F>> solve_linear(const Matrix<F>&, const Matrix<F>&); \
  template std::optional<Vec<F>> solve_linear(const Matrix<F>&, const Vec<F>&);      \
  template Matrix<F> inverse(const Matrix<F>&);                                      \
  template SignatureTriple signature(const Matrix<F>&);                              \
  template Matrix<F> congruence(const Matrix<F>&, const Matrix<F>&);                 \
  template Matrix<F> restricted_gram(const Matrix<F>&, const Matrix<F>&);          \
  template F dot(const Vec<F>&, const Vec<F>&);                                      \
  template F bilinear(const Matrix<F>&, const Vec<F>&, const Vec<F>&);               \
  template Vec<F> add(const Vec<F>&, const Vec<F>&);                                 \
  template Vec<F> sub(const Vec<F>&, const Vec<F>&);                                 \
  template Vec<F> scale(const F&, const Vec<F>&);                                    \
  template bool is_zero_vector(const Vec<F>&);                                       \
  template Vec<F> unit_vector<F>(std::size_t, std::size_t);                          \
  template std::string to_string(const Matrix<F>&);

KUNDT_INSTANTIATE_LINALG(Rational)
KUNDT_INSTANTIATE_LINALG(QSqrt2)

}  // namespace kundt
