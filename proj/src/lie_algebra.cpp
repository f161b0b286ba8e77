#include "kundt/lie_algebra.hpp"

#include <algorithm>

namespace kundt {

LieAlgebra::LieAlgebra(std::vector<std::string> labels, std::vector<Rational> structure)
    : labels_(std::move(labels)), structure_(std::move(structure)) {
  const std::size_t n = labels_.size();
  if (structure_.size() != n * n * n) throw InputError("structure tensor must have dim^3 entries");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (c(i, j, k) != -c(j, i, k))
          throw InputError("structure constants are not antisymmetric at [" + labels_[i] + "," + labels_[j] + "]");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (labels_[i] == labels_[j]) throw InputError("duplicate basis label '" + labels_[i] + "'");
}

LieAlgebra LieAlgebra::from_brackets(std::vector<std::string> labels,
                                     const std::vector<BracketRelation>& relations) {
  const std::size_t n = labels.size();
  std::vector<Rational> structure(n * n * n, Rational(0));
  std::vector<bool> seen(n * n, false);
  for (const auto& r : relations) {
    if (r.i >= n || r.j >= n || r.value.size() != n) throw InputError("bracket relation out of range");
    if (r.i == r.j) {
      if (!is_zero_vector(r.value)) throw InputError("[x,x] must vanish for " + labels[r.i]);
      continue;
    }
    if (seen[r.i * n + r.j] || seen[r.j * n + r.i])
      throw InputError("bracket [" + labels[r.i] + "," + labels[r.j] + "] given twice");
    seen[r.i * n + r.j] = true;
    for (std::size_t k = 0; k < n; ++k) {
      structure[(r.i * n + r.j) * n + k] = r.value[k];
      structure[(r.j * n + r.i) * n + k] = -r.value[k];
    }
  }
  return LieAlgebra(std::move(labels), std::move(structure));
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back("x" + std::to_string(i + 1));
  return LieAlgebra(std::move(labels), std::vector<Rational>(dim * dim * dim, Rational(0)));
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

template <class F>
Vec<F> bracket(const LieAlgebra& g, const Vec<F>& x, const Vec<F>& y) {
  const std::size_t n = g.dim();
  if (x.size() != n || y.size() != n) throw InputError("bracket: vector length mismatch");
  Vec<F> out(n, F(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(y[j])) continue;
      F xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(g.c(i, j, k))) out[k] += xy * F(g.c(i, j, k));
    }
  }
  return out;
}

Rational check_jacobi(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Rational worst(0);
  auto e = [n](std::size_t i) { return unit_vector<Rational>(n, i); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec<Rational> sum = bracket(g, bracket(g, e(i), e(j)), e(k));
        sum = add(sum, bracket(g, bracket(g, e(j), e(k)), e(i)));
        sum = add(sum, bracket(g, bracket(g, e(k), e(i)), e(j)));
        for (const auto& s : sum) worst = std::max(worst, Rational(abs(s)));
      }
  return worst;
}

template <class F>
LinearMap<F> ad(const LieAlgebra& g, const Vec<F>& x) {
  const std::size_t n = g.dim();
  std::vector<Vec<F>> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(bracket(g, x, unit_vector<F>(n, j)));
  return {Matrix<F>::from_columns(n, cols)};
}

Matrix<Rational> killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Matrix<Rational>> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(ad(g, unit_vector<Rational>(n, i)).matrix);
  Matrix<Rational> k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k(i, j) = (ads[i] * ads[j]).trace();
  return k;
}

bool is_unimodular(const LieAlgebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (!is_zero(ad(g, unit_vector<Rational>(g.dim(), i)).matrix.trace())) return false;
  return true;
}

Subspace<Rational> derived_algebra(const LieAlgebra& g) {
  return derived_subspace(g, Subspace<Rational>::whole(g.dim()));
}

Subspace<Rational> center(const LieAlgebra& g) {
  // x is central iff sum_i x_i c(i, j, k) = 0 for all j, k.
  const std::size_t n = g.dim();
  Matrix<Rational> eqs(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) eqs(j * n + k, i) = g.c(i, j, k);
  return Subspace<Rational>(kernel_basis(eqs));
}

template <class F>
bool is_subalgebra(const LieAlgebra& g, const Subspace<F>& s) {
  if (s.ambient_dim() != g.dim()) throw InputError("subspace lives in the wrong dimension");
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = a + 1; b < s.dim(); ++b)
      if (!s.contains(bracket(g, s.basis_vector(a), s.basis_vector(b)))) return false;
  return true;
}

template <class F>
bool is_abelian(const LieAlgebra& g, const Subspace<F>& s) {
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = a + 1; b < s.dim(); ++b)
      if (!is_zero_vector(bracket(g, s.basis_vector(a), s.basis_vector(b)))) return false;
  return true;
}

template <class F>
Subspace<F> derived_subspace(const LieAlgebra& g, const Subspace<F>& s) {
  std::vector<Vec<F>> brackets;
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = a + 1; b < s.dim(); ++b) brackets.push_back(bracket(g, s.basis_vector(a), s.basis_vector(b)));
  return Subspace<F>::span(g.dim(), brackets);
}

template <class F>
bool is_automorphism(const LieAlgebra& g, const LinearMap<F>& t) {
  const std::size_t n = g.dim();
  if (t.matrix.rows() != n || t.matrix.cols() != n) return false;
  if (rank(t.matrix) != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec<F> ei = unit_vector<F>(n, i);
      Vec<F> ej = unit_vector<F>(n, j);
      if (!(t(bracket(g, ei, ej)) == bracket(g, t(ei), t(ej)))) return false;
    }
  return true;
}

#define KUNDT_INSTANTIATE_LIE(F)                                              \
  template Vec<F> bracket(const LieAlgebra&, const Vec<F>&, const Vec<F>&);   \
  template LinearMap<F> ad(const LieAlgebra&, const Vec<F>&);                 \
  template bool is_subalgebra(const LieAlgebra&, const Subspace<F>&);         \
  template bool is_abelian(const LieAlgebra&, const Subspace<F>&);            \
  template Subspace<F> derived_subspace(const LieAlgebra&, const Subspace<F>&); \
  template bool is_automorphism(const LieAlgebra&, const LinearMap<F>&);

KUNDT_INSTANTIATE_LIE(Rational)
KUNDT_INSTANTIATE_LIE(QSqrt2)

}  // namespace kundt
