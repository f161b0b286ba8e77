#include "kundt/subspace.hpp"

namespace kundt {

template <class F>
Subspace<F>::Subspace(Matrix<F> basis, std::optional<Vec<F>> dual_covector)
    : basis_(std::move(basis)), dual_(std::move(dual_covector)) {
  if (rank(basis_) != basis_.cols()) throw InputError("subspace basis is linearly dependent");
  if (dual_) {
    if (dual_->size() != basis_.rows()) throw InputError("dual covector has wrong length");
    if (is_zero_vector(*dual_)) throw InputError("dual covector is zero");
    if (basis_.cols() + 1 != basis_.rows()) throw InputError("dual covector given for a non-hyperplane");
    for (std::size_t j = 0; j < basis_.cols(); ++j)
      if (!is_zero(dot(*dual_, basis_.column(j)))) throw InputError("dual covector does not vanish on basis");
  }
}

template <class F>
Subspace<F> Subspace<F>::span(std::size_t ambient_dim, const std::vector<Vec<F>>& vectors) {
  Matrix<F> rows(vectors.size(), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient_dim) throw InputError("span: vector length mismatch");
    for (std::size_t j = 0; j < ambient_dim; ++j) rows(i, j) = vectors[i][j];
  }
  auto echelon = row_reduce(rows);
  std::vector<Vec<F>> basis;
  for (std::size_t k = 0; k < echelon.pivots.size(); ++k) basis.push_back(echelon.reduced.row(k));
  return Subspace(Matrix<F>::from_columns(ambient_dim, basis));
}

template <class F>
Subspace<F> Subspace<F>::from_basis(std::size_t ambient_dim, const std::vector<Vec<F>>& vectors) {
  return Subspace(Matrix<F>::from_columns(ambient_dim, vectors));
}

template <class F>
Subspace<F> Subspace<F>::hyperplane(const Vec<F>& covector) {
  if (is_zero_vector(covector)) throw InputError("hyperplane covector is zero");
  Matrix<F> row(1, covector.size());
  for (std::size_t j = 0; j < covector.size(); ++j) row(0, j) = covector[j];
  return Subspace(kernel_basis(row), covector);
}

template <class F>
std::vector<Vec<F>> Subspace<F>::basis_vectors() const {
  std::vector<Vec<F>> out;
  for (std::size_t j = 0; j < dim(); ++j) out.push_back(basis_.column(j));
  return out;
}

template <class F>
Vec<F> Subspace<F>::covector() const {
  if (dim() + 1 != ambient_dim()) throw InputError("covector requested for a non-hyperplane");
  if (dual_) return primitive_integer(*dual_);
  return primitive_integer(kernel_basis(basis_.transpose()).column(0));
}

template <class F>
bool Subspace<F>::contains(const Vec<F>& v) const {
  if (v.size() != ambient_dim()) throw InputError("membership: vector length mismatch");
  if (dual_) return is_zero(dot(*dual_, v));
  if (dim() == 0) return is_zero_vector(v);
  return solve_linear(basis_, v).has_value();
}

template <class F>
bool Subspace<F>::contains(const Subspace& other) const {
  for (std::size_t j = 0; j < other.dim(); ++j)
    if (!contains(other.basis_.column(j))) return false;
  return true;
}

template <class F>
bool Subspace<F>::operator==(const Subspace& other) const {
  return ambient_dim() == other.ambient_dim() && dim() == other.dim() && contains(other);
}

template class Subspace<Rational>;
template class Subspace<QSqrt2>;

}  // namespace kundt
