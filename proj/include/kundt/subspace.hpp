#pragma once

#include <optional>
#include <vector>

#include "kundt/matrix.hpp"

namespace kundt {

/// Linear subspace of F^n held by a full-column-rank basis matrix. Hyperplanes
/// may also carry the covector whose kernel they are.
template <class F>
class Subspace {
 public:
  /// Throws InputError when the columns are linearly dependent.
  explicit Subspace(Matrix<F> basis, std::optional<Vec<F>> dual_covector = std::nullopt);

  /// Span of arbitrary vectors; dependent ones are dropped (row-echelon basis).
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec<F>>& vectors);
  static Subspace from_basis(std::size_t ambient_dim, const std::vector<Vec<F>>& vectors);
  static Subspace hyperplane(const Vec<F>& covector);
  static Subspace zero(std::size_t ambient_dim) { return Subspace(Matrix<F>(ambient_dim, 0)); }
  static Subspace whole(std::size_t ambient_dim) { return Subspace(Matrix<F>::identity(ambient_dim)); }

  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix<F>& basis() const { return basis_; }
  Vec<F> basis_vector(std::size_t i) const { return basis_.column(i); }
  std::vector<Vec<F>> basis_vectors() const;
  const std::optional<Vec<F>>& dual_covector() const { return dual_; }

  /// Covector φ with ker φ equal to this hyperplane (primitive integer form
  /// for rational data). Throws unless codimension is one.
  Vec<F> covector() const;

  bool contains(const Vec<F>& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& other) const;

 private:
  Matrix<F> basis_;
  std::optional<Vec<F>> dual_;
};

template <class To, class From>
Subspace<To> convert(const Subspace<From>& s) {
  std::optional<Vec<To>> dual;
  if (s.dual_covector()) dual = convert<To>(*s.dual_covector());
  return Subspace<To>(convert<To>(s.basis()), dual);
}

}  // namespace kundt
