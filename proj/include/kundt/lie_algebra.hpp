#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kundt/matrix.hpp"
#include "kundt/subspace.hpp"

namespace kundt {

/// Linear endomorphism acting on basis coordinates.
template <class F>
struct LinearMap {
  Matrix<F> matrix;

  Vec<F> operator()(const Vec<F>& v) const { return matrix * v; }
  LinearMap compose(const LinearMap& inner) const { return {matrix * inner.matrix}; }
};

/// One bracket relation [x_i, x_j] = value used when building an algebra.
struct BracketRelation {
  std::size_t i;
  std::size_t j;
  Vec<Rational> value;
};

/// Real Lie algebra with rational structure constants,
/// [x_i, x_j] = sum_k c(i, j, k) x_k.
///
/// Antisymmetry is validated on construction. The Jacobi identity is not, so
/// deliberately broken tables can be built for negative tests; use
/// check_jacobi.
class LieAlgebra {
 public:
  LieAlgebra(std::vector<std::string> labels, std::vector<Rational> structure);

  /// Relations not listed are zero; each listed [x_i,x_j] also fixes [x_j,x_i].
  static LieAlgebra from_brackets(std::vector<std::string> labels,
                                  const std::vector<BracketRelation>& relations);
  static LieAlgebra abelian(std::size_t dim);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return structure_[(i * dim() + j) * dim() + k];
  }
  const std::vector<Rational>& structure() const { return structure_; }

  bool operator==(const LieAlgebra&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Rational> structure_;
};

template <class F>
Vec<F> bracket(const LieAlgebra& g, const Vec<F>& x, const Vec<F>& y);

/// Largest |component| of [[x_i,x_j],x_k] + cyclic over all basis triples.
Rational check_jacobi(const LieAlgebra& g);

template <class F>
LinearMap<F> ad(const LieAlgebra& g, const Vec<F>& x);

/// K_ij = tr(ad x_i ∘ ad x_j).
Matrix<Rational> killing_form(const LieAlgebra& g);
bool is_unimodular(const LieAlgebra& g);
Subspace<Rational> derived_algebra(const LieAlgebra& g);
Subspace<Rational> center(const LieAlgebra& g);

/// Bracket closure of a subspace; throws on a dependent basis (enforced by
/// Subspace itself).
template <class F>
bool is_subalgebra(const LieAlgebra& g, const Subspace<F>& s);
template <class F>
bool is_abelian(const LieAlgebra& g, const Subspace<F>& s);
/// Span of brackets of basis pairs of s.
template <class F>
Subspace<F> derived_subspace(const LieAlgebra& g, const Subspace<F>& s);

template <class F>
bool is_automorphism(const LieAlgebra& g, const LinearMap<F>& t);

}  // namespace kundt
