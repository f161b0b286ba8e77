#pragma once

#include <optional>
#include <vector>

#include "kundt/lie_algebra.hpp"

namespace kundt {

/// Levi-Civita product x_i • x_j = sum_k p(i, j, k) x_k.
template <class F>
class ProductTensor {
 public:
  ProductTensor() = default;
  ProductTensor(std::size_t dim, std::vector<F> entries);

  std::size_t dim() const { return dim_; }
  const F& p(std::size_t i, std::size_t j, std::size_t k) const { return entries_[(i * dim_ + j) * dim_ + k]; }
  Vec<F> product(const Vec<F>& u, const Vec<F>& v) const;
  bool operator==(const ProductTensor&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<F> entries_;
};

/// Unique torsion-free metric product:
///   2<u•v, w> = <[u,v],w> + <[w,u],v> + <[w,v],u>,
/// solved against the metric once per basis pair. Throws InputError on a
/// degenerate or non-symmetric metric.
template <class F>
ProductTensor<F> levi_civita(const LieAlgebra& g, const Matrix<F>& metric);

/// Lie algebra with a non-degenerate symmetric bilinear form. The
/// Levi-Civita product is computed at construction and kept with the value.
template <class F>
class MetricLieAlgebra {
 public:
  MetricLieAlgebra(LieAlgebra algebra, Matrix<F> metric);

  const LieAlgebra& algebra() const { return algebra_; }
  const Matrix<F>& metric() const { return metric_; }
  const ProductTensor<F>& product_tensor() const { return product_; }
  std::size_t dim() const { return algebra_.dim(); }

  F inner(const Vec<F>& x, const Vec<F>& y) const { return bilinear(metric_, x, y); }
  Vec<F> product(const Vec<F>& u, const Vec<F>& v) const { return product_.product(u, v); }
  Vec<F> bracket(const Vec<F>& u, const Vec<F>& v) const { return kundt::bracket(algebra_, u, v); }
  SignatureTriple metric_signature() const { return signature(metric_); }
  /// Signature (dim-1, 1, 0).
  bool is_lorentzian() const;

 private:
  LieAlgebra algebra_;
  Matrix<F> metric_;
  ProductTensor<F> product_;
};

template <class F>
const ProductTensor<F>& levi_civita(const MetricLieAlgebra<F>& m) {
  return m.product_tensor();
}

/// R(u,v)w = u•(v•w) - v•(u•w) - [u,v]•w.
template <class F>
Vec<F> curvature(const MetricLieAlgebra<F>& m, const Vec<F>& u, const Vec<F>& v, const Vec<F>& w);

/// All R(x_i,x_j)x_k, indexed [(i*n + j)*n + k].
template <class F>
std::vector<Vec<F>> curvature_table(const MetricLieAlgebra<F>& m);

/// Constant c with R(u,v)w = c(<v,w>u - <u,w>v) on every basis triple, or
/// nullopt when no such constant exists.
template <class F>
std::optional<F> constant_curvature(const MetricLieAlgebra<F>& m);

template <class F>
struct ConstantCurvatureResult {
  bool constant = false;
  std::optional<F> value;
};

template <class F>
ConstantCurvatureResult<F> is_constant_curvature(const MetricLieAlgebra<F>& m) {
  auto c = constant_curvature(m);
  return {c.has_value(), c};
}

/// Ric(u,v) = tr(w -> R(w,u)v).
template <class F>
Matrix<F> ricci(const MetricLieAlgebra<F>& m);
template <class F>
F scalar_curvature(const MetricLieAlgebra<F>& m);

/// Identities every Levi-Civita product must satisfy, checked on basis
/// elements: u•v - v•u = [u,v]; <u•v,w> + <v,u•w> = 0; the first Bianchi
/// identity; <R(u,v)w,z> = <R(w,z)u,v>.
struct ConnectionChecks {
  bool torsion_free = false;
  bool metric_compatible = false;
  bool first_bianchi = false;
  bool pair_symmetric = false;
  bool all() const { return torsion_free && metric_compatible && first_bianchi && pair_symmetric; }
};

template <class F>
ConnectionChecks check_connection(const MetricLieAlgebra<F>& m);

}  // namespace kundt
