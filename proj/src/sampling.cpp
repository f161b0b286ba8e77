#include "kundt/sampling.hpp"

namespace kundt {

Rational random_rational(Rng& rng, int num_bound, int den_bound) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  return make_rational(num(rng), den(rng));
}

Vec<Rational> random_vector(Rng& rng, std::size_t dim, int num_bound) {
  Vec<Rational> v(dim);
  for (auto& x : v) x = random_rational(rng, num_bound);
  return v;
}

Vec<Rational> random_element(Rng& rng, const Subspace<Rational>& s) {
  if (s.dim() == 0) throw InputError("random_element: zero subspace");
  for (;;) {
    Vec<Rational> coeffs = random_vector(rng, s.dim());
    Vec<Rational> v = s.basis() * coeffs;
    if (!is_zero_vector(v)) return v;
  }
}

Matrix<Rational> random_lorentzian_metric(Rng& rng, std::size_t dim) {
  for (;;) {
    Matrix<Rational> g(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i; j < dim; ++j) g(i, j) = g(j, i) = random_rational(rng);
    if (signature(g) == SignatureTriple{dim - 1, 1, 0}) return g;
  }
}

namespace {

Vec<Rational> hyperplane_covector(const Subspace<Rational>& h) {
  if (h.dim() + 1 != h.ambient_dim()) throw InputError("expected a hyperplane");
  return kernel_basis(h.basis().transpose()).column(0);
}

/// Vectors x of h with ad_x(g) ⊂ h.
Subspace<Rational> ad_into(const LieAlgebra& g, const Subspace<Rational>& h) {
  const std::size_t n = g.dim(), k = h.dim();
  const Vec<Rational> phi = hyperplane_covector(h);
  Matrix<Rational> constraints(n, k);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < k; ++i)
      constraints(j, i) = dot(phi, bracket(g, h.basis_vector(i), unit_vector<Rational>(n, j)));
  const Matrix<Rational> ker = kernel_basis(constraints);
  std::vector<Vec<Rational>> vs;
  for (std::size_t c = 0; c < ker.cols(); ++c) vs.push_back(h.basis() * ker.column(c));
  return Subspace<Rational>::span(n, vs);
}

}  // namespace

Matrix<Rational> metric_with_degenerate_hyperplane(Rng& rng, const LieAlgebra& g, const Subspace<Rational>& h,
                                                   bool kundt_bias) {
  const std::size_t n = g.dim();
  if (h.ambient_dim() != n || h.dim() + 1 != n) throw InputError("expected a hyperplane of the algebra");
  Vec<Rational> e;
  if (kundt_bias) {
    Subspace<Rational> pool = is_abelian(g, h) ? ad_into(g, h) : derived_subspace(g, h);
    e = pool.dim() > 0 ? random_element(rng, pool) : random_element(rng, h);
  } else {
    e = random_element(rng, h);
  }
  // Adapted basis (e, f_1..f_{n-2}, u) with f spanning a complement of e in h.
  std::vector<Vec<Rational>> cols = {e};
  for (std::size_t i = 0; i < h.dim() && cols.size() < h.dim(); ++i) {
    auto trial = cols;
    trial.push_back(h.basis_vector(i));
    if (Subspace<Rational>::span(n, trial).dim() == trial.size()) cols = trial;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vec<Rational> u = unit_vector<Rational>(n, i);
    if (!h.contains(u)) {
      cols.push_back(u);
      break;
    }
  }
  const Matrix<Rational> c = Matrix<Rational>::from_columns(n, cols);
  // Gram matrix in the adapted basis: e is null and orthogonal to h, <e,u> != 0,
  // positive definite on the f's; determinant -<e,u>^2 det(f-block) < 0.
  Matrix<Rational> adapted(n, n);
  Rational eu;
  do eu = random_rational(rng); while (is_zero(eu));
  adapted(0, n - 1) = adapted(n - 1, 0) = eu;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    adapted(i, i) = Rational(std::uniform_int_distribution<int>(1, 3)(rng)) / std::uniform_int_distribution<int>(1, 2)(rng);
    adapted(i, n - 1) = adapted(n - 1, i) = random_rational(rng);
  }
  adapted(n - 1, n - 1) = random_rational(rng);
  const Matrix<Rational> cinv = inverse(c);
  return cinv.transpose() * adapted * cinv;
}

}  // namespace kundt
