#include "kundt/connection.hpp"

namespace kundt {

template <class F>
ProductTensor<F>::ProductTensor(std::size_t dim, std::vector<F> entries) : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim * dim * dim) throw InputError("product tensor must have dim^3 entries");
}

template <class F>
Vec<F> ProductTensor<F>::product(const Vec<F>& u, const Vec<F>& v) const {
  if (u.size() != dim_ || v.size() != dim_) throw InputError("product: vector length mismatch");
  Vec<F> out(dim_, F(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(u[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (is_zero(v[j])) continue;
      F uv = u[i] * v[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (!is_zero(p(i, j, k))) out[k] += uv * p(i, j, k);
    }
  }
  return out;
}

template <class F>
ProductTensor<F> levi_civita(const LieAlgebra& g, const Matrix<F>& metric) {
  const std::size_t n = g.dim();
  if (metric.rows() != n || metric.cols() != n) throw InputError("metric has the wrong size");
  if (!metric.is_symmetric()) throw InputError("metric is not symmetric");
  if (rank(metric) != n) throw InputError("metric is degenerate");
  std::vector<F> entries(n * n * n, F(0));
  const Matrix<F> twice = metric.scaled(F(2));
  auto e = [n](std::size_t i) { return unit_vector<F>(n, i); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec<F> rhs(n, F(0));
      const Vec<F> bij = bracket(g, e(i), e(j));
      for (std::size_t l = 0; l < n; ++l) {
        rhs[l] = bilinear(metric, bij, e(l)) + bilinear(metric, bracket(g, e(l), e(i)), e(j)) +
                 bilinear(metric, bracket(g, e(l), e(j)), e(i));
      }
      auto x = solve_linear(twice, rhs);
      for (std::size_t k = 0; k < n; ++k) entries[(i * n + j) * n + k] = (*x)[k];
    }
  return ProductTensor<F>(n, std::move(entries));
}

template <class F>
MetricLieAlgebra<F>::MetricLieAlgebra(LieAlgebra algebra, Matrix<F> metric)
    : algebra_(std::move(algebra)), metric_(std::move(metric)), product_(levi_civita(algebra_, metric_)) {}

template <class F>
bool MetricLieAlgebra<F>::is_lorentzian() const {
  return metric_signature() == SignatureTriple{dim() - 1, 1, 0};
}

template <class F>
Vec<F> curvature(const MetricLieAlgebra<F>& m, const Vec<F>& u, const Vec<F>& v, const Vec<F>& w) {
  Vec<F> r = m.product(u, m.product(v, w));
  r = sub(r, m.product(v, m.product(u, w)));
  return sub(r, m.product(m.bracket(u, v), w));
}

template <class F>
std::vector<Vec<F>> curvature_table(const MetricLieAlgebra<F>& m) {
  const std::size_t n = m.dim();
  std::vector<Vec<F>> table;
  table.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        table.push_back(curvature(m, unit_vector<F>(n, i), unit_vector<F>(n, j), unit_vector<F>(n, k)));
  return table;
}

template <class F>
std::optional<F> constant_curvature(const MetricLieAlgebra<F>& m) {
  const std::size_t n = m.dim();
  const auto table = curvature_table(m);
  std::optional<F> c;
  // Pass 1 reads c off the first nonzero model component; pass 2 verifies.
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Vec<F> model(n, F(0));
          model[i] += m.metric()(j, k);
          model[j] -= m.metric()(i, k);
          const Vec<F>& r = table[(i * n + j) * n + k];
          for (std::size_t l = 0; l < n; ++l) {
            if (pass == 0) {
              if (!c && !is_zero(model[l])) c = F(r[l] / model[l]);
            } else {
              F expected = c ? F(*c * model[l]) : F(0);
              if (!(r[l] == expected)) return std::nullopt;
            }
          }
        }
  return c ? c : std::optional<F>(F(0));
}

template <class F>
Matrix<F> ricci(const MetricLieAlgebra<F>& m) {
  const std::size_t n = m.dim();
  const auto table = curvature_table(m);
  Matrix<F> ric(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      F t(0);
      for (std::size_t w = 0; w < n; ++w) t += table[(w * n + u) * n + v][w];
      ric(u, v) = t;
    }
  return ric;
}

template <class F>
F scalar_curvature(const MetricLieAlgebra<F>& m) {
  return (inverse(m.metric()) * ricci(m)).trace();
}

template <class F>
ConnectionChecks check_connection(const MetricLieAlgebra<F>& m) {
  const std::size_t n = m.dim();
  auto e = [n](std::size_t i) { return unit_vector<F>(n, i); };
  ConnectionChecks out{true, true, true, true};
  const auto r = curvature_table(m);
  auto R = [&](std::size_t i, std::size_t j, std::size_t k) -> const Vec<F>& { return r[(i * n + j) * n + k]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec<F> uv = m.product(e(i), e(j));
      if (sub(uv, m.product(e(j), e(i))) != m.bracket(e(i), e(j))) out.torsion_free = false;
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_zero(m.inner(uv, e(k)) + m.inner(e(j), m.product(e(i), e(k))))) out.metric_compatible = false;
        if (!is_zero_vector(add(add(R(i, j, k), R(j, k, i)), R(k, i, j)))) out.first_bianchi = false;
        for (std::size_t l = 0; l < n; ++l)
          if (m.inner(R(i, j, k), e(l)) != m.inner(R(k, l, i), e(j))) out.pair_symmetric = false;
      }
    }
  return out;
}

#define KUNDT_INSTANTIATE_CONNECTION(F)                                                             \
  template class ProductTensor<F>;                                                                  \
  template class MetricLieAlgebra<F>;                                                               \
  template ProductTensor<F> levi_civita(const LieAlgebra&, const Matrix<F>&);                       \
  template Vec<F> curvature(const MetricLieAlgebra<F>&, const Vec<F>&, const Vec<F>&, const Vec<F>&); \
  template std::vector<Vec<F>> curvature_table(const MetricLieAlgebra<F>&);                         \
  template std::optional<F> constant_curvature(const MetricLieAlgebra<F>&);                         \
  template Matrix<F> ricci(const MetricLieAlgebra<F>&);                                             \
  template F scalar_curvature(const MetricLieAlgebra<F>&);                                          \
  template ConnectionChecks check_connection(const MetricLieAlgebra<F>&);

KUNDT_INSTANTIATE_CONNECTION(Rational)
KUNDT_INSTANTIATE_CONNECTION(QSqrt2)

}  // namespace kundt
