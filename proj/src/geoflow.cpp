#include "kundt/geoflow.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>

namespace kundt {

std::vector<double> FloatModel::dot_product(const std::vector<double>& u, const std::vector<double>& v) const {
  std::vector<double> out(dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (u[i] == 0.0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      const double uv = u[i] * v[j];
      if (uv == 0.0) continue;
      const double* p = &product[(i * dim + j) * dim];
      for (std::size_t k = 0; k < dim; ++k) out[k] += uv * p[k];
    }
  }
  return out;
}

double FloatModel::inner(const std::vector<double>& u, const std::vector<double>& v) const {
  double s = 0;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) s += u[i] * metric[i * dim + j] * v[j];
  return s;
}

template <class F>
FloatModel to_float(const MetricLieAlgebra<F>& m) {
  const std::size_t n = m.dim();
  FloatModel f{n, std::vector<double>(n * n * n), std::vector<double>(n * n)};
  const auto& p = m.product_tensor();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      f.metric[i * n + j] = to_double(m.metric()(i, j));
      for (std::size_t k = 0; k < n; ++k) f.product[(i * n + j) * n + k] = to_double(p.p(i, j, k));
    }
  return f;
}

template FloatModel to_float(const MetricLieAlgebra<Rational>&);
template FloatModel to_float(const MetricLieAlgebra<QSqrt2>&);

namespace {

using V = std::vector<double>;

V axpy(const V& x, double a, const V& y) {
  V out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + a * y[i];
  return out;
}

V rhs(const FloatModel& m, const V& v) {
  V d = m.dot_product(v, v);
  for (auto& x : d) x = -x;
  return d;
}

}  // namespace

FlowResult flow(const FloatModel& m, const std::vector<double>& v0, double t_end, double dt) {
  if (!(dt > 0) || !std::isfinite(dt)) throw InputError("flow: dt must be positive");
  if (!(t_end > 0) || !std::isfinite(t_end)) throw InputError("flow: t_end must be positive");
  if (v0.size() != m.dim) throw InputError("flow: v0 has the wrong length");
  FlowResult r;
  const double e0 = m.inner(v0, v0);
  r.trajectory.push_back({v0, 0.0});
  V v = v0;
  double t = 0;
  const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
  for (std::size_t s = 1; s <= steps; ++s) {
    const double h = std::min(dt, t_end - t);
    const V k1 = rhs(m, v);
    const V k2 = rhs(m, axpy(v, h / 2, k1));
    const V k3 = rhs(m, axpy(v, h / 2, k2));
    const V k4 = rhs(m, axpy(v, h, k3));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    t = s == steps ? t_end : t + h;
    r.energy_drift = std::max(r.energy_drift, std::abs(m.inner(v, v) - e0));
    r.trajectory.push_back({v, t});
  }
  return r;
}

double distance_to_span(const std::vector<std::vector<double>>& basis, const std::vector<double>& v) {
  // Modified Gram-Schmidt on the basis, then subtract the projection.
  std::vector<V> q;
  for (const auto& b : basis) {
    V w = b;
    for (const auto& e : q) {
      double c = 0;
      for (std::size_t i = 0; i < w.size(); ++i) c += e[i] * w[i];
      w = axpy(w, -c, e);
    }
    double norm = 0;
    for (double x : w) norm += x * x;
    norm = std::sqrt(norm);
    if (norm < 1e-14) continue;
    for (auto& x : w) x /= norm;
    q.push_back(std::move(w));
  }
  V r = v;
  for (const auto& e : q) {
    double c = 0;
    for (std::size_t i = 0; i < r.size(); ++i) c += e[i] * r[i];
    r = axpy(r, -c, e);
  }
  double d = 0;
  for (double x : r) d += x * x;
  return std::sqrt(d);
}

double leaf_invariance_defect(const FloatModel& m, const std::vector<std::vector<double>>& h_basis,
                              const std::vector<double>& v0, double t_end, double dt) {
  if (distance_to_span(h_basis, v0) > 1e-12) throw InputError("leaf_invariance_defect: v0 is not in h");
  const FlowResult r = flow(m, v0, t_end, dt);
  double defect = 0;
  for (const auto& s : r.trajectory) defect = std::max(defect, distance_to_span(h_basis, s.v));
  return defect;
}

void write_csv(std::ostream& out, const FlowResult& r) {
  const std::size_t n = r.trajectory.empty() ? 0 : r.trajectory.front().v.size();
  out << "t";
  for (std::size_t i = 1; i <= n; ++i) out << ",v" << i;
  out << "\n" << std::setprecision(17);
  for (const auto& s : r.trajectory) {
    out << s.t;
    for (double x : s.v) out << "," << x;
    out << "\n";
  }
}

}  // namespace kundt
