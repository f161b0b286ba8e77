#pragma once

#include <iosfwd>
#include <vector>

#include "kundt/connection.hpp"

namespace kundt {

/// Product tensor and metric in doubles, converted once per run.
struct FloatModel {
  std::size_t dim = 0;
  std::vector<double> product;  // [(i*n + j)*n + k]
  std::vector<double> metric;   // row-major

  std::vector<double> dot_product(const std::vector<double>& u, const std::vector<double>& v) const;
  double inner(const std::vector<double>& u, const std::vector<double>& v) const;
};

template <class F>
FloatModel to_float(const MetricLieAlgebra<F>& m);

struct FlowState {
  std::vector<double> v;
  double t = 0;
};

struct FlowResult {
  std::vector<FlowState> trajectory;
  /// max |<v(t),v(t)> - <v0,v0>| over the trajectory.
  double energy_drift = 0;
};

/// RK4 on v' = -v•v from v0 over [0, t_end]. The last step is shortened to
/// land on t_end. Throws InputError for dt <= 0 or t_end <= 0.
FlowResult flow(const FloatModel& m, const std::vector<double>& v0, double t_end, double dt);

template <class F>
FlowResult flow(const MetricLieAlgebra<F>& m, const std::vector<double>& v0, double t_end, double dt) {
  return flow(to_float(m), v0, t_end, dt);
}

/// Euclidean distance from v to span of the columns of basis.
double distance_to_span(const std::vector<std::vector<double>>& basis, const std::vector<double>& v);

/// Max distance of v(t) to h along the flow from v0 ∈ h. Throws InputError
/// when v0 is farther than 1e-12 from h.
double leaf_invariance_defect(const FloatModel& m, const std::vector<std::vector<double>>& h_basis,
                              const std::vector<double>& v0, double t_end, double dt);

template <class F>
double leaf_invariance_defect(const MetricLieAlgebra<F>& m, const Subspace<F>& h, const std::vector<double>& v0,
                              double t_end, double dt) {
  std::vector<std::vector<double>> basis;
  for (const auto& b : h.basis_vectors()) {
    std::vector<double> col;
    for (const auto& x : b) col.push_back(to_double(x));
    basis.push_back(std::move(col));
  }
  return leaf_invariance_defect(to_float(m), basis, v0, t_end, dt);
}

/// CSV with header t,v1,...,vn.
void write_csv(std::ostream& out, const FlowResult& r);

}  // namespace kundt
