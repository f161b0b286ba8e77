#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "kundt/lie_algebra.hpp"

namespace kundt {

using MetricMatrix = std::variant<Matrix<Rational>, Matrix<QSqrt2>>;
using TransformMatrix = std::variant<LinearMap<Rational>, LinearMap<QSqrt2>>;
using Params = std::map<std::string, Rational>;

struct NamedMetric {
  std::string name;
  MetricMatrix matrix;
  Params bindings;  // parameter values actually used
  SignatureTriple signature;
  std::string provenance;
};

struct NamedSubspace {
  std::string name;
  Subspace<Rational> subspace;
  std::string provenance;
};

struct NamedTransform {
  std::string name;
  TransformMatrix map;
  std::string provenance;
};

struct CatalogEntry {
  std::string id;
  LieAlgebra algebra;
  std::vector<NamedMetric> metrics;
  std::vector<NamedSubspace> subalgebras;
  std::vector<NamedTransform> transforms;
  std::string provenance;

  const NamedMetric& metric(const std::string& name) const;
  const Subspace<Rational>& subalgebra(const std::string& name) const;
  const TransformMatrix& transform(const std::string& name) const;
};

/// Catalog ids: nil, su2, sl2, sol, e02, oscillator, r4-counterexample.
const std::vector<std::string>& catalog_ids();

/// Metric names available for an id (all of them are built when `metrics`
/// is empty). Missing parameters take per-metric defaults; constraints are
/// checked exactly and violations raise InputError naming the constraint.
std::vector<std::string> catalog_metric_names(const std::string& id, const Params& params = {});

CatalogEntry load(const std::string& id, const Params& params = {}, const std::vector<std::string>& metrics = {});

/// Builds just the algebra of an id (oscillator reads n and lambda_i).
LieAlgebra catalog_algebra(const std::string& id, const Params& params = {});

/// Parses "name=value" assignments.
Params parse_params(const std::vector<std::string>& assignments);

bool is_rational(const MetricMatrix& m);
Matrix<Rational> rational_metric(const MetricMatrix& m);
Matrix<QSqrt2> extended_metric(const MetricMatrix& m);
std::string to_string(const MetricMatrix& m);

}  // namespace kundt
