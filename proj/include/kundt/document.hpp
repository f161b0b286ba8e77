#pragma once

#include <optional>
#include <string>

#include "kundt/catalog.hpp"

namespace kundt {

/// JSON algebra file:
///   {"schema": 1, "dim": 3, "basis": ["X1","X2","X3"],
///    "brackets": [{"i": "X1", "j": "X2", "coeffs": {"X3": "1"}}],
///    "metric": [["1","0","0"], ...]}
/// Scalars are strings, "p", "p/q" or "a+b*sqrt2". The metric is optional.
struct AlgebraDocument {
  LieAlgebra algebra;
  std::optional<MetricMatrix> metric;
};

/// Throws InputError naming the JSON position or field on any problem,
/// including a failing Jacobi identity or a non-symmetric metric.
AlgebraDocument parse_document(const std::string& text, const std::string& source = "<input>");
AlgebraDocument read_document(const std::string& path);

std::string write_document(const AlgebraDocument& doc);

}  // namespace kundt
