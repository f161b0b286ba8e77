#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kundt/catalog.hpp"

namespace kundt::cli {

/// Parses comma-separated linear combinations of basis labels, e.g.
/// "X1+X2,X3" or "1/2*e-1-e1". Labels are matched greedily by length.
std::vector<Vec<Rational>> parse_vectors(const std::string& spec, const std::vector<std::string>& labels);

/// An algebra with at most one metric, from the catalog or a document.
struct Source {
  std::string label;
  LieAlgebra algebra;
  std::optional<MetricMatrix> metric;
  std::optional<CatalogEntry> entry;
};

struct SourceOptions {
  std::string catalog;
  std::string file;
  std::string metric;
  std::vector<std::string> params;
};

/// need_metric: throw unless exactly one metric can be determined.
Source resolve(const SourceOptions& o, bool need_metric);

/// Named catalog subalgebra, or a vector spec spanning it.
Subspace<Rational> resolve_subspace(const Source& s, const std::string& spec);

}  // namespace kundt::cli
