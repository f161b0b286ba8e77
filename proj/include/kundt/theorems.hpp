#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "kundt/catalog.hpp"
#include "kundt/kundt.hpp"

namespace kundt {

struct ClaimOutcome {
  bool passed = false;
  std::string detail;
};

struct Claim {
  std::string id;
  std::string statement;
  std::function<ClaimOutcome()> check;
};

struct ClaimResult {
  std::string id;
  std::string statement;
  bool passed = false;
  std::string detail;
};

struct SuiteOptions {
  /// Replaces a catalog metric, keyed "id/metric" (e.g. "nil/n3"), at every
  /// parameter binding.
  std::map<std::string, MetricMatrix> metric_overrides;
};

/// One check per theorem clause, in a fixed order.
std::vector<Claim> paper_theorem_suite(const SuiteOptions& options = {});

/// fnmatch-style '*' and '?' matching.
bool glob_match(const std::string& pattern, const std::string& text);

/// Runs the claims whose id matches `only` (all when empty), concurrently
/// when `parallel`; results keep suite order. A claim that throws fails
/// with the exception text as detail.
std::vector<ClaimResult> run_claims(const std::vector<Claim>& claims, const std::string& only = "", bool parallel = true);

/// (catalog id, metric, parameter binding) at which the classification
/// theorems are exercised.
struct MetricSample {
  std::string id;
  std::string metric;
  Params params;
  std::string label() const;
};

std::vector<MetricSample> theorem_samples(const std::string& id);

/// Pair report for a sampled metric and a rational subalgebra, dispatched to
/// the metric's field.
struct PairOutcome {
  KundtVerdict verdict = KundtVerdict::NotLocallyKundt;
  bool dim3_criterion = false;
  bool degenerate = false;
};
PairOutcome evaluate_pair(const MetricMatrix& metric, const LieAlgebra& g, const Subspace<Rational>& h);

/// Covectors (primitive integer) of every KundtPair that
/// classify_kundt_structures finds, plus the number of reports.
struct ClassificationSummary {
  std::vector<Vec<QSqrt2>> kundt_covectors;
  std::vector<Vec<QSqrt2>> locally_kundt_only_covectors;
  std::size_t reports = 0;
  bool dim3_agrees = true;
};
ClassificationSummary summarize_classification(const MetricMatrix& metric, const LieAlgebra& g);

/// Compares enumerate_hyperplane_subalgebras with the hand-derived list of
/// two-dimensional subalgebras for nil, su2, sol, e02 or sl2.
ClaimOutcome compare_with_subalgebra_list(const std::string& id);

/// Automorphism of sl(2,R) sending span{e,h} onto h, built from a basis
/// (u,v) of h with [u,v] = 2v; nullopt if h is not a 2-dimensional
/// non-abelian subalgebra or the construction leaves Q.
std::optional<LinearMap<Rational>> sl2_conjugating_automorphism(const LieAlgebra& sl2, const Subspace<Rational>& h);

}  // namespace kundt
