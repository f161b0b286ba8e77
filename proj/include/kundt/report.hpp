#pragma once

#include <string>

#include "json.hpp"
#include "kundt/geoflow.hpp"
#include "kundt/kundt.hpp"
#include "kundt/theorems.hpp"

namespace kundt {

/// JSON and text renderings of reports. Exact scalars are strings.
template <class F>
nlohmann::json to_json(const Vec<F>& v);
template <class F>
nlohmann::json to_json(const Matrix<F>& m);
template <class F>
nlohmann::json to_json(const KundtPairReport<F>& r, const std::vector<std::string>& labels);
template <class F>
nlohmann::json to_json(const KundtVectorReport<F>& r, const std::vector<std::string>& labels);
nlohmann::json to_json(const HyperplaneFamily& f, const std::vector<std::string>& labels);
nlohmann::json to_json(const std::vector<ClaimResult>& results);

/// "X1+2*X3" style linear combination.
template <class F>
std::string format_vector(const Vec<F>& v, const std::vector<std::string>& labels);
/// Covector as an equation, e.g. "phi1 - phi2 = 0" style "X1* - X2*".
std::string format_covector(const Vec<Rational>& phi, const std::vector<std::string>& labels);

template <class F>
std::string format_text(const KundtPairReport<F>& r, const std::vector<std::string>& labels);
template <class F>
std::string format_text(const KundtVectorReport<F>& r, const std::vector<std::string>& labels);
std::string format_text(const HyperplaneFamily& f, const std::vector<std::string>& labels);

}  // namespace kundt
