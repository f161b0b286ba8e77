#include "kundt/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace kundt {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& source, const std::string& field, const std::string& what) {
  throw InputError(source + ": " + field + ": " + what);
}

const json& member(const json& obj, const char* key, const std::string& source, const std::string& where) {
  if (!obj.is_object()) fail(source, where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(source, where.empty() ? key : where + "." + key, "missing");
  return *it;
}

std::string scalar_text(const json& j, const std::string& source, const std::string& field) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail(source, field, "expected a rational string such as \"3/4\"");
}

template <class F>
F scalar(const json& j, const std::string& source, const std::string& field) {
  try {
    return parse_scalar<F>(scalar_text(j, source, field));
  } catch (const InputError& e) {
    fail(source, field, e.what());
  }
}

}  // namespace

AlgebraDocument parse_document(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) fail(source, "document", "expected a JSON object");
  if (auto it = doc.find("schema"); it != doc.end() && *it != 1) fail(source, "schema", "unsupported version");

  const json& basis = member(doc, "basis", source, "");
  if (!basis.is_array() || basis.empty()) fail(source, "basis", "expected a non-empty array of names");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].is_string()) fail(source, "basis[" + std::to_string(i) + "]", "expected a string");
    labels.push_back(basis[i].get<std::string>());
  }
  const std::size_t n = labels.size();
  if (auto it = doc.find("dim"); it != doc.end()) {
    if (!it->is_number_unsigned() || it->get<std::size_t>() != n) fail(source, "dim", "does not match the basis length");
  }
  auto index = [&](const json& j, const std::string& field) {
    if (!j.is_string()) fail(source, field, "expected a basis name");
    for (std::size_t k = 0; k < n; ++k)
      if (labels[k] == j.get<std::string>()) return k;
    fail(source, field, "unknown basis name '" + j.get<std::string>() + "'");
  };

  std::vector<BracketRelation> relations;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  if (auto it = doc.find("brackets"); it != doc.end()) {
    if (!it->is_array()) fail(source, "brackets", "expected an array");
    for (std::size_t r = 0; r < it->size(); ++r) {
      const std::string where = "brackets[" + std::to_string(r) + "]";
      const json& b = (*it)[r];
      const std::size_t i = index(member(b, "i", source, where), where + ".i");
      const std::size_t j = index(member(b, "j", source, where), where + ".j");
      if (i == j) fail(source, where, "[x,x] is always zero");
      if (!seen.insert({std::min(i, j), std::max(i, j)}).second) fail(source, where, "bracket listed twice");
      const json& coeffs = member(b, "coeffs", source, where);
      if (!coeffs.is_object()) fail(source, where + ".coeffs", "expected an object name -> rational");
      Vec<Rational> value(n, Rational(0));
      for (const auto& [name, c] : coeffs.items()) {
        const std::string field = where + ".coeffs." + name;
        value[index(json(name), field)] = scalar<Rational>(c, source, field);
      }
      relations.push_back({i, j, value});
    }
  }
  AlgebraDocument out{[&] {
    try {
      return LieAlgebra::from_brackets(labels, relations);
    } catch (const InputError& e) {
      fail(source, "basis", e.what());
    }
  }(), std::nullopt};
  if (!is_zero(check_jacobi(out.algebra))) fail(source, "brackets", "the Jacobi identity fails");

  if (auto it = doc.find("metric"); it != doc.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != n) fail(source, "metric", "expected a " + std::to_string(n) + "x" + std::to_string(n) + " array");
    Matrix<QSqrt2> g(n, n);
    bool rational = true;
    for (std::size_t i = 0; i < n; ++i) {
      const json& row = (*it)[i];
      if (!row.is_array() || row.size() != n) fail(source, "metric[" + std::to_string(i) + "]", "expected " + std::to_string(n) + " entries");
      for (std::size_t j = 0; j < n; ++j) {
        g(i, j) = scalar<QSqrt2>(row[j], source, "metric[" + std::to_string(i) + "][" + std::to_string(j) + "]");
        rational = rational && g(i, j).is_rational();
      }
    }
    if (!g.is_symmetric()) fail(source, "metric", "not symmetric");
    if (rational) {
      Matrix<Rational> r(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = g(i, j).rational_part();
      out.metric = r;
    } else {
      out.metric = g;
    }
  }
  return out;
}

AlgebraDocument read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path);
}

std::string write_document(const AlgebraDocument& doc) {
  const LieAlgebra& g = doc.algebra;
  const std::size_t n = g.dim();
  json out;
  out["schema"] = 1;
  out["dim"] = n;
  out["basis"] = g.labels();
  json brackets = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      json coeffs = json::object();
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(g.c(i, j, k))) coeffs[g.labels()[k]] = to_string(g.c(i, j, k));
      if (!coeffs.empty()) brackets.push_back({{"i", g.labels()[i]}, {"j", g.labels()[j]}, {"coeffs", coeffs}});
    }
  out["brackets"] = brackets;
  if (doc.metric) {
    out["metric"] = std::visit(
        [n](const auto& m) {
          json rows = json::array();
          for (std::size_t i = 0; i < n; ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < n; ++j) row.push_back(to_string(m(i, j)));
            rows.push_back(row);
          }
          return rows;
        },
        *doc.metric);
  }
  return out.dump(2) + "\n";
}

}  // namespace kundt
