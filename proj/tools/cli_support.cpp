#include "cli_support.hpp"

#include "kundt/document.hpp"

namespace kundt::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::optional<std::size_t> match_label(const std::string& s, std::size_t pos, const std::vector<std::string>& labels,
                                       std::size_t& length) {
  std::optional<std::size_t> best;
  length = 0;
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k].size() > length && s.compare(pos, labels[k].size(), labels[k]) == 0) {
      best = k;
      length = labels[k].size();
    }
  return best;
}

Vec<Rational> parse_combination(const std::string& s, const std::vector<std::string>& labels) {
  if (s.empty()) throw InputError("empty vector in spec");
  Vec<Rational> v(labels.size(), Rational(0));
  std::size_t pos = 0;
  while (pos < s.size()) {
    Rational sgn_(1);
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sgn_ = -1;
      ++pos;
    } else if (pos != 0) {
      throw InputError("expected + or - at '" + s.substr(pos) + "' in '" + s + "'");
    }
    Rational coeff(1);
    std::size_t len = 0;
    auto label = match_label(s, pos, labels, len);
    if (!label) {
      const auto star = s.find('*', pos);
      if (star == std::string::npos) throw InputError("unknown basis label at '" + s.substr(pos) + "' in '" + s + "'");
      coeff = parse_rational(s.substr(pos, star - pos));
      pos = star + 1;
      label = match_label(s, pos, labels, len);
      if (!label) throw InputError("unknown basis label at '" + s.substr(pos) + "' in '" + s + "'");
    }
    v[*label] += sgn_ * coeff;
    pos += len;
  }
  return v;
}

}  // namespace

std::vector<Vec<Rational>> parse_vectors(const std::string& spec, const std::vector<std::string>& labels) {
  std::vector<Vec<Rational>> out;
  for (const auto& part : split(spec, ',')) out.push_back(parse_combination(part, labels));
  return out;
}

Source resolve(const SourceOptions& o, bool need_metric) {
  if (o.catalog.empty() == o.file.empty()) throw InputError("give exactly one of --catalog or --file");
  if (!o.file.empty()) {
    if (!o.params.empty()) throw InputError("--param only applies to catalog entries");
    AlgebraDocument doc = read_document(o.file);
    if (need_metric && !doc.metric) throw InputError(o.file + ": the document has no metric");
    return {o.file, std::move(doc.algebra), std::move(doc.metric), std::nullopt};
  }
  const Params params = parse_params(o.params);
  std::string metric = o.metric;
  if (metric.empty()) {
    const auto names = catalog_metric_names(o.catalog, params);
    if (names.size() == 1) {
      metric = names.front();
    } else if (need_metric) {
      std::string list;
      for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
      throw InputError("choose a metric with --metric (" + list + ")");
    }
  }
  if (metric.empty()) return {o.catalog, catalog_algebra(o.catalog, params), std::nullopt, std::nullopt};
  CatalogEntry e = load(o.catalog, params, {metric});
  Source s{o.catalog + "/" + metric, e.algebra, e.metric(metric).matrix, std::nullopt};
  s.entry = std::move(e);
  return s;
}

Subspace<Rational> resolve_subspace(const Source& s, const std::string& spec) {
  if (s.entry)
    for (const auto& named : s.entry->subalgebras)
      if (named.name == spec) return named.subspace;
  const auto vs = parse_vectors(spec, s.algebra.labels());
  return Subspace<Rational>::from_basis(s.algebra.dim(), vs);
}

}  // namespace kundt::cli
