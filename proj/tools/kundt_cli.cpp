#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli_support.hpp"
#include "kundt/document.hpp"
#include "kundt/geoflow.hpp"
#include "kundt/report.hpp"
#include "kundt/theorems.hpp"

using namespace kundt;
using nlohmann::json;

namespace {

constexpr int kPositive = 0;
constexpr int kInputError = 1;
constexpr int kNegative = 2;

void add_source_options(CLI::App* cmd, cli::SourceOptions& o) {
  cmd->add_option("--catalog", o.catalog, "catalog id (" + [] {
    std::string s;
    for (const auto& id : catalog_ids()) s += (s.empty() ? "" : ", ") + id;
    return s;
  }() + ")");
  cmd->add_option("--file", o.file, "AlgebraDocument JSON file");
  cmd->add_option("--metric", o.metric, "catalog metric name");
  cmd->add_option("--param", o.params, "catalog parameter name=value (repeatable)");
}

json envelope(const std::string& command) { return {{"schema", 1}, {"command", command}}; }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

template <class F>
int check_with(const cli::Source& src, const Matrix<F>& metric, const std::string& sub, const std::string& vec, bool as_json) {
  const MetricLieAlgebra<F> m(src.algebra, metric);
  const auto& labels = src.algebra.labels();
  json out = envelope("check");
  out["source"] = src.label;
  if (!vec.empty()) {
    const auto vs = cli::parse_vectors(vec, labels);
    if (vs.size() != 1) throw InputError("--vector takes a single vector");
    const auto r = check_kundt_vector(m, convert<F>(vs.front()));
    if (as_json) {
      out["vector_report"] = to_json(r, labels);
      emit(out);
    } else {
      std::cout << src.label << "\n" << format_text(r, labels);
    }
    return r.k2_holds ? kPositive : kNegative;
  }
  if (!sub.empty()) {
    const auto h = convert<F>(cli::resolve_subspace(src, sub));
    const auto r = check_kundt_pair(m, h);
    if (as_json) {
      out["pair_report"] = to_json(r, labels);
      if (m.dim() == 3) out["dim3_criterion"] = check_dim3_criterion(m, h);
      emit(out);
    } else {
      std::cout << src.label << "\n" << format_text(r, labels);
      if (m.dim() == 3) std::cout << "dim-3 criterion   " << (check_dim3_criterion(m, h) ? "holds" : "fails") << "\n";
    }
    return r.verdict == KundtVerdict::KundtPair ? kPositive : kNegative;
  }
  if (m.dim() != 3) throw InputError("without --subalgebra or --vector the algebra must be 3-dimensional");
  const auto reports = classify_kundt_structures(m);
  bool any = false;
  json list = json::array();
  for (const auto& r : reports) {
    any = any || r.verdict == KundtVerdict::KundtPair;
    list.push_back(to_json(r, labels));
  }
  if (as_json) {
    out["pair_reports"] = list;
    emit(out);
  } else {
    std::cout << src.label << ": " << reports.size() << " hyperplane subalgebras examined\n";
    for (const auto& r : reports) {
      const auto phi = r.h.covector();
      std::cout << "  ker(" << format_vector(phi, [&] {
        std::vector<std::string> d;
        for (const auto& l : labels) d.push_back(l + "*");
        return d;
      }()) << ")  degenerate=" << (r.degenerate ? "yes" : "no") << "  stable=" << (r.product_stable ? "yes" : "no")
                << "  " << to_string(r.verdict) << "\n";
    }
  }
  return any ? kPositive : kNegative;
}

template <class F>
int curvature_with(const cli::Source& src, const Matrix<F>& metric, bool as_json) {
  const MetricLieAlgebra<F> m(src.algebra, metric);
  const auto ric = ricci(m);
  const F s = scalar_curvature(m);
  const auto cc = is_constant_curvature(m);
  const auto checks = check_connection(m);
  const auto sig = m.metric_signature();
  if (as_json) {
    json out = envelope("curvature");
    out["source"] = src.label;
    out["signature"] = {sig.positive, sig.negative, sig.null};
    out["ricci"] = to_json(ric);
    out["scalar_curvature"] = to_string(s);
    out["constant_curvature"] = cc.constant ? json(to_string(*cc.value)) : json(nullptr);
    out["identities"] = {{"torsion_free", checks.torsion_free},
                         {"metric_compatible", checks.metric_compatible},
                         {"first_bianchi", checks.first_bianchi},
                         {"pair_symmetric", checks.pair_symmetric}};
    emit(out);
  } else {
    std::cout << src.label << "\n";
    std::cout << "signature         (" << sig.positive << "," << sig.negative << "," << sig.null << ")\n";
    std::cout << "Ricci             " << to_string(ric) << "\n";
    std::cout << "scalar curvature  " << to_string(s) << "\n";
    std::cout << "constant curv.    " << (cc.constant ? to_string(*cc.value) : std::string("no")) << "\n";
    std::cout << "identities        " << (checks.all() ? "all hold" : "FAIL") << "\n";
  }
  return checks.all() ? kPositive : kNegative;
}

std::vector<double> to_doubles(const Vec<Rational>& v) {
  std::vector<double> out;
  for (const auto& x : v) out.push_back(to_double(x));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kundt structures on Lorentzian Lie algebras"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "print one JSON report object");

  cli::SourceOptions src_opts;
  std::string sub_spec, vec_spec;
  auto* check = app.add_subcommand("check", "Kundt-pair or Kundt-vector report");
  add_source_options(check, src_opts);
  check->add_option("--subalgebra", sub_spec, "codimension-one subalgebra: catalog name or comma-separated vectors");
  check->add_option("--vector", vec_spec, "vector generating a left-invariant field");
  check->add_flag("--json", as_json);

  auto* enumerate = app.add_subcommand("enumerate", "two-dimensional subalgebras of a 3-dimensional algebra");
  add_source_options(enumerate, src_opts);
  enumerate->add_flag("--json", as_json);

  std::string only;
  std::vector<std::string> overrides;
  bool sequential = false;
  auto* verify = app.add_subcommand("verify-paper", "run every theorem check");
  verify->add_option("--only", only, "glob on claim ids, e.g. 'sl2-*'");
  verify->add_option("--metric-override", overrides, "id/metric=FILE, metric taken from an AlgebraDocument (repeatable)");
  verify->add_flag("--sequential", sequential, "run claims one at a time");
  verify->add_flag("--json", as_json);

  std::string v0_spec, leaf_spec, csv_path;
  double dt = 1e-3, t_end = 10, tolerance = 1e-9;
  auto* flow_cmd = app.add_subcommand("flow", "integrate the geodesic equation v' = -v•v");
  add_source_options(flow_cmd, src_opts);
  flow_cmd->add_option("--v0", v0_spec, "initial velocity as a linear combination of basis labels")->required();
  flow_cmd->add_option("--dt", dt, "step size");
  flow_cmd->add_option("--t-end", t_end, "final time");
  flow_cmd->add_option("--leaf", leaf_spec, "subalgebra whose invariance is measured");
  flow_cmd->add_option("--tolerance", tolerance, "defect above which --leaf reports failure");
  flow_cmd->add_option("--csv", csv_path, "write the trajectory as CSV");
  flow_cmd->add_flag("--json", as_json);

  std::string out_path;
  auto* export_cmd = app.add_subcommand("export", "write an AlgebraDocument");
  add_source_options(export_cmd, src_opts);
  export_cmd->add_option("-o,--output", out_path, "output file (stdout when omitted)");

  auto* curv = app.add_subcommand("curvature", "Ricci, scalar curvature and connection identities");
  add_source_options(curv, src_opts);
  curv->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (check->parsed()) {
      const auto src = cli::resolve(src_opts, true);
      if (!sub_spec.empty() && !vec_spec.empty()) throw InputError("give --subalgebra or --vector, not both");
      return std::visit([&](const auto& g) { return check_with(src, g, sub_spec, vec_spec, as_json); }, *src.metric);
    }
    if (enumerate->parsed()) {
      const auto src = cli::resolve(src_opts, false);
      const auto fam = enumerate_hyperplane_subalgebras(src.algebra);
      if (as_json) {
        json out = envelope("enumerate");
        out["source"] = src.label;
        out["family"] = to_json(fam, src.algebra.labels());
        emit(out);
      } else {
        std::cout << src.label << "\n" << format_text(fam, src.algebra.labels());
      }
      return kPositive;
    }
    if (verify->parsed()) {
      SuiteOptions opts;
      for (const auto& o : overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos) throw InputError("--metric-override expects id/metric=FILE");
        AlgebraDocument doc = read_document(o.substr(eq + 1));
        if (!doc.metric) throw InputError(o.substr(eq + 1) + ": no metric in document");
        opts.metric_overrides[o.substr(0, eq)] = *doc.metric;
      }
      const auto results = run_claims(paper_theorem_suite(opts), only, !sequential);
      if (results.empty()) throw InputError("no claim matches '" + only + "'");
      bool all = true;
      for (const auto& r : results) all = all && r.passed;
      if (as_json) {
        json out = envelope("verify-paper");
        out.update(to_json(results));
        emit(out);
      } else {
        std::size_t passed = 0;
        for (const auto& r : results) {
          passed += r.passed;
          std::cout << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(30) << r.id << " " << r.statement;
          if (!r.passed) std::cout << "\n     " << r.detail;
          std::cout << "\n";
        }
        std::cout << passed << "/" << results.size() << " claims pass\n";
      }
      return all ? kPositive : kNegative;
    }
    if (flow_cmd->parsed()) {
      const auto src = cli::resolve(src_opts, true);
      const auto v0s = cli::parse_vectors(v0_spec, src.algebra.labels());
      if (v0s.size() != 1) throw InputError("--v0 takes a single vector");
      const std::vector<double> v0 = to_doubles(v0s.front());
      const FloatModel fm = std::visit(
          [&](const auto& g) { return to_float(MetricLieAlgebra(src.algebra, g)); }, *src.metric);
      const FlowResult r = flow(fm, v0, t_end, dt);
      std::optional<double> defect;
      if (!leaf_spec.empty()) {
        std::vector<std::vector<double>> basis;
        for (const auto& b : cli::resolve_subspace(src, leaf_spec).basis_vectors()) basis.push_back(to_doubles(b));
        defect = leaf_invariance_defect(fm, basis, v0, t_end, dt);
      }
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw InputError("cannot write '" + csv_path + "'");
        write_csv(csv, r);
      }
      const auto& end = r.trajectory.back().v;
      if (as_json) {
        json out = envelope("flow");
        out["source"] = src.label;
        out["steps"] = r.trajectory.size() - 1;
        out["energy_drift"] = r.energy_drift;
        out["final_velocity"] = end;
        out["leaf_defect"] = defect ? json(*defect) : json(nullptr);
        emit(out);
      } else {
        std::cout << src.label << "\n" << std::setprecision(6);
        std::cout << "steps             " << r.trajectory.size() - 1 << "\n";
        std::cout << "energy drift      " << r.energy_drift << "\n";
        std::cout << "v(t_end)          ";
        for (std::size_t i = 0; i < end.size(); ++i) std::cout << (i ? ", " : "") << end[i];
        std::cout << "\n";
        if (defect) std::cout << "leaf defect       " << *defect << "\n";
      }
      return defect && !(*defect < tolerance) ? kNegative : kPositive;
    }
    if (export_cmd->parsed()) {
      const auto src = cli::resolve(src_opts, false);
      const std::string text = write_document({src.algebra, src.metric});
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        if (!out) throw InputError("cannot write '" + out_path + "'");
        out << text;
      }
      return kPositive;
    }
    if (curv->parsed()) {
      const auto src = cli::resolve(src_opts, true);
      return std::visit([&](const auto& g) { return curvature_with(src, g, as_json); }, *src.metric);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
