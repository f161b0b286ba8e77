#include "kundt/report.hpp"

#include <sstream>

namespace kundt {

using nlohmann::json;

template <class F>
json to_json(const Vec<F>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

template <class F>
json to_json(const Matrix<F>& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

template <class F>
std::string format_vector(const Vec<F>& v, const std::vector<std::string>& labels) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_zero(v[i])) continue;
    std::string c = to_string(v[i]);
    const bool negative = sign(v[i]) < 0;
    if (negative) c = to_string(F(-v[i]));
    if (c.find_first_of("+-") != std::string::npos) c = "(" + c + ")";
    if (!s.empty() || negative) s += negative ? (s.empty() ? "-" : " - ") : " + ";
    s += (c == "1" ? "" : c + "*") + labels[i];
  }
  return s.empty() ? "0" : s;
}

std::string format_covector(const Vec<Rational>& phi, const std::vector<std::string>& labels) {
  std::vector<std::string> duals;
  for (const auto& l : labels) duals.push_back(l + "*");
  return format_vector(phi, duals);
}

namespace {

template <class F>
json subspace_json(const Subspace<F>& h, const std::vector<std::string>& labels) {
  json basis = json::array();
  for (const auto& b : h.basis_vectors()) basis.push_back(format_vector(b, labels));
  json out{{"basis", basis}};
  if (h.dim() + 1 == h.ambient_dim()) out["covector"] = to_json(h.covector());
  return out;
}

/// n = p x q: the pencil spanned by covectors p, q is {phi : phi(n) = 0}.
Vec<Rational> pencil_axis(const Matrix<Rational>& pencil) {
  const Vec<Rational> p = pencil.column(0), q = pencil.column(1);
  return primitive_integer(Vec<Rational>{p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]});
}

}  // namespace

template <class F>
json to_json(const KundtPairReport<F>& r, const std::vector<std::string>& labels) {
  json out{{"subalgebra", subspace_json(r.h, labels)},
           {"abelian", r.abelian},
           {"degenerate", r.degenerate},
           {"product_stable", r.product_stable},
           {"e_dot_e_zero", r.e_dot_e_zero},
           {"ad_e_into_h", r.ad_e_into_h},
           {"verdict", to_string(r.verdict)}};
  out["e_generator"] = r.e_generator ? to_json(*r.e_generator) : json(nullptr);
  out["e_dot_e"] = r.e_dot_e ? to_json(*r.e_dot_e) : json(nullptr);
  out["derived_equals_perp"] = r.derived_equals_perp ? json(*r.derived_equals_perp) : json("not-applicable");
  return out;
}

template <class F>
json to_json(const KundtVectorReport<F>& r, const std::vector<std::string>&) {
  json out{{"v", to_json(r.v)},
           {"norm_vv", to_string(r.norm_vv)},
           {"vdotv", to_json(r.vdotv)},
           {"k1_traces",
            {{"trace_a", to_string(r.k1_traces.trace_a)},
             {"norm_b", to_string(r.k1_traces.norm_b)},
             {"norm_c", to_string(r.k1_traces.norm_c)},
             {"norm_vdotv", to_string(r.k1_traces.norm_vdotv)}}},
           {"k1_holds", r.k1_holds},
           {"k2_holds", r.k2_holds}};
  if (r.recurrence_alpha) {
    json basis = json::array();
    for (std::size_t c = 0; c < r.recurrence_alpha->perp_basis.cols(); ++c)
      basis.push_back(to_json(r.recurrence_alpha->perp_basis.column(c)));
    out["recurrence_alpha"] = {{"perp_basis", basis}, {"values", to_json(r.recurrence_alpha->values)}};
  } else {
    out["recurrence_alpha"] = nullptr;
  }
  return out;
}

json to_json(const HyperplaneFamily& f, const std::vector<std::string>& labels) {
  json pencils = json::array();
  for (const auto& p : f.pencils)
    pencils.push_back({{"p", to_json(p.column(0))}, {"q", to_json(p.column(1))}, {"contains", format_vector(pencil_axis(p), labels)}});
  json points = json::array();
  for (const auto& p : f.points) points.push_back(to_json(p));
  json reps = json::array();
  for (const auto& h : f.representatives) reps.push_back(subspace_json(h, labels));
  return {{"conic", to_json(f.conic)},
          {"solution_kind", to_string(f.solution_kind)},
          {"pencils", pencils},
          {"points", points},
          {"irrational_pencils", f.irrational_pencils},
          {"representatives", reps}};
}

json to_json(const std::vector<ClaimResult>& results) {
  json claims = json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.passed;
    claims.push_back({{"id", r.id}, {"statement", r.statement}, {"passed", r.passed}, {"detail", r.detail}});
  }
  return {{"claims", claims}, {"passed", passed}, {"total", results.size()}};
}

template <class F>
std::string format_text(const KundtPairReport<F>& r, const std::vector<std::string>& labels) {
  std::ostringstream o;
  o << "subalgebra        span{";
  const auto basis = r.h.basis_vectors();
  for (std::size_t i = 0; i < basis.size(); ++i) o << (i ? ", " : "") << format_vector(basis[i], labels);
  o << "}\n";
  o << "abelian           " << (r.abelian ? "yes" : "no") << "\n";
  o << "degenerate        " << (r.degenerate ? "yes" : "no") << "\n";
  o << "product-stable    " << (r.product_stable ? "yes" : "no") << "\n";
  if (r.e_generator) o << "e (spans h-perp)  " << format_vector(*r.e_generator, labels) << "\n";
  if (r.e_dot_e) o << "e•e               " << format_vector(*r.e_dot_e, labels) << "\n";
  if (r.e_generator) o << "ad_e(g) in h      " << (r.ad_e_into_h ? "yes" : "no") << "\n";
  if (r.derived_equals_perp) o << "[h,h] = h-perp    " << (*r.derived_equals_perp ? "yes" : "no") << "\n";
  o << "verdict           " << to_string(r.verdict) << "\n";
  return o.str();
}

template <class F>
std::string format_text(const KundtVectorReport<F>& r, const std::vector<std::string>& labels) {
  std::ostringstream o;
  o << "v                 " << format_vector(r.v, labels) << "\n";
  o << "<v,v>             " << to_string(r.norm_vv) << "\n";
  o << "v•v               " << format_vector(r.vdotv, labels) << "\n";
  o << "tr A              " << to_string(r.k1_traces.trace_a) << "\n";
  o << "g(B,B)            " << to_string(r.k1_traces.norm_b) << "\n";
  o << "g(C,C)            " << to_string(r.k1_traces.norm_c) << "\n";
  o << "<v•v,v•v>         " << to_string(r.k1_traces.norm_vdotv) << "\n";
  if (r.recurrence_alpha) {
    o << "alpha on v-perp   ";
    for (std::size_t i = 0; i < r.recurrence_alpha->values.size(); ++i)
      o << (i ? ", " : "") << to_string(r.recurrence_alpha->values[i]);
    o << "\n";
  } else {
    o << "alpha on v-perp   none (x•v leaves span{v})\n";
  }
  o << "K1                " << (r.k1_holds ? "holds" : "fails") << "\n";
  o << "K2                " << (r.k2_holds ? "holds" : "fails") << "\n";
  return o.str();
}

std::string format_text(const HyperplaneFamily& f, const std::vector<std::string>& labels) {
  std::ostringstream o;
  o << "conic Q           " << to_string(f.conic) << "\n";
  o << "solution kind     " << to_string(f.solution_kind) << "\n";
  for (std::size_t i = 0; i < f.pencils.size(); ++i)
    o << "pencil " << i + 1 << "          ker(" << format_covector(f.pencils[i].column(0), labels) << " + t*("
      << format_covector(f.pencils[i].column(1), labels) << ")), t in R, and ker("
      << format_covector(f.pencils[i].column(1), labels) << ")\n"
      << "                  i.e. phi(" << format_vector(pencil_axis(f.pencils[i]), labels) << ") = 0: the hyperplanes containing "
      << format_vector(pencil_axis(f.pencils[i]), labels) << "\n";
  if (f.irrational_pencils) o << "note              the two solution lines are not defined over Q\n";
  for (const auto& p : f.points) o << "solution point    " << format_covector(p, labels) << "\n";
  o << "representatives   " << f.representatives.size() << "\n";
  for (const auto& h : f.representatives) {
    o << "  ker " << format_covector(h.covector(), labels) << " = span{";
    const auto b = h.basis_vectors();
    for (std::size_t i = 0; i < b.size(); ++i) o << (i ? ", " : "") << format_vector(b[i], labels);
    o << "}\n";
  }
  return o.str();
}

#define KUNDT_INSTANTIATE_REPORT(F)                                                          \
  template json to_json(const Vec<F>&);                                                      \
  template json to_json(const Matrix<F>&);                                                   \
  template json to_json(const KundtPairReport<F>&, const std::vector<std::string>&);         \
  template json to_json(const KundtVectorReport<F>&, const std::vector<std::string>&);       \
  template std::string format_vector(const Vec<F>&, const std::vector<std::string>&);        \
  template std::string format_text(const KundtPairReport<F>&, const std::vector<std::string>&); \
  template std::string format_text(const KundtVectorReport<F>&, const std::vector<std::string>&);

KUNDT_INSTANTIATE_REPORT(Rational)
KUNDT_INSTANTIATE_REPORT(QSqrt2)

}  // namespace kundt
