#include "kundt/catalog.hpp"

#include <functional>
#include <optional>

namespace kundt {

const NamedMetric& CatalogEntry::metric(const std::string& name) const {
  for (const auto& m : metrics)
    if (m.name == name) return m;
  throw InputError("catalog entry '" + id + "' has no metric '" + name + "'");
}

const Subspace<Rational>& CatalogEntry::subalgebra(const std::string& name) const {
  for (const auto& s : subalgebras)
    if (s.name == name) return s.subspace;
  throw InputError("catalog entry '" + id + "' has no subalgebra '" + name + "'");
}

const TransformMatrix& CatalogEntry::transform(const std::string& name) const {
  for (const auto& t : transforms)
    if (t.name == name) return t.map;
  throw InputError("catalog entry '" + id + "' has no transform '" + name + "'");
}

bool is_rational(const MetricMatrix& m) { return std::holds_alternative<Matrix<Rational>>(m); }

Matrix<Rational> rational_metric(const MetricMatrix& m) {
  if (!is_rational(m)) throw InputError("metric has entries outside Q");
  return std::get<Matrix<Rational>>(m);
}

Matrix<QSqrt2> extended_metric(const MetricMatrix& m) {
  return std::visit([](const auto& x) { return convert<QSqrt2>(x); }, m);
}

std::string to_string(const MetricMatrix& m) {
  return std::visit([](const auto& x) { return to_string(x); }, m);
}

namespace {

using R = Rational;
using S = QSqrt2;

/// Drops to Q when no entry uses sqrt 2.
MetricMatrix simplify(const Matrix<S>& m) {
  Matrix<R> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_rational()) return m;
      out(i, j) = m(i, j).rational_part();
    }
  return out;
}

struct Constraint {
  std::string text;
  std::function<bool(const Params&)> holds;
};

struct MetricSpec {
  std::string name;
  Params defaults;
  std::vector<Constraint> constraints;
  std::function<MetricMatrix(const Params&)> build;
  std::string provenance;
  // Accept signature (1, dim-1, 0): -g is Lorentzian and every Kundt notion
  // is invariant under g -> -g.
  bool allow_negated = false;
};

struct AlgebraSpec {
  std::string provenance;
  std::function<LieAlgebra(const Params&)> algebra;
  std::function<std::vector<MetricSpec>(const Params&)> metrics;
  std::function<std::vector<NamedSubspace>(const LieAlgebra&)> subalgebras;
  std::function<std::vector<NamedTransform>(const Params&)> transforms;
};

const R& param(const Params& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw InputError("missing parameter '" + name + "'");
  return it->second;
}

Vec<R> v3(long a, long b, long c) { return {R(a), R(b), R(c)}; }

NamedSubspace named_span(const std::string& name, std::size_t dim, const std::vector<Vec<R>>& vectors,
                         const std::string& provenance) {
  return {name, Subspace<R>::from_basis(dim, vectors), provenance};
}

LieAlgebra three_dim(const std::vector<std::string>& labels, const std::vector<BracketRelation>& rel) {
  return LieAlgebra::from_brackets(labels, rel);
}

const std::vector<std::string> kX = {"X1", "X2", "X3"};

Constraint positive(const std::string& name) {
  return {name + " > 0", [name](const Params& p) { return sgn(param(p, name)) > 0; }};
}
Constraint nonzero(const std::string& name) {
  return {name + " != 0", [name](const Params& p) { return sgn(param(p, name)) != 0; }};
}

// --- nil -------------------------------------------------------------------

AlgebraSpec nil_spec() {
  AlgebraSpec s;
  s.provenance = "Heisenberg algebra n: [X1,X2] = X3";
  s.algebra = [](const Params&) { return three_dim(kX, {{0, 1, v3(0, 0, 1)}}); };
  s.metrics = [](const Params&) {
    return std::vector<MetricSpec>{
        {"n1", {{"mu", R(1)}}, {positive("mu")},
         [](const Params& p) { return MetricMatrix(Matrix<R>::diagonal({R(1), R(-1), param(p, "mu")})); },
         "nil classification: normal form n1 = diag(1,-1,mu)"},
        {"n2", {{"mu", R(1)}}, {positive("mu")},
         [](const Params& p) { return MetricMatrix(Matrix<R>::diagonal({R(1), R(1), R(-param(p, "mu"))})); },
         "nil classification: normal form n2 = diag(1,1,-mu)"},
        {"n3", {}, {},
         [](const Params&) { return MetricMatrix(Matrix<R>{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}); },
         "nil classification: normal form n3"},
    };
  };
  s.subalgebras = [](const LieAlgebra&) {
    return std::vector<NamedSubspace>{
        named_span("h0-plus", 3, {v3(1, 1, 0), v3(0, 0, 1)}, "nil theorem item 1: span{X1+X2, X3}"),
        named_span("h0-minus", 3, {v3(1, -1, 0), v3(0, 0, 1)}, "nil theorem item 1: span{X1-X2, X3}"),
        named_span("h13", 3, {v3(1, 0, 0), v3(0, 0, 1)}, "nil theorem item 2: span{X1, X3}"),
        named_span("h23", 3, {v3(0, 1, 0), v3(0, 0, 1)}, "nil subalgebra list: span{X3, X2}"),
    };
  };
  return s;
}

// --- su(2) -----------------------------------------------------------------

AlgebraSpec su2_spec() {
  AlgebraSpec s;
  s.provenance = "su(2): [X1,X2] = X3, [X2,X3] = X1, [X3,X1] = X2";
  s.algebra = [](const Params&) {
    return three_dim(kX, {{0, 1, v3(0, 0, 1)}, {1, 2, v3(1, 0, 0)}, {2, 0, v3(0, 1, 0)}});
  };
  s.metrics = [](const Params&) {
    return std::vector<MetricSpec>{
        {"lorentz", {}, {}, [](const Params&) { return MetricMatrix(Matrix<R>::diagonal({R(1), R(1), R(-1)})); },
         "su(2) with the Lorentzian form diag(1,1,-1)"},
        // Riemannian; the only non-Lorentzian metric in the catalog.
        {"killing-scaled", {}, {},
         [](const Params&) { return MetricMatrix(Matrix<R>::diagonal({make_rational(1, 4), make_rational(1, 4), make_rational(1, 4)})); },
         "su(2) round bi-invariant metric -Killing/8 (positive definite)"},
    };
  };
  s.subalgebras = [](const LieAlgebra&) { return std::vector<NamedSubspace>{}; };
  return s;
}

// --- sl(2,R) ---------------------------------------------------------------

Matrix<S> killing_sl2() { return {{0, 4, 0}, {4, 0, 0}, {0, 0, 8}}; }

Matrix<S> passage_12() {
  const S r2 = S::sqrt2();
  return {{-r2, 1, -1}, {0, 0, S(make_rational(1, 4))}, {S(R(0), make_rational(1, 4)), 0, S(make_rational(1, 2))}};
}

Matrix<S> passage_3() {
  const S r2 = S::sqrt2();
  return {{1, -r2, -1}, {0, 0, S(make_rational(1, 4))}, {0, S(R(0), make_rational(1, 4)), S(make_rational(1, 2))}};
}

/// Matrix of <,> in (e,f,h) from the Killing-symmetric operator A given in
/// the adapted basis: (P A P^-1)^t M.
Matrix<S> form_from_operator(const Matrix<S>& passage, const Matrix<S>& op_adapted) {
  const Matrix<S> op = passage * op_adapted * inverse(passage);
  return op.transpose() * killing_sl2();
}

Matrix<S> operator_case(int which, const S& alpha, const S& beta) {
  switch (which) {
    case 1: return {{beta, 0, 0}, {0, alpha, 0}, {0, 0, alpha}};
    case 2: return {{beta, 0, 0}, {0, alpha, 1}, {0, 0, alpha}};
    default: return {{alpha, 1, 0}, {0, alpha, 1}, {0, 0, alpha}};
  }
}

Matrix<R> sl2_automorphism(const R& a, const R& b) {
  return {{a, R(-a * b * b), R(-2 * a * b)}, {0, R(1 / a), 0}, {0, b, 1}};
}

AlgebraSpec sl2_spec() {
  AlgebraSpec s;
  s.provenance = "sl(2,R) in basis (e,f,h): [e,f] = h, [h,e] = 2e, [h,f] = -2f";
  s.algebra = [](const Params&) {
    return LieAlgebra::from_brackets({"e", "f", "h"},
                                     {{0, 1, v3(0, 0, 1)}, {2, 0, v3(2, 0, 0)}, {2, 1, v3(0, -2, 0)}});
  };
  s.metrics = [](const Params&) {
    const Params ab = {{"alpha", R(1)}, {"beta", R(1)}};
    const std::vector<Constraint> ab_constraints = {nonzero("alpha"), positive("beta")};
    auto a4 = [](const Params& p) { return S(R(4 * param(p, "alpha"))); };
    auto b8 = [](const Params& p) { return S(R(8 * param(p, "beta"))); };
    std::vector<MetricSpec> out{
        {"killing", {}, {}, [](const Params&) { return simplify(killing_sl2()); },
         "sl(2,R) Killing form M in (e,f,h)"},
        {"normal1", ab, ab_constraints,
         [=](const Params& p) { return simplify(Matrix<S>{{0, a4(p), 0}, {a4(p), 0, 0}, {0, 0, b8(p)}}); },
         "sl(2,R) theorem: first normal form"},
        {"normal2", ab, ab_constraints,
         [=](const Params& p) { return simplify(Matrix<S>{{0, a4(p), 0}, {a4(p), 1, 0}, {0, 0, b8(p)}}); },
         "sl(2,R) theorem: second normal form"},
        {"normal3", {{"alpha", R(1)}}, {nonzero("alpha")},
         [=](const Params& p) {
           const S two_r2(R(0), R(2));
           const S a8(R(8 * param(p, "alpha")));
           return simplify(Matrix<S>{{0, a4(p), 0}, {a4(p), 0, two_r2}, {0, two_r2, a8}});
         },
         "sl(2,R) theorem: third normal form (entries in Q(sqrt2))", true},
    };
    for (int c = 1; c <= 3; ++c) {
      const bool third = c == 3;
      out.push_back({"case" + std::to_string(c) + "-raw", third ? Params{{"alpha", R(1)}} : ab,
                     third ? std::vector<Constraint>{nonzero("alpha")} : ab_constraints,
                     [c, third](const Params& p) {
                       const S alpha(param(p, "alpha"));
                       const S beta(third ? R(0) : param(p, "beta"));
                       return simplify(form_from_operator(third ? passage_3() : passage_12(), operator_case(c, alpha, beta)));
                     },
                     "sl(2,R) proof: <,> in (e,f,h) before normalisation, case " + std::to_string(c), third});
    }
    return out;
  };
  s.subalgebras = [](const LieAlgebra&) {
    return std::vector<NamedSubspace>{named_span("he", 3, {v3(1, 0, 0), v3(0, 0, 1)}, "sl(2,R): span{e, h}")};
  };
  s.transforms = [](const Params& p) {
    const R a = p.count("a") ? p.at("a") : R(2);
    const R b = p.count("b") ? p.at("b") : R(3);
    if (sgn(a) == 0) throw InputError("constraint violated: a != 0");
    return std::vector<NamedTransform>{
        {"T", LinearMap<R>{sl2_automorphism(a, b)}, "sl(2,R) automorphisms fixing span{e,h}, parameters a, b"},
        {"T1", LinearMap<R>{sl2_automorphism(R(1), R(2))}, "sl(2,R) proof: T1 (case 1)"},
        {"T2", LinearMap<R>{sl2_automorphism(R(4), make_rational(1, 2))}, "sl(2,R) proof: T2 (case 2)"},
        {"T3", LinearMap<R>{sl2_automorphism(R(4), make_rational(1, 2))}, "sl(2,R) proof: T3 (case 3)"},
        {"P12", LinearMap<S>{passage_12()}, "sl(2,R) proof: passage matrix P, cases 1 and 2"},
        {"P3", LinearMap<S>{passage_3()}, "sl(2,R) proof: passage matrix P, case 3"},
    };
  };
  return s;
}

// --- sol -------------------------------------------------------------------

AlgebraSpec sol_spec() {
  AlgebraSpec s;
  s.provenance = "sol: [X1,X2] = X2, [X1,X3] = -X3";
  s.algebra = [](const Params&) { return three_dim(kX, {{0, 1, v3(0, 1, 0)}, {0, 2, v3(0, 0, -1)}}); };
  s.metrics = [](const Params&) {
    auto uv_ne = Constraint{"u^2 != v^2", [](const Params& p) { return param(p, "u") * param(p, "u") != param(p, "v") * param(p, "v"); }};
    auto u_lt_v = Constraint{"u < v", [](const Params& p) { return param(p, "u") < param(p, "v"); }};
    return std::vector<MetricSpec>{
        {"sol1", {{"u", R(0)}, {"v", R(1)}}, {positive("v"), u_lt_v, uv_ne},
         [](const Params& p) {
           const R& u = param(p, "u");
           const R& v = param(p, "v");
           return MetricMatrix(Matrix<R>{{R(4 / (u * u - v * v)), 0, 0}, {0, 1, R(u / v)}, {0, R(u / v), 1}});
         },
         "sol classification: sol1"},
        {"sol2", {{"u", R(0)}, {"v", R(1)}}, {positive("v"), u_lt_v, uv_ne},
         [](const Params& p) {
           const R& u = param(p, "u");
           const R& v = param(p, "v");
           return MetricMatrix(Matrix<R>{{R(4 / (v * v - u * u)), 0, 0}, {0, R(u / v), -1}, {0, -1, R(u / v)}});
         },
         "sol classification: sol2"},
        {"sol3", {{"u", R(1)}, {"v", R(1)}}, {positive("u"), positive("v")},
         [](const Params& p) {
           const R& u = param(p, "u");
           const R& v = param(p, "v");
           return MetricMatrix(Matrix<R>{{R(1 / (u + v)), 0, 0}, {0, R(-v / u), 1}, {0, 1, 1}});
         },
         "sol classification: sol3"},
        {"sol4", {{"u", R(1)}}, {positive("u")},
         [](const Params& p) { return MetricMatrix(Matrix<R>::diagonal({R(1 / param(p, "u")), R(-1), R(1)})); },
         "sol classification: sol4"},
        {"sol5", {{"b", R(1)}}, {positive("b")},
         [](const Params& p) {
           const R c = -2 / param(p, "b");
           return MetricMatrix(Matrix<R>{{0, 0, c}, {0, 1, 1}, {c, 1, 1}});
         },
         "sol classification: sol5 (theorem item 3)"},
        {"sol6", {{"lambda", R(1)}}, {nonzero("lambda")},
         [](const Params& p) {
           const R& l = param(p, "lambda");
           return MetricMatrix(Matrix<R>{{R(l * l), 0, 0}, {0, l, 1}, {0, 1, 0}});
         },
         "sol classification: sol6 (theorem item 2)"},
        {"sol7", {}, {}, [](const Params&) { return MetricMatrix(Matrix<R>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}); },
         "sol classification: sol7 (theorem item 4)"},
        {"sol2-u0", {{"lambda", R(1)}}, {positive("lambda")},
         [](const Params& p) { return MetricMatrix(Matrix<R>{{param(p, "lambda"), 0, 0}, {0, 0, -1}, {0, -1, 0}}); },
         "sol theorem item 1: sol2 at u = 0 with lambda = 4/v^2"},
    };
  };
  s.subalgebras = [](const LieAlgebra&) {
    return std::vector<NamedSubspace>{
        named_span("h23", 3, {v3(0, 1, 0), v3(0, 0, 1)}, "sol: span{X2, X3}"),
        named_span("h21", 3, {v3(0, 1, 0), v3(1, 0, 0)}, "sol: span{X2, X1}"),
        named_span("h31", 3, {v3(0, 0, 1), v3(1, 0, 0)}, "sol: span{X3, X1}"),
    };
  };
  return s;
}

// --- e0(2) -----------------------------------------------------------------

AlgebraSpec e02_spec() {
  AlgebraSpec s;
  s.provenance = "e0(2): [X1,X2] = X3, [X1,X3] = -X2";
  s.algebra = [](const Params&) { return three_dim(kX, {{0, 1, v3(0, 0, 1)}, {0, 2, v3(0, -1, 0)}}); };
  s.metrics = [](const Params&) {
    auto form12 = [](const Params& p) {
      return MetricMatrix(Matrix<R>{{0, 1, 0}, {1, param(p, "u"), 0}, {0, 0, param(p, "v")}});
    };
    const Params uv = {{"u", R(1)}, {"v", R(1)}};
    return std::vector<MetricSpec>{
        {"form1", uv, {positive("u"), positive("v")}, form12, "e0(2) classification: first form"},
        // Printed identically to form1; kept as printed.
        {"form2", uv, {positive("u"), positive("v")}, form12, "e0(2) classification: second form (printed identical to the first)"},
        {"form3", {{"mu", R(1)}}, {positive("mu")},
         [](const Params& p) { return MetricMatrix(Matrix<R>{{0, 1, 0}, {1, 0, 0}, {0, 0, param(p, "mu")}}); },
         "e0(2) classification: third form (Kundt normal form)"},
    };
  };
  s.subalgebras = [](const LieAlgebra&) {
    return std::vector<NamedSubspace>{named_span("h23", 3, {v3(0, 1, 0), v3(0, 0, 1)}, "e0(2): span{X2, X3}")};
  };
  return s;
}

// --- oscillator ------------------------------------------------------------

std::size_t oscillator_n(const Params& p) {
  R n = p.count("n") ? p.at("n") : R(1);
  if (n.get_den() != 1 || n < 1 || n > 16) throw InputError("constraint violated: n integer in [1, 16]");
  return n.get_num().get_ui();
}

R oscillator_lambda(const Params& p, std::size_t j) {
  auto it = p.find("lambda" + std::to_string(j));
  return it == p.end() ? R(1) : it->second;
}

void check_oscillator_lambdas(const Params& p) {
  const std::size_t n = oscillator_n(p);
  for (std::size_t j = 1; j <= n; ++j) {
    if (sgn(oscillator_lambda(p, j)) <= 0) throw InputError("constraint violated: lambda" + std::to_string(j) + " > 0");
    if (j > 1 && oscillator_lambda(p, j - 1) > oscillator_lambda(p, j))
      throw InputError("constraint violated: lambda" + std::to_string(j - 1) + " <= lambda" + std::to_string(j));
  }
}

AlgebraSpec oscillator_spec() {
  AlgebraSpec s;
  s.provenance = "lambda-oscillator algebra: [e-1,ej] = lambda_j ejc, [e-1,ejc] = -lambda_j ej, [ej,ejc] = e0";
  s.algebra = [](const Params& p) {
    check_oscillator_lambdas(p);
    const std::size_t n = oscillator_n(p);
    const std::size_t dim = 2 * n + 2;
    std::vector<std::string> labels = {"e-1", "e0"};
    for (std::size_t j = 1; j <= n; ++j) {
      labels.push_back("e" + std::to_string(j));
      labels.push_back("e" + std::to_string(j) + "c");
    }
    std::vector<BracketRelation> rel;
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t ej = 2 * j, ejc = 2 * j + 1;
      const R l = oscillator_lambda(p, j);
      Vec<R> a(dim, R(0)), b(dim, R(0)), c(dim, R(0));
      a[ejc] = l;
      b[ej] = -l;
      c[1] = 1;
      rel.push_back({0, ej, a});
      rel.push_back({0, ejc, b});
      rel.push_back({ej, ejc, c});
    }
    return LieAlgebra::from_brackets(labels, rel);
  };
  s.metrics = [](const Params& given) {
    Params bound = {{"n", R(static_cast<long>(oscillator_n(given)))}};
    for (std::size_t j = 1; j <= oscillator_n(given); ++j) bound["lambda" + std::to_string(j)] = oscillator_lambda(given, j);
    return std::vector<MetricSpec>{
        {"k", bound, {},
         [](const Params& p) {
           const std::size_t n = oscillator_n(p);
           Matrix<R> k(2 * n + 2, 2 * n + 2);
           k(0, 1) = k(1, 0) = 1;
           for (std::size_t j = 1; j <= n; ++j) {
             const R inv = 1 / oscillator_lambda(p, j);
             k(2 * j, 2 * j) = inv;
             k(2 * j + 1, 2 * j + 1) = inv;
           }
           return MetricMatrix(k);
         },
         "bi-invariant Lorentz form k_lambda = 2 x_-1 x_0 + sum (x_j^2 + xc_j^2)/lambda_j"},
    };
  };
  s.subalgebras = [](const LieAlgebra& g) {
    std::vector<Vec<R>> basis;
    for (std::size_t i = 1; i < g.dim(); ++i) basis.push_back(unit_vector<R>(g.dim(), i));
    return std::vector<NamedSubspace>{{"e0-perp", Subspace<R>::from_basis(g.dim(), basis), "oscillator: e0^perp = span{e0, ej, ejc}"}};
  };
  return s;
}

// --- R^4 counterexample ----------------------------------------------------

AlgebraSpec r4_spec() {
  AlgebraSpec s;
  s.provenance = "R^4 with [e1,e2] = e2: locally Kundt but not Kundt";
  s.algebra = [](const Params&) {
    return LieAlgebra::from_brackets({"e1", "e2", "e3", "e4"}, {{0, 1, {R(0), R(1), R(0), R(0)}}});
  };
  s.metrics = [](const Params&) {
    return std::vector<MetricSpec>{
        {"default", {}, {},
         [](const Params&) { return MetricMatrix(Matrix<R>{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}); },
         "R^4 counterexample metric: <e1,e2> = 1, <e3,e3> = <e4,e4> = 1"},
    };
  };
  s.subalgebras = [](const LieAlgebra&) {
    const Vec<R> e1 = {1, 0, 0, 0}, e3 = {0, 0, 1, 0}, e4 = {0, 0, 0, 1};
    return std::vector<NamedSubspace>{named_span("h134", 4, {e1, e3, e4}, "R^4 counterexample: span{e1, e3, e4}")};
  };
  return s;
}

AlgebraSpec spec_for(const std::string& id) {
  if (id == "nil") return nil_spec();
  if (id == "su2") return su2_spec();
  if (id == "sl2") return sl2_spec();
  if (id == "sol") return sol_spec();
  if (id == "e02") return e02_spec();
  if (id == "oscillator") return oscillator_spec();
  if (id == "r4-counterexample") return r4_spec();
  throw InputError("unknown catalog id '" + id + "'");
}

}  // namespace

const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids = {"nil", "su2", "sl2", "sol", "e02", "oscillator", "r4-counterexample"};
  return ids;
}

std::vector<std::string> catalog_metric_names(const std::string& id, const Params& params) {
  std::vector<std::string> names;
  for (const auto& m : spec_for(id).metrics(params)) names.push_back(m.name);
  return names;
}

LieAlgebra catalog_algebra(const std::string& id, const Params& params) { return spec_for(id).algebra(params); }

CatalogEntry load(const std::string& id, const Params& params, const std::vector<std::string>& metrics) {
  const AlgebraSpec spec = spec_for(id);
  CatalogEntry entry{id, spec.algebra(params), {}, {}, {}, spec.provenance};
  const std::size_t n = entry.algebra.dim();
  const auto specs = spec.metrics(params);
  for (const auto& wanted : metrics) {
    bool known = false;
    for (const auto& ms : specs) known = known || ms.name == wanted;
    if (!known) throw InputError("catalog entry '" + id + "' has no metric '" + wanted + "'");
  }
  for (const auto& ms : specs) {
    if (!metrics.empty() && std::find(metrics.begin(), metrics.end(), ms.name) == metrics.end()) continue;
    Params bound = ms.defaults;
    for (auto& [name, value] : bound)
      if (auto it = params.find(name); it != params.end()) value = it->second;
    for (const auto& c : ms.constraints)
      if (!c.holds(bound)) throw InputError("constraint violated for metric " + ms.name + ": " + c.text);
    MetricMatrix matrix = ms.build(bound);
    SignatureTriple sig = std::visit([](const auto& m) { return signature(m); }, matrix);
    const bool lorentz = sig == SignatureTriple{n - 1, 1, 0};
    const bool negated = ms.allow_negated && sig == SignatureTriple{1, n - 1, 0};
    const bool riemannian = id == "su2" && ms.name == "killing-scaled";
    if (!lorentz && !negated && !riemannian)
      throw InputError("metric " + ms.name + " is not Lorentzian at the given parameters (signature " +
                       std::to_string(sig.positive) + "," + std::to_string(sig.negative) + "," + std::to_string(sig.null) + ")");
    entry.metrics.push_back({ms.name, std::move(matrix), bound, sig, ms.provenance});
  }
  entry.subalgebras = spec.subalgebras(entry.algebra);
  if (spec.transforms) entry.transforms = spec.transforms(params);
  return entry;
}

Params parse_params(const std::vector<std::string>& assignments) {
  Params out;
  for (const auto& a : assignments) {
    auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("parameter '" + a + "' is not of the form name=value");
    out[a.substr(0, eq)] = parse_rational(a.substr(eq + 1));
  }
  return out;
}

}  // namespace kundt
