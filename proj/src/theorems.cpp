#include "kundt/theorems.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "kundt/sampling.hpp"

namespace kundt {

bool glob_match(const std::string& pattern, const std::string& text) {
  std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

std::vector<ClaimResult> run_claims(const std::vector<Claim>& claims, const std::string& only, bool parallel) {
  auto run = [](const Claim& c) {
    ClaimResult r{c.id, c.statement, false, {}};
    try {
      ClaimOutcome o = c.check();
      r.passed = o.passed;
      r.detail = std::move(o.detail);
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    return r;
  };
  std::vector<const Claim*> selected;
  for (const auto& c : claims)
    if (only.empty() || glob_match(only, c.id)) selected.push_back(&c);
  std::vector<ClaimResult> out;
  if (!parallel) {
    for (const auto* c : selected) out.push_back(run(*c));
    return out;
  }
  std::vector<std::future<ClaimResult>> futures;
  for (const auto* c : selected) futures.push_back(std::async(std::launch::async, run, std::cref(*c)));
  for (auto& f : futures) out.push_back(f.get());
  return out;
}

std::string MetricSample::label() const {
  std::string s = id + "/" + metric;
  for (const auto& [k, v] : params) s += " " + k + "=" + to_string(v);
  return s;
}

namespace {

using R = Rational;

R q(long p, long d = 1) { return make_rational(p, d); }

Params P(std::initializer_list<std::pair<const std::string, R>> init) { return Params(init); }

}  // namespace

std::vector<MetricSample> theorem_samples(const std::string& id) {
  std::vector<MetricSample> out;
  auto add = [&](const std::string& metric, Params p) { out.push_back({id, metric, std::move(p)}); };
  const std::vector<R> positive = {q(1, 2), q(1), q(2)};
  if (id == "nil") {
    for (const auto& mu : positive) add("n1", P({{"mu", mu}}));
    for (const auto& mu : positive) add("n2", P({{"mu", mu}}));
    add("n3", {});
  } else if (id == "sol") {
    for (auto [u, v] : std::vector<std::pair<R, R>>{{q(-1, 2), q(1)}, {q(0), q(1)}, {q(1, 2), q(1)}, {q(-2), q(1)}})
      add("sol1", P({{"u", u}, {"v", v}}));
    for (auto [u, v] : std::vector<std::pair<R, R>>{{q(-1, 2), q(1)}, {q(0), q(1)}, {q(1, 2), q(1)}, {q(0), q(2)}})
      add("sol2", P({{"u", u}, {"v", v}}));
    for (auto [u, v] : std::vector<std::pair<R, R>>{{q(1), q(1)}, {q(1, 2), q(2)}, {q(2), q(1, 2)}})
      add("sol3", P({{"u", u}, {"v", v}}));
    for (const auto& u : positive) add("sol4", P({{"u", u}}));
    for (const auto& b : {q(1), q(2)}) add("sol5", P({{"b", b}}));
    for (const auto& l : {q(-1), q(1), q(2)}) add("sol6", P({{"lambda", l}}));
    add("sol7", {});
    for (const auto& l : positive) add("sol2-u0", P({{"lambda", l}}));
  } else if (id == "e02") {
    for (auto [u, v] : std::vector<std::pair<R, R>>{{q(1), q(1)}, {q(1, 2), q(2)}, {q(2), q(1, 2)}}) {
      add("form1", P({{"u", u}, {"v", v}}));
      add("form2", P({{"u", u}, {"v", v}}));
    }
    for (const auto& mu : positive) add("form3", P({{"mu", mu}}));
  } else if (id == "sl2") {
    for (auto [a, b] : std::vector<std::pair<R, R>>{{q(1), q(1)}, {q(-1), q(2)}, {q(1, 2), q(1)}}) {
      add("normal1", P({{"alpha", a}, {"beta", b}}));
      add("normal2", P({{"alpha", a}, {"beta", b}}));
    }
    for (const auto& a : {q(-1), q(1, 2), q(1)}) add("normal3", P({{"alpha", a}}));
  } else {
    throw InputError("no theorem samples for '" + id + "'");
  }
  return out;
}

PairOutcome evaluate_pair(const MetricMatrix& metric, const LieAlgebra& g, const Subspace<Rational>& h) {
  return std::visit(
      [&](const auto& mat) {
        using F = typename std::decay_t<decltype(mat)>::value_type;
        const MetricLieAlgebra<F> m(g, mat);
        const Subspace<F> hf = convert<F>(h);
        const auto r = check_kundt_pair(m, hf);
        PairOutcome o{r.verdict, false, r.degenerate};
        if (g.dim() == 3) o.dim3_criterion = check_dim3_criterion(m, hf);
        return o;
      },
      metric);
}

ClassificationSummary summarize_classification(const MetricMatrix& metric, const LieAlgebra& g) {
  return std::visit(
      [&](const auto& mat) {
        using F = typename std::decay_t<decltype(mat)>::value_type;
        const MetricLieAlgebra<F> m(g, mat);
        ClassificationSummary s;
        for (const auto& r : classify_kundt_structures(m)) {
          ++s.reports;
          const Vec<QSqrt2> phi = convert<QSqrt2>(r.h.covector());
          if (r.verdict == KundtVerdict::KundtPair) s.kundt_covectors.push_back(phi);
          if (r.verdict == KundtVerdict::LocallyKundtOnly) s.locally_kundt_only_covectors.push_back(phi);
          if (check_dim3_criterion(m, r.h) != (r.verdict == KundtVerdict::KundtPair)) s.dim3_agrees = false;
        }
        return s;
      },
      metric);
}

std::optional<LinearMap<Rational>> sl2_conjugating_automorphism(const LieAlgebra& g, const Subspace<Rational>& h) {
  if (g.dim() != 3 || h.dim() != 2 || !is_subalgebra(g, h)) return std::nullopt;
  const Subspace<R> d = derived_subspace(g, h);
  if (d.dim() != 1) return std::nullopt;
  const Vec<R> v = d.basis_vector(0);
  auto ratio = [](const Vec<R>& x, const Vec<R>& y) -> std::optional<R> {  // x = c y
    for (std::size_t i = 0; i < y.size(); ++i)
      if (!is_zero(y[i])) {
        R c = x[i] / y[i];
        if (sub(x, scale(c, y)) == Vec<R>(y.size(), R(0))) return c;
        return std::nullopt;
      }
    return std::nullopt;
  };
  Vec<R> u;
  for (const auto& b : h.basis_vectors())
    if (Subspace<R>::span(3, {v, b}).dim() == 2) u = b;
  const auto c = ratio(g.dim() ? bracket(g, u, v) : u, v);
  if (!c || is_zero(*c)) return std::nullopt;
  u = scale(R(2 / *c), u);
  Matrix<R> shifted = ad(g, u).matrix + Matrix<R>::identity(3).scaled(R(2));
  const Matrix<R> ker = kernel_basis(shifted);
  if (ker.cols() != 1) return std::nullopt;
  Vec<R> w = ker.column(0);
  const auto alpha = ratio(bracket(g, v, w), u);
  if (!alpha || is_zero(*alpha)) return std::nullopt;
  w = scale(R(1 / *alpha), w);
  LinearMap<R> phi{Matrix<R>::from_columns(3, {v, w, u})};
  if (!is_automorphism(g, phi)) return std::nullopt;
  return phi;
}

namespace {

Subspace<R> span3(std::initializer_list<Vec<R>> vs) { return Subspace<R>::from_basis(3, vs); }
Vec<R> v3(const R& a, const R& b, const R& c) { return {a, b, c}; }

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : "; ") + x;
  return s;
}

std::string covector_string(const Vec<QSqrt2>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

/// Accumulates failures; passes when there are none.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  ClaimOutcome outcome() const {
    if (failures_.empty()) return {true, std::to_string(checks_) + " checks"};
    return {false, join(failures_)};
  }

 private:
  std::size_t checks_ = 0;
  std::vector<std::string> failures_;
};

MetricMatrix sample_metric(const SuiteOptions& o, const MetricSample& s) {
  auto it = o.metric_overrides.find(s.id + "/" + s.metric);
  if (it != o.metric_overrides.end()) return it->second;
  return load(s.id, s.params, {s.metric}).metrics.front().matrix;
}

/// Kundt hyperplanes stated by the classification theorems, as covectors.
std::vector<Vec<R>> stated_kundt_covectors(const MetricSample& s) {
  const Vec<R> h0_plus = v3(q(1), q(-1), q(0)), h0_minus = v3(q(1), q(1), q(0));
  if (s.id == "nil") {
    if (s.metric == "n1") return {h0_plus, h0_minus};
    if (s.metric == "n3") return {v3(q(0), q(1), q(0))};
    return {};
  }
  if (s.id == "sol") {
    const bool item1 = s.metric == "sol2-u0" || (s.metric == "sol2" && is_zero(s.params.at("u")));
    if (item1) return {v3(q(0), q(0), q(1)), v3(q(0), q(1), q(0))};
    if (s.metric == "sol6") return {v3(q(0), q(1), q(0))};
    if (s.metric == "sol5" || s.metric == "sol7") return {v3(q(1), q(0), q(0))};
    return {};
  }
  if (s.id == "e02") {
    if (s.metric == "form3") return {v3(q(1), q(0), q(0))};
    return {};
  }
  throw InputError("no stated Kundt list for " + s.id);
}

bool same_covector_set(std::vector<Vec<QSqrt2>> a, const std::vector<Vec<R>>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : b) {
    auto it = std::find(a.begin(), a.end(), convert<QSqrt2>(primitive_integer(x)));
    if (it == a.end()) return false;
    a.erase(it);
  }
  return true;
}

ClaimOutcome pairs_are_kundt(const SuiteOptions& o, const std::vector<MetricSample>& samples,
                             const std::vector<Subspace<R>>& hs) {
  Tally t;
  for (const auto& s : samples) {
    const MetricMatrix metric = sample_metric(o, s);
    const LieAlgebra g = catalog_algebra(s.id, s.params);
    for (const auto& h : hs) {
      const PairOutcome r = evaluate_pair(metric, g, h);
      t.expect(r.verdict == KundtVerdict::KundtPair, s.label() + ": verdict " + to_string(r.verdict));
    }
  }
  return t.outcome();
}

std::vector<MetricSample> only(const std::string& id, const std::string& metric) {
  std::vector<MetricSample> out;
  for (auto& s : theorem_samples(id))
    if (s.metric == metric) out.push_back(s);
  return out;
}

ClaimOutcome classification_matches(const SuiteOptions& o, const std::string& id) {
  Tally t;
  for (const auto& s : theorem_samples(id)) {
    const auto summary = summarize_classification(sample_metric(o, s), catalog_algebra(id, s.params));
    std::vector<std::string> found;
    for (const auto& c : summary.kundt_covectors) found.push_back(covector_string(c));
    t.expect(same_covector_set(summary.kundt_covectors, stated_kundt_covectors(s)),
             s.label() + ": Kundt hyperplanes {" + join(found) + "}");
    t.expect(summary.locally_kundt_only_covectors.empty(), s.label() + ": unexpected locally-Kundt-only pair");
  }
  return t.outcome();
}

template <class F>
ClaimOutcome k2_from_pairs(const MetricLieAlgebra<F>& m, const std::string& label, Tally& t) {
  for (const auto& r : classify_kundt_structures(m)) {
    if (r.verdict != KundtVerdict::KundtPair) continue;
    const auto v = check_kundt_vector(m, *r.e_generator);
    t.expect(v.k2_holds, label + ": generator of a Kundt pair is not K2");
    t.expect(!v.k2_holds || (is_zero(v.norm_vv) && v.k1_traces.all_zero()), label + ": K2 without K1");
  }
  return t.outcome();
}

Matrix<R> sl2_automorphism(const R& a, const R& b) {
  return {{a, R(-a * b * b), R(-2 * a * b)}, {0, R(1 / a), 0}, {0, b, 1}};
}

std::vector<Claim> build_suite(const SuiteOptions& o) {
  std::vector<Claim> c;
  const auto& samples = sample_parameters();

  // nil
  c.push_back({"nil-thm-1", "nil: (n1(mu), span{X1±X2, X3}) is a Kundt pair", [o] {
                 return pairs_are_kundt(o, only("nil", "n1"),
                                        {span3({v3(q(1), q(1), q(0)), v3(q(0), q(0), q(1))}),
                                         span3({v3(q(1), q(-1), q(0)), v3(q(0), q(0), q(1))})});
               }});
  c.push_back({"nil-thm-2", "nil: (n3, span{X1, X3}) is a Kundt pair", [o] {
                 return pairs_are_kundt(o, only("nil", "n3"), {span3({v3(q(1), q(0), q(0)), v3(q(0), q(0), q(1))})});
               }});
  c.push_back({"nil-n2-none", "nil: n2 admits no Kundt pair and no degenerate subalgebra", [o] {
                 Tally t;
                 for (const auto& s : only("nil", "n2")) {
                   const auto sum = summarize_classification(sample_metric(o, s), catalog_algebra("nil"));
                   t.expect(sum.kundt_covectors.empty() && sum.locally_kundt_only_covectors.empty(), s.label());
                 }
                 return t.outcome();
               }});
  c.push_back({"nil-degeneracy", "nil: span{X3, aX1+bX2} is never n2-degenerate, n3-degenerate iff b = 0, n1-degenerate iff a^2 = b^2",
               [o, samples] {
                 Tally t;
                 const LieAlgebra g = catalog_algebra("nil");
                 std::vector<std::pair<R, R>> ab = {{q(1), q(0)}, {q(0), q(1)}, {q(1), q(1)}, {q(1), q(-1)}};
                 for (const auto& s : samples) ab.push_back({q(1), s});
                 for (const auto& s : theorem_samples("nil")) {
                   const MetricMatrix metric = sample_metric(o, s);
                   for (const auto& [a, b] : ab) {
                     const auto r = evaluate_pair(metric, g, span3({v3(q(0), q(0), q(1)), v3(a, b, q(0))}));
                     bool expected = false;
                     if (s.metric == "n3") expected = is_zero(b);
                     if (s.metric == "n1") expected = a * a == b * b;
                     t.expect(r.degenerate == expected, s.label() + " a=" + to_string(a) + " b=" + to_string(b));
                   }
                 }
                 return t.outcome();
               }});
  c.push_back({"nil-classification", "nil: the Kundt pairs found by enumeration are exactly the stated ones",
               [o] { return classification_matches(o, "nil"); }});

  // su(2)
  c.push_back({"su2-no-subalgebra", "su(2) has no 2-dimensional subalgebra", [] {
                 const auto fam = enumerate_hyperplane_subalgebras(catalog_algebra("su2"));
                 return ClaimOutcome{fam.solution_kind == SolutionKind::Empty && fam.representatives.empty(),
                                     "kind " + to_string(fam.solution_kind)};
               }});
  c.push_back({"su2-killing-definite", "su(2): the Killing form is negative definite", [] {
                 const auto sig = signature(killing_form(catalog_algebra("su2")));
                 return ClaimOutcome{sig == SignatureTriple{0, 3, 0}, "signature " + std::to_string(sig.positive) + "," +
                                                                         std::to_string(sig.negative) + "," + std::to_string(sig.null)};
               }});
  c.push_back({"su2-obstruction", "su(2) carries no locally Kundt structure (20 random Lorentzian metrics)", [] {
                 Tally t;
                 Rng rng(20240601);
                 const LieAlgebra g = catalog_algebra("su2");
                 for (int i = 0; i < 20; ++i) {
                   const MetricLieAlgebra<R> m(g, random_lorentzian_metric(rng, 3));
                   t.expect(classify_kundt_structures(m).empty(), "metric " + to_string(m.metric()));
                 }
                 return t.outcome();
               }});

  // sol
  const auto h21 = span3({v3(q(0), q(1), q(0)), v3(q(1), q(0), q(0))});
  const auto h31 = span3({v3(q(0), q(0), q(1)), v3(q(1), q(0), q(0))});
  const auto h23 = span3({v3(q(0), q(1), q(0)), v3(q(0), q(0), q(1))});
  c.push_back({"sol-thm-1", "sol: ([[l,0,0],[0,0,-1],[0,-1,0]], span{X2,X1} or span{X3,X1}) are Kundt pairs",
               [o, h21, h31] { return pairs_are_kundt(o, only("sol", "sol2-u0"), {h21, h31}); }});
  c.push_back({"sol-thm-2", "sol: (sol6(l), span{X3,X1}) is a Kundt pair",
               [o, h31] { return pairs_are_kundt(o, only("sol", "sol6"), {h31}); }});
  c.push_back({"sol-thm-3", "sol: (sol5(b), span{X2,X3}) is a Kundt pair",
               [o, h23] { return pairs_are_kundt(o, only("sol", "sol5"), {h23}); }});
  c.push_back({"sol-thm-4", "sol: (sol7, span{X2,X3}) is a Kundt pair",
               [o, h23] { return pairs_are_kundt(o, only("sol", "sol7"), {h23}); }});
  c.push_back({"sol-classification", "sol: no other (metric, subalgebra) combination is a Kundt pair",
               [o] { return classification_matches(o, "sol"); }});

  // e0(2)
  c.push_back({"e02-thm", "e0(2): (third form, span{X2,X3}) is the only Kundt pair",
               [o, h23] {
                 const auto a = pairs_are_kundt(o, only("e02", "form3"), {h23});
                 const auto b = classification_matches(o, "e02");
                 return ClaimOutcome{a.passed && b.passed, a.detail + " | " + b.detail};
               }});
  c.push_back({"e02-forms12-nondegenerate", "e0(2): span{X2,X3} is non-degenerate for the first two forms", [o, h23] {
                 Tally t;
                 for (const auto& s : theorem_samples("e02"))
                   if (s.metric != "form3")
                     t.expect(!evaluate_pair(sample_metric(o, s), catalog_algebra("e02"), h23).degenerate, s.label());
                 return t.outcome();
               }});

  // sl(2,R)
  c.push_back({"sl2-killing", "sl(2,R): Killing form in (e,f,h) is [[0,4,0],[4,0,0],[0,0,8]]", [] {
                 const auto k = killing_form(catalog_algebra("sl2"));
                 return ClaimOutcome{k == Matrix<R>{{0, 4, 0}, {4, 0, 0}, {0, 0, 8}}, to_string(k)};
               }});
  c.push_back({"sl2-automorphism-T", "sl(2,R): T(a,b) are automorphisms preserving span{e,h}", [samples] {
                 Tally t;
                 const LieAlgebra g = catalog_algebra("sl2");
                 const auto he = span3({v3(q(1), q(0), q(0)), v3(q(0), q(0), q(1))});
                 for (const auto& a : samples)
                   for (const auto& b : samples) {
                     const LinearMap<R> T{sl2_automorphism(a, b)};
                     t.expect(is_automorphism(g, T), "T(" + to_string(a) + "," + to_string(b) + ") not an automorphism");
                     t.expect(Subspace<R>::span(3, {T(he.basis_vector(0)), T(he.basis_vector(1))}) == he,
                              "T(" + to_string(a) + "," + to_string(b) + ") moves span{e,h}");
                   }
                 return t.outcome();
               }});
  c.push_back({"sl2-passage", "sl(2,R): P^t M P equals the stated Gram matrices of the adapted bases", [] {
                 const auto e = load("sl2", {}, {"killing"});
                 const Matrix<QSqrt2> M = extended_metric(e.metric("killing").matrix);
                 const auto& p12 = std::get<LinearMap<QSqrt2>>(e.transform("P12")).matrix;
                 const auto& p3 = std::get<LinearMap<QSqrt2>>(e.transform("P3")).matrix;
                 const Matrix<QSqrt2> b12{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}, b3{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
                 Tally t;
                 t.expect(congruence(p12, M) == b12, "cases 1-2: " + to_string(congruence(p12, M)));
                 t.expect(congruence(p3, M) == b3, "case 3: " + to_string(congruence(p3, M)));
                 return t.outcome();
               }});
  c.push_back({"sl2-raw1-printed", "sl(2,R): case 1 form in (e,f,h) equals the printed matrix", [] {
                 Tally t;
                 for (auto [a, b] : std::vector<std::pair<R, R>>{{q(1), q(1)}, {q(-1), q(2)}, {q(1, 2), q(1)}, {q(2), q(3)}}) {
                   const auto e = load("sl2", {{"alpha", a}, {"beta", b}}, {"case1-raw"});
                   const Matrix<R> printed{{0, R(4 * a), 0},
                                           {R(4 * a), R(32 * b - 32 * a), R(16 * a - 16 * b)},
                                           {0, R(16 * a - 16 * b), R(8 * b)}};
                   t.expect(extended_metric(e.metrics.front().matrix) == convert<QSqrt2>(printed),
                            "alpha=" + to_string(a) + " beta=" + to_string(b));
                 }
                 return t.outcome();
               }});
  for (int k = 1; k <= 3; ++k) {
    c.push_back({"sl2-congruence-" + std::to_string(k),
                 "sl(2,R): T" + std::to_string(k) + "^t S" + std::to_string(k) + " T" + std::to_string(k) + " is normal form " + std::to_string(k),
                 [k] {
                   Tally t;
                   const std::string raw = "case" + std::to_string(k) + "-raw", normal = "normal" + std::to_string(k);
                   for (auto [a, b] : std::vector<std::pair<R, R>>{{q(1), q(1)}, {q(-1), q(2)}, {q(1, 2), q(1)}, {q(-2), q(1, 2)}}) {
                     const Params p = k == 3 ? Params{{"alpha", a}} : Params{{"alpha", a}, {"beta", b}};
                     const auto e = load("sl2", p, {raw, normal});
                     const auto T = convert<QSqrt2>(std::get<LinearMap<R>>(e.transform("T" + std::to_string(k))).matrix);
                     const auto lhs = congruence(T, extended_metric(e.metric(raw).matrix));
                     t.expect(lhs == extended_metric(e.metric(normal).matrix), "alpha=" + to_string(a) + ": " + to_string(lhs));
                   }
                   return t.outcome();
                 }});
  }
  const auto he = span3({v3(q(1), q(0), q(0)), v3(q(0), q(0), q(1))});
  for (int k = 1; k <= 3; ++k)
    c.push_back({"sl2-thm-" + std::to_string(k), "sl(2,R): (normal form " + std::to_string(k) + ", span{e,h}) is a Kundt pair",
                 [o, k, he] { return pairs_are_kundt(o, only("sl2", "normal" + std::to_string(k)), {he}); }});
  c.push_back({"sl2-subalgebras-conjugate", "sl(2,R): every 2-dimensional subalgebra is conjugate to span{e,h}", [] {
                 Tally t;
                 const LieAlgebra g = catalog_algebra("sl2");
                 const auto fam = enumerate_hyperplane_subalgebras(g);
                 for (const auto& h : fam.representatives) {
                   const auto phi = sl2_conjugating_automorphism(g, h);
                   t.expect(phi.has_value(), "no automorphism for " + covector_string(convert<QSqrt2>(h.covector())));
                   if (phi)
                     t.expect(Subspace<R>::span(3, {phi->matrix.column(0), phi->matrix.column(2)}) == h,
                              "phi(span{e,h}) != h for " + covector_string(convert<QSqrt2>(h.covector())));
                 }
                 return t.outcome();
               }});

  // subalgebra lists
  for (const std::string id : {"nil", "su2", "sol", "e02", "sl2"})
    c.push_back({"subalgebras-" + id, id + ": enumerated 2-dimensional subalgebras match the stated list",
                 [id] { return compare_with_subalgebra_list(id); }});

  // oscillator
  c.push_back({"biinv-adinv", "oscillator: k_l([x,y],z) + k_l(y,[x,z]) = 0 on basis triples", [] {
                 Tally t;
                 for (const Params& p : {Params{{"n", q(1)}, {"lambda1", q(1, 2)}}, Params{{"n", q(1)}, {"lambda1", q(1)}},
                                         Params{{"n", q(1)}, {"lambda1", q(2)}}, Params{{"n", q(2)}, {"lambda1", q(1)}, {"lambda2", q(2)}}}) {
                   const auto e = load("oscillator", p);
                   const Matrix<R> k = rational_metric(e.metric("k").matrix);
                   const std::size_t n = e.algebra.dim();
                   for (std::size_t x = 0; x < n; ++x)
                     for (std::size_t y = 0; y < n; ++y)
                       for (std::size_t z = 0; z < n; ++z) {
                         auto ex = unit_vector<R>(n, x), ey = unit_vector<R>(n, y), ez = unit_vector<R>(n, z);
                         t.expect(is_zero(bilinear(k, bracket(e.algebra, ex, ey), ez) + bilinear(k, ey, bracket(e.algebra, ex, ez))),
                                  "n=" + std::to_string(n));
                       }
                 }
                 return t.outcome();
               }});
  c.push_back({"oscillator-lc", "oscillator: the Levi-Civita product is half the bracket", [] {
                 Tally t;
                 for (const Params& p : {Params{{"n", q(1)}, {"lambda1", q(1, 2)}}, Params{{"n", q(1)}, {"lambda1", q(2)}},
                                         Params{{"n", q(2)}, {"lambda1", q(1)}, {"lambda2", q(2)}}}) {
                   const auto e = load("oscillator", p);
                   const MetricLieAlgebra<R> m(e.algebra, rational_metric(e.metric("k").matrix));
                   const std::size_t n = m.dim();
                   for (std::size_t i = 0; i < n; ++i)
                     for (std::size_t j = 0; j < n; ++j) {
                       auto ei = unit_vector<R>(n, i), ej = unit_vector<R>(n, j);
                       t.expect(m.product(ei, ej) == scale(q(1, 2), m.bracket(ei, ej)), "dim " + std::to_string(n));
                     }
                 }
                 return t.outcome();
               }});
  c.push_back({"oscillator-parallel", "oscillator: e0 generates a parallel null field", [] {
                 Tally t;
                 for (const Params& p : {Params{{"n", q(1)}, {"lambda1", q(1)}}, Params{{"n", q(2)}, {"lambda1", q(1)}, {"lambda2", q(2)}}}) {
                   const auto e = load("oscillator", p);
                   const MetricLieAlgebra<R> m(e.algebra, rational_metric(e.metric("k").matrix));
                   const auto r = check_kundt_vector(m, unit_vector<R>(m.dim(), 1));
                   t.expect(r.k2_holds && r.recurrence_alpha && r.recurrence_alpha->is_zero(), "dim " + std::to_string(m.dim()));
                 }
                 return t.outcome();
               }});

  // R^4
  c.push_back({"r4-not-global", "R^4 example: locally Kundt, but e•e != 0 so not a Kundt pair", [] {
                 const auto e = load("r4-counterexample");
                 const MetricLieAlgebra<R> m(e.algebra, rational_metric(e.metric("default").matrix));
                 const auto r = check_kundt_pair(m, e.subalgebra("h134"));
                 std::string w = r.e_dot_e ? covector_string(convert<QSqrt2>(*r.e_dot_e)) : "none";
                 return ClaimOutcome{r.verdict == KundtVerdict::LocallyKundtOnly && r.degenerate && r.product_stable && !r.e_dot_e_zero,
                                     "verdict " + to_string(r.verdict) + ", e•e = " + w};
               }});

  // general properties over the theorem samples
  c.push_back({"dim3-criterion-equivalence", "the dimension-3 criterion agrees with the Kundt pair test on every sampled pair", [o] {
                 Tally t;
                 for (const std::string id : {"nil", "sol", "e02", "sl2"})
                   for (const auto& s : theorem_samples(id))
                     t.expect(summarize_classification(sample_metric(o, s), catalog_algebra(id, s.params)).dim3_agrees, s.label());
                 return t.outcome();
               }});
  c.push_back({"k2-implies-k1", "the generator of every sampled Kundt pair is K2, and K2 vectors satisfy K1", [o] {
                 Tally t;
                 for (const std::string id : {"nil", "sol", "e02", "sl2"})
                   for (const auto& s : theorem_samples(id)) {
                     const MetricMatrix metric = sample_metric(o, s);
                     std::visit([&](const auto& mat) { k2_from_pairs(MetricLieAlgebra(catalog_algebra(id, s.params), mat), s.label(), t); },
                                metric);
                   }
                 return t.outcome();
               }});
  c.push_back({"connection-identities", "torsion-free, metric, Bianchi and pair symmetry on every catalog metric", [] {
                 Tally t;
                 for (const auto& id : catalog_ids()) {
                   const auto e = load(id);
                   for (const auto& nm : e.metrics) {
                     const bool ok = std::visit([&](const auto& mat) { return check_connection(MetricLieAlgebra(e.algebra, mat)).all(); },
                                                nm.matrix);
                     t.expect(ok, id + "/" + nm.name);
                   }
                 }
                 return t.outcome();
               }});
  return c;
}

}  // namespace

std::vector<Claim> paper_theorem_suite(const SuiteOptions& options) { return build_suite(options); }

ClaimOutcome compare_with_subalgebra_list(const std::string& id) {
  const LieAlgebra g = catalog_algebra(id);
  const HyperplaneFamily fam = enumerate_hyperplane_subalgebras(g);
  const auto& samples = sample_parameters();
  Tally t;
  const Vec<R> X1 = v3(q(1), q(0), q(0)), X2 = v3(q(0), q(1), q(0)), X3 = v3(q(0), q(0), q(1));
  auto in_family = [&](const Subspace<R>& h) { return is_subalgebra(g, h) && fam.contains(h.covector()); };
  // Members of the family that the enumeration itself exposes.
  std::vector<Subspace<R>> exposed = fam.representatives;
  for (std::size_t i = 0; i < fam.pencils.size(); ++i) {
    for (const auto& s : samples) exposed.push_back(fam.pencil_member(i, s));
    exposed.push_back(fam.pencil_end(i));
  }
  std::function<bool(const Subspace<R>&)> listed;
  std::vector<Subspace<R>> list_samples;
  SolutionKind kind{};
  if (id == "nil") {
    kind = SolutionKind::DoubleLine;
    listed = [&](const Subspace<R>& h) { return h.contains(X3); };
    for (const auto& s : samples) {
      list_samples.push_back(span3({X3, add(X1, scale(s, X2))}));
      list_samples.push_back(span3({X3, add(scale(s, X1), X2)}));
    }
  } else if (id == "su2") {
    kind = SolutionKind::Empty;
    listed = [](const Subspace<R>&) { return false; };
  } else if (id == "sol") {
    kind = SolutionKind::TwoLines;
    const auto h0 = span3({X2, X3});
    listed = [&, h0](const Subspace<R>& h) { return h == h0 || h.contains(X2) || h.contains(X3); };
    list_samples.push_back(h0);
    for (const auto& s : samples) {
      list_samples.push_back(span3({X2, add(X1, scale(s, X3))}));
      list_samples.push_back(span3({X3, add(X1, scale(s, X2))}));
    }
  } else if (id == "e02") {
    kind = SolutionKind::SingleLine;
    const auto h0 = span3({X2, X3});
    listed = [h0](const Subspace<R>& h) { return h == h0; };
    list_samples.push_back(h0);
  } else if (id == "sl2") {
    kind = SolutionKind::ConicCurve;
    listed = [&](const Subspace<R>& h) { return sl2_conjugating_automorphism(g, h).has_value(); };
    // Images of span{e,h} under exp(t ad_f): e -> e - t h - t^2 f, h -> h + 2t f.
    for (const auto& s : samples) {
      const Vec<R> e1 = {q(1), R(-s * s), R(-s)};
      const Vec<R> h1 = {q(0), R(2 * s), q(1)};
      list_samples.push_back(span3({e1, h1}));
    }
  } else {
    throw InputError("no stated subalgebra list for '" + id + "'");
  }
  t.expect(fam.solution_kind == kind, "solution kind " + to_string(fam.solution_kind) + ", expected " + to_string(kind));
  for (const auto& h : exposed) {
    t.expect(is_subalgebra(g, h), "enumerated hyperplane is not a subalgebra");
    t.expect(listed(h), "enumerated subalgebra " + covector_string(convert<QSqrt2>(h.covector())) + " not in the list");
  }
  for (const auto& h : list_samples) {
    t.expect(is_subalgebra(g, h), "listed subspace is not a subalgebra");
    t.expect(in_family(h), "listed subalgebra " + covector_string(convert<QSqrt2>(h.covector())) + " missing from the family");
  }
  if (id == "su2") t.expect(exposed.empty(), "su(2) representatives present");
  return t.outcome();
}

}  // namespace kundt
