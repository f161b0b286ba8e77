#include "doctest.h"
#include "kundt/catalog.hpp"
#include "kundt/kundt.hpp"
#include "kundt/sampling.hpp"

using namespace kundt;
using R = Rational;

namespace {

Vec<R> e(std::size_t n, std::size_t i) { return unit_vector<R>(n, i); }

MetricLieAlgebra<R> model(const std::string& id, const std::string& metric, const Params& p = {}) {
  const CatalogEntry c = load(id, p, {metric});
  return {c.algebra, rational_metric(c.metric(metric).matrix)};
}

Subspace<R> span(std::size_t n, std::vector<Vec<R>> v) { return Subspace<R>::from_basis(n, v); }

}  // namespace

TEST_SUITE("kundt") {
  TEST_CASE("orthogonal complement") {
    const auto m = model("nil", "n3");
    CHECK(orthogonal(m, span(3, {e(3, 0), e(3, 2)})) == span(3, {e(3, 2)}));
    CHECK(orthogonal(m, Subspace<R>::whole(3)).dim() == 0);
    const MetricLieAlgebra<R> def(catalog_algebra("nil"), Matrix<R>::diagonal({1, 2, 3}));
    Rng rng(4);
    for (int i = 0; i < 5; ++i) {
      const auto s = Subspace<R>::span(3, {random_vector(rng, 3)});
      const auto perp = orthogonal(def, s);
      CHECK(perp.dim() == 2);
      CHECK_FALSE(perp.contains(s.basis_vector(0)));
    }
  }

  TEST_CASE("degeneracy") {
    CHECK(is_degenerate(model("nil", "n1"), span(3, {Vec<R>{1, 1, 0}, e(3, 2)})));
    const auto n2 = model("nil", "n2", {{"mu", R(2)}});
    Rng rng(8);
    for (int i = 0; i < 20; ++i) {
      Vec<R> ab = random_vector(rng, 3);
      ab[2] = 0;
      if (is_zero_vector(ab)) continue;
      CHECK_FALSE(is_degenerate(n2, span(3, {e(3, 2), ab})));
    }
    const MetricLieAlgebra<R> def(catalog_algebra("su2"), Matrix<R>::identity(3));
    CHECK_FALSE(is_degenerate(def, span(3, {e(3, 0), Vec<R>{0, 1, 1}})));
  }

  TEST_CASE("Kundt vectors") {
    const auto osc = model("oscillator", "k", {{"n", R(1)}, {"lambda1", R(1)}});
    const auto r = check_kundt_vector(osc, e(4, 1));
    CHECK(r.k2_holds);
    CHECK(r.k1_holds);
    REQUIRE(r.recurrence_alpha.has_value());
    CHECK(r.recurrence_alpha->is_zero());

    const auto n3 = check_kundt_vector(model("nil", "n3"), e(3, 2));
    CHECK(n3.k2_holds);
    CHECK(is_zero_vector(n3.vdotv));

    const auto spacelike = check_kundt_vector(model("nil", "n3"), e(3, 0));
    CHECK_FALSE(spacelike.k1_holds);
    CHECK_FALSE(spacelike.k2_holds);
    CHECK_THROWS_AS(check_kundt_vector(model("nil", "n3"), Vec<R>(3, R(0))), InputError);
  }

  TEST_CASE("Kundt pairs from the classification") {
    const auto nil = check_kundt_pair(model("nil", "n3"), span(3, {e(3, 0), e(3, 2)}));
    CHECK(nil.verdict == KundtVerdict::KundtPair);
    CHECK(nil.degenerate);
    CHECK(nil.product_stable);

    const auto sol7 = check_kundt_pair(model("sol", "sol7"), span(3, {e(3, 1), e(3, 2)}));
    CHECK(sol7.verdict == KundtVerdict::KundtPair);

    const CatalogEntry r4 = load("r4-counterexample");
    const MetricLieAlgebra<R> r4m(r4.algebra, rational_metric(r4.metric("default").matrix));
    const auto lk = check_kundt_pair(r4m, r4.subalgebra("h134"));
    CHECK(lk.verdict == KundtVerdict::LocallyKundtOnly);
    CHECK(lk.degenerate);
    CHECK(lk.product_stable);
    REQUIRE(lk.e_dot_e.has_value());
    CHECK_FALSE(is_zero_vector(*lk.e_dot_e));
  }

  TEST_CASE("generator scale does not matter") {
    const auto m = model("nil", "n1", {{"mu", R(1, 2)}});
    const auto a = check_kundt_pair(m, span(3, {Vec<R>{1, 1, 0}, e(3, 2)}));
    const auto b = check_kundt_pair(m, span(3, {Vec<R>{-3, -3, 0}, Vec<R>{1, 1, 5}}));
    CHECK(a.verdict == b.verdict);
    CHECK(a.verdict == KundtVerdict::KundtPair);
  }

  TEST_CASE("pair errors") {
    const auto m = model("nil", "n3");
    CHECK_THROWS_AS(check_kundt_pair(m, span(3, {e(3, 0)})), InputError);
    CHECK_THROWS_AS(check_kundt_pair(m, span(3, {e(3, 0), e(3, 1)})), InputError);
    const CatalogEntry r4 = load("r4-counterexample");
    const MetricLieAlgebra<R> r4m(r4.algebra, rational_metric(r4.metric("default").matrix));
    CHECK_THROWS_AS(check_dim3_criterion(r4m, r4.subalgebra("h134")), InputError);
  }

  TEST_CASE("dimension-3 criterion") {
    CHECK(check_dim3_criterion(model("e02", "form3", {{"mu", R(2)}}), span(3, {e(3, 1), e(3, 2)})));
    CHECK(check_dim3_criterion(model("sol", "sol6", {{"lambda", R(1)}}), span(3, {e(3, 2), e(3, 0)})));
    CHECK_FALSE(check_dim3_criterion(model("sol", "sol1", {{"u", R(0)}, {"v", R(1)}}), span(3, {e(3, 1), e(3, 0)})));
  }

  TEST_CASE("hyperplane enumeration") {
    CHECK(enumerate_hyperplane_subalgebras(catalog_algebra("su2")).solution_kind == SolutionKind::Empty);
    const auto nil = enumerate_hyperplane_subalgebras(catalog_algebra("nil"));
    CHECK(nil.solution_kind == SolutionKind::DoubleLine);
    CHECK(nil.contains(Vec<R>{1, 0, 0}));
    CHECK(nil.contains(Vec<R>{2, -5, 0}));
    CHECK_FALSE(nil.contains(Vec<R>{0, 0, 1}));
    const auto sol = enumerate_hyperplane_subalgebras(catalog_algebra("sol"));
    CHECK(sol.solution_kind == SolutionKind::TwoLines);
    CHECK(sol.contains(Vec<R>{3, 0, 1}));
    CHECK(sol.contains(Vec<R>{3, 1, 0}));
    CHECK_FALSE(sol.contains(Vec<R>{0, 1, 1}));
    CHECK(enumerate_hyperplane_subalgebras(catalog_algebra("e02")).solution_kind == SolutionKind::SingleLine);
    CHECK(enumerate_hyperplane_subalgebras(catalog_algebra("sl2")).solution_kind == SolutionKind::ConicCurve);
    CHECK(enumerate_hyperplane_subalgebras(LieAlgebra::abelian(3)).solution_kind == SolutionKind::All);
    CHECK_THROWS_AS(enumerate_hyperplane_subalgebras(LieAlgebra::abelian(4)), InputError);
    for (const auto& id : {"nil", "sol", "e02", "sl2"})
      for (const auto& h : enumerate_hyperplane_subalgebras(catalog_algebra(id)).representatives)
        CHECK(is_subalgebra(catalog_algebra(id), h));
  }

  TEST_CASE("classification lists") {
    Rng rng(31);
    for (int i = 0; i < 5; ++i)
      CHECK(classify_kundt_structures(MetricLieAlgebra<R>(catalog_algebra("su2"), random_lorentzian_metric(rng, 3))).empty());
    for (const auto& r : classify_kundt_structures(model("nil", "n2")))
      CHECK(r.verdict == KundtVerdict::NotLocallyKundt);
    int pairs = 0;
    for (const auto& r : classify_kundt_structures(model("e02", "form3"))) {
      if (r.verdict != KundtVerdict::KundtPair) continue;
      ++pairs;
      CHECK(r.h == span(3, {e(3, 1), e(3, 2)}));
    }
    CHECK(pairs == 1);
  }
}
