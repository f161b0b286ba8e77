#include "doctest.h"
#include "kundt/catalog.hpp"
#include "kundt/connection.hpp"
#include "kundt/sampling.hpp"

using namespace kundt;
using R = Rational;

namespace {

Vec<R> e(std::size_t n, std::size_t i) { return unit_vector<R>(n, i); }

MetricLieAlgebra<R> rational_model(const std::string& id, const std::string& metric, const Params& p = {}) {
  const CatalogEntry c = load(id, p, {metric});
  return {c.algebra, rational_metric(c.metric(metric).matrix)};
}

// u•v = 1/2([u,v] - ad_u^* v - ad_v^* u) with ad^* = G^-1 ad^t G.
Vec<R> oracle_product(const MetricLieAlgebra<R>& m, const Vec<R>& u, const Vec<R>& v) {
  const Matrix<R> ginv = inverse(m.metric());
  auto adstar = [&](const Vec<R>& x) { return ginv * ad(m.algebra(), x).matrix.transpose() * m.metric(); };
  Vec<R> out = sub(sub(m.bracket(u, v), adstar(u) * v), adstar(v) * u);
  return scale(R(1, 2), out);
}

}  // namespace

TEST_SUITE("connection") {
  TEST_CASE("nil n3 product table by hand") {
    const auto m = rational_model("nil", "n3");
    // Only X2•X1 = -X3 and X2•X2 = X1 are nonzero.
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Vec<R> want(3, R(0));
        if (i == 1 && j == 0) want = Vec<R>{0, 0, -1};
        if (i == 1 && j == 1) want = Vec<R>{1, 0, 0};
        CHECK(m.product(e(3, i), e(3, j)) == want);
      }
    CHECK(ricci(m).is_zero());
    CHECK(is_zero(scalar_curvature(m)));
  }

  TEST_CASE("abelian algebra is flat with zero product") {
    Rng rng(2);
    const auto g = random_lorentzian_metric(rng, 4);
    const MetricLieAlgebra<R> m(LieAlgebra::abelian(4), g);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(is_zero_vector(m.product(e(4, i), e(4, j))));
  }

  TEST_CASE("bi-invariant metric gives half the bracket") {
    const auto m = rational_model("oscillator", "k", {{"n", R(2)}, {"lambda1", R(1)}, {"lambda2", R(3)}});
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j < m.dim(); ++j)
        CHECK(m.product(e(m.dim(), i), e(m.dim(), j)) == scale(R(1, 2), m.bracket(e(m.dim(), i), e(m.dim(), j))));
  }

  TEST_CASE("round su2 has constant curvature one") {
    const auto m = rational_model("su2", "killing-scaled");
    // R(X1,X2)X2 = X1/4 and |X2|^2 = 1/4.
    CHECK(curvature(m, e(3, 0), e(3, 1), e(3, 1)) == Vec<R>{R(1, 4), 0, 0});
    const auto c = constant_curvature(m);
    REQUIRE(c.has_value());
    CHECK(*c == R(1));
    CHECK(ricci(m) == m.metric().scaled(R(2)));
    CHECK(scalar_curvature(m) == R(6));
  }

  TEST_CASE("nil n1 is not of constant curvature") {
    CHECK_FALSE(constant_curvature(rational_model("nil", "n1")).has_value());
    CHECK_FALSE(is_constant_curvature(rational_model("nil", "n1", {{"mu", R(2)}})).constant);
  }

  TEST_CASE("Ricci against a brute-force trace") {
    for (const auto& [id, metric] : std::vector<std::pair<std::string, std::string>>{
             {"nil", "n1"}, {"sol", "sol4"}, {"e02", "form3"}, {"sl2", "normal2"}}) {
      const auto m = rational_model(id, metric);
      const Matrix<R> ric = ricci(m);
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
          R tr = 0;
          for (std::size_t w = 0; w < 3; ++w) tr += curvature(m, e(3, w), e(3, a), e(3, b))[w];
          CHECK(ric(a, b) == tr);
        }
      CHECK(ric.is_symmetric());
    }
  }

  TEST_CASE("independent adjoint oracle agrees with the product") {
    Rng rng(19);
    for (const auto& id : {"nil", "su2", "sl2", "sol", "e02"}) {
      const LieAlgebra g = catalog_algebra(id);
      for (int trial = 0; trial < 10; ++trial) {
        const MetricLieAlgebra<R> m(g, random_lorentzian_metric(rng, 3));
        const Vec<R> u = random_vector(rng, 3), v = random_vector(rng, 3);
        CHECK(m.product(u, v) == oracle_product(m, u, v));
      }
    }
  }

  TEST_CASE("connection identities on random metrics") {
    Rng rng(23);
    for (const auto& id : {"nil", "su2", "sl2", "sol", "e02"})
      for (int trial = 0; trial < 5; ++trial)
        CHECK(check_connection(MetricLieAlgebra<R>(catalog_algebra(id), random_lorentzian_metric(rng, 3))).all());
    const auto q = load("sl2", {{"alpha", R(-1)}}, {"normal3"});
    CHECK(check_connection(MetricLieAlgebra<QSqrt2>(q.algebra, extended_metric(q.metric("normal3").matrix))).all());
  }

  TEST_CASE("bad metrics") {
    const LieAlgebra g = catalog_algebra("nil");
    CHECK_THROWS_AS(MetricLieAlgebra<R>(g, Matrix<R>::diagonal({1, 0, 1})), InputError);
    CHECK_THROWS_AS(MetricLieAlgebra<R>(g, Matrix<R>{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}), InputError);
    CHECK_THROWS_AS(MetricLieAlgebra<R>(g, Matrix<R>::identity(2)), InputError);
    CHECK_FALSE(MetricLieAlgebra<R>(g, Matrix<R>::identity(3)).is_lorentzian());
  }
}
