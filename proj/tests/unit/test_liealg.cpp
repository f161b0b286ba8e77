#include "doctest.h"
#include "kundt/catalog.hpp"
#include "kundt/sampling.hpp"

using namespace kundt;
using R = Rational;

namespace {
Vec<R> e(std::size_t n, std::size_t i) { return unit_vector<R>(n, i); }
}  // namespace

TEST_SUITE("liealg") {
  TEST_CASE("brackets from the tables") {
    const LieAlgebra nil = catalog_algebra("nil");
    CHECK(bracket(nil, e(3, 0), e(3, 1)) == e(3, 2));
    const LieAlgebra sl2 = catalog_algebra("sl2");
    CHECK(bracket(sl2, e(3, 2), e(3, 0)) == scale(R(2), e(3, 0)));
    CHECK(bracket(sl2, e(3, 0), e(3, 1)) == e(3, 2));
    Rng rng(3);
    for (const auto& id : {"nil", "su2", "sl2", "sol", "e02"}) {
      const LieAlgebra g = catalog_algebra(id);
      const Vec<R> x = random_vector(rng, 3);
      CHECK(is_zero_vector(bracket(g, x, x)));
    }
    CHECK_THROWS_AS(bracket(nil, Vec<R>{1, 0}, e(3, 1)), InputError);
  }

  TEST_CASE("Jacobi") {
    for (const auto& id : catalog_ids()) CHECK(is_zero(check_jacobi(catalog_algebra(id))));
    CHECK(is_zero(check_jacobi(catalog_algebra("oscillator", {{"n", R(2)}, {"lambda1", R(1)}, {"lambda2", R(3)}}))));
    // su(2) with c^1_12 := 1: [X1,X2] = X1 + X3. Expanding
    // [[X1,X2],X3] + [[X2,X3],X1] + [[X3,X1],X2] = [X1,X3] + 0 + [X2,X2] = -X2.
    const LieAlgebra broken = LieAlgebra::from_brackets(
        {"X1", "X2", "X3"}, {{0, 1, {1, 0, 1}}, {1, 2, {1, 0, 0}}, {2, 0, {0, 1, 0}}});
    CHECK(check_jacobi(broken) == R(1));
    CHECK_THROWS_AS(LieAlgebra({"a", "a"}, std::vector<R>(8, R(0))), InputError);
  }

  TEST_CASE("ad") {
    const LieAlgebra nil = catalog_algebra("nil");
    const auto adx1 = ad(nil, e(3, 0));
    CHECK(adx1(e(3, 1)) == e(3, 2));
    CHECK(is_zero_vector(adx1(e(3, 0))));
    CHECK(is_zero_vector(adx1(e(3, 2))));
    CHECK(ad(nil, e(3, 2)).matrix.is_zero());
  }

  TEST_CASE("Killing form") {
    CHECK(killing_form(catalog_algebra("sl2")) == Matrix<R>{{0, 4, 0}, {4, 0, 0}, {0, 0, 8}});
    CHECK(killing_form(LieAlgebra::abelian(4)).is_zero());
    // nil: ad_x is strictly upper triangular for every x, so tr(ad_x ad_y) = 0.
    CHECK(killing_form(catalog_algebra("nil")).is_zero());
    CHECK(killing_form(catalog_algebra("su2")) == Matrix<R>::diagonal({-2, -2, -2}));
  }

  TEST_CASE("unimodular") {
    for (const auto& id : {"nil", "su2", "sl2", "sol", "e02"}) CHECK(is_unimodular(catalog_algebra(id)));
    // [u,v] = v: tr ad_u = 1.
    CHECK_FALSE(is_unimodular(LieAlgebra::from_brackets({"u", "v"}, {{0, 1, {0, 1}}})));
    CHECK(is_unimodular(LieAlgebra::abelian(3)));
    Rng rng(5);
    for (const auto& id : {"nil", "su2", "sl2", "sol", "e02"})
      for (int i = 0; i < 5; ++i) CHECK(is_zero(ad(catalog_algebra(id), random_vector(rng, 3)).matrix.trace()));
  }

  TEST_CASE("derived algebra and center") {
    CHECK(derived_algebra(catalog_algebra("nil")) == Subspace<R>::from_basis(3, {e(3, 2)}));
    CHECK(derived_algebra(LieAlgebra::abelian(3)).dim() == 0);
    CHECK(derived_algebra(catalog_algebra("sol")) == Subspace<R>::from_basis(3, {e(3, 1), e(3, 2)}));
    CHECK(center(catalog_algebra("nil")) == Subspace<R>::from_basis(3, {e(3, 2)}));
  }

  TEST_CASE("automorphisms") {
    const LieAlgebra sl2 = catalog_algebra("sl2");
    CHECK(is_automorphism(sl2, LinearMap<R>{Matrix<R>::identity(3)}));
    const R a = 2, b = 3;
    CHECK(is_automorphism(sl2, LinearMap<R>{Matrix<R>{{a, R(-a * b * b), R(-2 * a * b)}, {0, R(1 / a), 0}, {0, b, 1}}}));
    // Swapping X1 and X3 sends [X1,X2] = X3 to X1 but [X3,X2] = 0.
    CHECK_FALSE(is_automorphism(catalog_algebra("nil"), LinearMap<R>{Matrix<R>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}}));
    CHECK_FALSE(is_automorphism(sl2, LinearMap<R>{Matrix<R>(3, 3)}));
  }

  TEST_CASE("subalgebras") {
    CHECK(is_subalgebra(catalog_algebra("nil"), Subspace<R>::from_basis(3, {e(3, 2), Vec<R>{1, 1, 0}})));
    CHECK_FALSE(is_subalgebra(catalog_algebra("su2"), Subspace<R>::from_basis(3, {e(3, 0), e(3, 1)})));
    CHECK(is_subalgebra(catalog_algebra("su2"), Subspace<R>::whole(3)));
    CHECK_THROWS_AS(Subspace<R>::from_basis(3, {e(3, 0), scale(R(2), e(3, 0))}), InputError);
  }
}
