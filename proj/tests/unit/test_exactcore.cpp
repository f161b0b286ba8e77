#include "doctest.h"
#include "kundt/matrix.hpp"
#include "kundt/sampling.hpp"

using namespace kundt;
using R = Rational;

TEST_SUITE("exactcore") {
  TEST_CASE("rationals are canonical") {
    R x = make_rational(6, -4);
    CHECK(x.get_num() == -3);
    CHECK(x.get_den() == 2);
    CHECK(make_rational(1, 6) + make_rational(1, 3) == make_rational(1, 2));
    CHECK(parse_rational("-10/4") == make_rational(-5, 2));
    CHECK(parse_rational(" 7 ") == R(7));
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
    CHECK_THROWS_AS(parse_rational("1.5"), InputError);
    CHECK(to_string(make_rational(3, 4)) == "3/4");
  }

  TEST_CASE("Q(sqrt2) arithmetic and sign") {
    const QSqrt2 r2 = QSqrt2::sqrt2();
    CHECK(r2 * r2 == QSqrt2(2));
    const QSqrt2 x(R(1), R(1));  // 1 + sqrt2
    CHECK(x * QSqrt2(R(-1), R(1)) == QSqrt2(1));  // (1+√2)(√2-1) = 1
    CHECK(QSqrt2(1) / x == QSqrt2(R(-1), R(1)));
    CHECK(sign(QSqrt2(R(3), R(-2))) == 1);  // 3 - 2.83
    CHECK(sign(QSqrt2(R(-3), R(2))) == -1);
    CHECK(sign(QSqrt2(R(2), R(-2))) == -1);
    CHECK(sign(QSqrt2(R(0), R(0))) == 0);
    CHECK(sign(QSqrt2(R(-1), R(1))) == 1);
    CHECK(parse_qsqrt2("1/2+3/4*sqrt2") == QSqrt2(make_rational(1, 2), make_rational(3, 4)));
    CHECK(parse_qsqrt2("-sqrt2") == QSqrt2(R(0), R(-1)));
    CHECK(parse_qsqrt2("2*sqrt2-1") == QSqrt2(R(-1), R(2)));
    CHECK(parse_qsqrt2(to_string(QSqrt2(make_rational(-1, 3), make_rational(5, 7)))) ==
          QSqrt2(make_rational(-1, 3), make_rational(5, 7)));
    CHECK_THROWS_AS(parse_qsqrt2("sqrt3"), InputError);
    CHECK_THROWS_WITH(QSqrt2(1) / QSqrt2(0), doctest::Contains("division by zero"));
    CHECK(exact_sqrt(QSqrt2(8)) == QSqrt2(R(0), R(2)));
    CHECK(exact_sqrt(R(9, 4)) == make_rational(3, 2));
    CHECK_FALSE(exact_sqrt(R(3)).has_value());
  }

  TEST_CASE("solve_linear") {
    auto x = solve_linear(Matrix<R>::identity(3), Vec<R>{1, 2, 3});
    REQUIRE(x);
    CHECK(*x == Vec<R>{1, 2, 3});
    x = solve_linear(Matrix<R>{{0, 1}, {1, 0}}, Vec<R>{4, 0});
    REQUIRE(x);
    CHECK(*x == Vec<R>{0, 4});
    CHECK_FALSE(solve_linear(Matrix<R>{{1, 1}, {2, 2}}, Vec<R>{1, 3}).has_value());
    CHECK_THROWS_AS(solve_linear(Matrix<R>::identity(2), Vec<R>{1, 2, 3}), InputError);
  }

  TEST_CASE("kernel_basis") {
    CHECK(kernel_basis(Matrix<R>::identity(2)).cols() == 0);
    const auto k = kernel_basis(Matrix<R>{{1, 0, 0}});
    CHECK(k.cols() == 2);
    CHECK(Subspace<R>::from_basis(3, {k.column(0), k.column(1)}) ==
          Subspace<R>::from_basis(3, {Vec<R>{0, 1, 0}, Vec<R>{0, 0, 1}}));
    const auto k2 = kernel_basis(Matrix<R>{{1, 1}, {1, 1}});
    REQUIRE(k2.cols() == 1);
    CHECK(primitive_integer(k2.column(0)) == Vec<R>{1, -1});
  }

  TEST_CASE("signature") {
    CHECK(signature(Matrix<R>::diagonal({1, -1, 2})) == SignatureTriple{2, 1, 0});
    // n3: the off-diagonal block [[0,1],[1,0]] is congruent to diag(1,-1).
    CHECK(signature(Matrix<R>{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}) == SignatureTriple{2, 1, 0});
    CHECK(signature(Matrix<R>(3, 3)) == SignatureTriple{0, 0, 3});
    CHECK(signature(Matrix<R>{{0, 1}, {1, 0}}) == SignatureTriple{1, 1, 0});
    CHECK_THROWS_AS(signature(Matrix<R>{{1, 2}, {0, 1}}), InputError);
    const QSqrt2 r2 = QSqrt2::sqrt2();
    // [[1, sqrt2],[sqrt2, 1]] has det -1.
    CHECK(signature(Matrix<QSqrt2>{{1, r2}, {r2, 1}}) == SignatureTriple{1, 1, 0});
  }

  TEST_CASE("congruence") {
    const Matrix<R> s{{1, 2}, {2, 5}};
    CHECK(congruence(Matrix<R>::identity(2), s) == s);
    CHECK(congruence(Matrix<R>::diagonal({2, 1}), Matrix<R>::identity(2)) == Matrix<R>::diagonal({4, 1}));
    CHECK_THROWS_AS(congruence(Matrix<R>{{1, 1}, {1, 1}}, s), InputError);
    // T1 from the sl(2,R) proof on the case (i) matrix, alpha = 1, beta = 2.
    const R a = 1, b = 2;
    const Matrix<R> s1{{0, R(4 * a), 0}, {R(4 * a), R(32 * b - 32 * a), R(16 * a - 16 * b)}, {0, R(16 * a - 16 * b), R(8 * b)}};
    const Matrix<R> t1{{1, -4, -4}, {0, 1, 0}, {0, 2, 1}};
    CHECK(congruence(t1, s1) == Matrix<R>{{0, R(4 * a), 0}, {R(4 * a), 0, 0}, {0, 0, R(8 * b)}});
  }

  TEST_CASE("inverse") {
    const Matrix<R> a{{2, 1}, {7, 4}};
    CHECK(a * inverse(a) == Matrix<R>::identity(2));
    CHECK_THROWS_AS(inverse(Matrix<R>{{1, 2}, {2, 4}}), InputError);
  }

  TEST_CASE("randomized linear algebra properties") {
    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 2 + trial % 4;
      Matrix<R> a(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = random_rational(rng, 4, 3);
      CHECK(rank(a) + kernel_basis(a).cols() == n);
      if (rank(a) == n) {
        const Vec<R> b = random_vector(rng, n);
        const auto x = solve_linear(a, b);
        REQUIRE(x);
        CHECK(a * *x == b);
        Matrix<R> s(n, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i; j < n; ++j) s(i, j) = s(j, i) = random_rational(rng);
        CHECK(signature(s) == signature(congruence(a, s)));
      }
    }
  }
}
