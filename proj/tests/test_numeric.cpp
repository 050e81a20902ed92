#include "doctest.h"
#include "lck/numeric.hpp"
#include "lck/polynomial.hpp"

#include <algorithm>
#include <random>

using namespace lck;

namespace {

// Plain rational elimination, independent of the library's rank routines.
int oracle_rank(std::vector<std::vector<Rational>> a) {
  int r = 0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int c = 0; c < cols; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) p = i;
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    for (int i = 0; i < rows; ++i)
      if (i != r && a[i][c] != 0) {
        Rational f = a[i][c] / a[r][c];
        for (int j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
      }
    ++r;
  }
  return r;
}

Matrix<Rational> random_matrix(std::mt19937_64& rng, int rows, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix<Rational> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      m(i, j) = Rational(d(rng), 1 + std::abs(d(rng)));
      m(i, j).canonicalize();
    }
  return m;
}

}  // namespace

TEST_CASE("near_zero") {
  Tolerance tol;
  CHECK(near_zero(Rational(0), tol));
  CHECK_FALSE(near_zero(Rational(1, 3), tol));
  CHECK(near_zero(1e-12, tol));
  CHECK_FALSE(near_zero(1e-6, tol));
}

TEST_CASE("tolerance validation") {
  Tolerance bad{0.0, 1e-6};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK_NOTHROW(Tolerance{}.validate());
}

TEST_CASE("rank examples") {
  CHECK(rank(Matrix<Rational>::identity(3)) == 3);
  CHECK(rank(Matrix<Rational>(2, 2)) == 0);
  auto m = Matrix<Rational>::from_rows({{1, 2}, {2, 4}});
  CHECK(rank(m) == 1);
  CHECK(rank(m.to_double()) == 1);
  CHECK(rank(Matrix<double>::identity(3)) == 3);
  CHECK(rank(Matrix<Rational>(0, 4)) == 0);
}

TEST_CASE("rank agrees with oracle and is transpose invariant") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int rows = 1 + trial % 6, cols = 1 + (trial * 5) % 7;
    Matrix<Rational> m = random_matrix(rng, rows, cols, -3, 3);
    // Force some dependencies.
    if (rows > 2) m.set_row(rows - 1, m.row(0) + scaled(Rational(2, 3), m.row(1)));
    std::vector<std::vector<Rational>> rr;
    for (int i = 0; i < rows; ++i) rr.push_back(m.row(i));
    int r = rank(m);
    CHECK(r == oracle_rank(rr));
    CHECK(r == rank(m.transpose()));
    CHECK(r == rank(m.to_double()));
    CHECK(r == rref(m).rank());
  }
}

TEST_CASE("rank invariant under row permutation and scaling") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix<Rational> m = random_matrix(rng, 5, 4, -2, 2);
    m.set_row(4, m.row(1) - m.row(2));
    int r = rank(m);
    Matrix<Rational> p = m;
    p.swap_rows(0, 3);
    p.swap_rows(1, 4);
    p.set_row(2, scaled(Rational(-7, 5), p.row(2)));
    CHECK(rank(p) == r);
  }
}

TEST_CASE("approx rank threshold") {
  auto m = Matrix<double>::from_rows({{1.0, 1.0}, {1.0, 1.0 + 1e-13}});
  CHECK(rank(m) == 1);
  CHECK(rank(m, Tolerance{1e-15, 1e-6}) == 2);
}

TEST_CASE("nullspace, solve, inverse, determinant") {
  auto m = Matrix<Rational>::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  Matrix<Rational> ns = nullspace(m);
  CHECK(ns.rows() == 1);
  CHECK(is_zero_vec(m * ns.row(0)));
  CHECK(determinant(m) == 0);
  CHECK_FALSE(inverse(m).has_value());

  auto a = Matrix<Rational>::from_rows({{2, 1}, {1, 3}});
  CHECK(determinant(a) == 5);
  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(approx_equal(*inv * a, Matrix<Rational>::identity(2)));
  auto x = solve(a, Vec<Rational>{3, 4});
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  CHECK_FALSE(solve(m, Vec<Rational>{1, 0, 0}).has_value());
  CHECK(std::abs(determinant(a.to_double()) - 5.0) < 1e-12);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-2") == -2);
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("-1.5e-2") == Rational(-3, 200));
  CHECK(parse_rational("2E3") == 2000);
  CHECK(parse_rational(" +7 ") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK(parse_double("1/4") == 0.25);
  CHECK(parse_double("-2.5") == -2.5);
  CHECK_THROWS_AS(parse_double("x1"), ParseError);
  CHECK(format_rational(Rational(-3, 4)) == "-3/4");
  CHECK(format_double(0.1) == "0.1");
  CHECK(parse_double(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("characteristic polynomial") {
  auto m = Matrix<Rational>::from_rows({{0, -1}, {1, 0}});
  CHECK(charpoly(m) == QPoly({1, 0, 1}));
  auto d = Matrix<Rational>::from_rows({{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, -1}});
  // x^2 (x-1)(x+1) = x^4 - x^2
  CHECK(charpoly(d) == QPoly({0, 0, -1, 0, 1}));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    Matrix<Rational> r = random_matrix(rng, 4, 4, -3, 3);
    QPoly p = charpoly(r);
    CHECK(p.coeff(0) == determinant(r));
    CHECK(p.coeff(3) == -r.trace());
  }
}

TEST_CASE("Sturm counting and square-free parts") {
  QPoly p({-1, 0, 1});  // x^2 - 1
  CHECK(count_real_roots(p) == 2);
  CHECK(count_real_roots(p, Rational(0), std::nullopt) == 1);
  CHECK(count_real_roots(p, std::nullopt, Rational(-1)) == 1);
  CHECK(all_roots_real(p));
  CHECK_FALSE(all_roots_real(QPoly({1, 0, 1})));
  QPoly sq = QPoly({-1, 1}) * QPoly({-1, 1}) * QPoly({2, 1});
  CHECK(squarefree_part(sq) == QPoly({-2, 1, 1}));
  auto dec = squarefree_decomposition(sq);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0] == QPoly({2, 1}));
  CHECK(dec[1] == QPoly({-1, 1}));
  CHECK(all_roots_imaginary(QPoly({0, 0, 1, 0, 1})));   // x^2 (x^2 + 1)
  CHECK_FALSE(all_roots_imaginary(QPoly({0, 0, -1, 0, 1})));
  CHECK_FALSE(all_roots_imaginary(QPoly({1, 1, 1})));
}

TEST_CASE("numeric roots") {
  auto r = roots(std::vector<double>{-6, 11, -6, 1});
  REQUIRE(r.size() == 3);
  CHECK(std::abs(r[0] - 1.0) < 1e-12);
  CHECK(std::abs(r[1] - 2.0) < 1e-12);
  CHECK(std::abs(r[2] - 3.0) < 1e-12);
  auto c = roots(std::vector<double>{1, 0, 1});
  REQUIRE(c.size() == 2);
  CHECK(std::abs(std::abs(c[0].imag()) - 1.0) < 1e-12);
}

TEST_CASE("approx rank ignores rows of pure rounding noise") {
  Matrix<double> m(3, 2);
  m(0, 0) = 1.0;
  m(1, 1) = 4.4e-16;
  m(2, 1) = 1.0;
  CHECK(rank(m) == 2);
  m(2, 1) = 0.0;
  CHECK(rank(m) == 1);
}
