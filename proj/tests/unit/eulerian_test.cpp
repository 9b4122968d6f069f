#include "../oracles.hpp"

#include <chieuler/error.hpp>
#include <chieuler/eulerian.hpp>

#include <doctest.h>

using namespace chieuler;

TEST_CASE("eulerian polynomials by the recurrence") {
  CHECK(eulerian_poly(0).poly == PolyQ({1}));
  CHECK(eulerian_poly(2).poly == PolyQ({1, 1}));
  CHECK(eulerian_poly(3).poly == PolyQ({1, 4, 1}));
  CHECK(eulerian_poly(5).poly == PolyQ({1, 26, 66, 26, 1}));
}

TEST_CASE("coefficients are descent counts") {
  for (unsigned n = 0; n <= 8; ++n) {
    const auto ref = oracle::eulerian_by_descents(n);
    const PolyQ p = eulerian_poly(n).poly;
    REQUIRE(p.degree() == static_cast<long>(ref.size()) - 1);
    for (std::size_t i = 0; i < ref.size(); ++i) REQUIRE(p.coeff(i) == ref[i]);
  }
}

TEST_CASE("shape and the shifted recurrence for n <= 25") {
  const auto table = eulerian_table(25);
  const PolyQ t = PolyQ::monomial(1, 1), t_minus_1 = PolyQ({-1, 1});
  for (unsigned n = 0; n <= 25; ++n) {
    const PolyQ& A = table[n].poly;
    REQUIRE(A.degree() == std::max(0L, static_cast<long>(n) - 1));
    REQUIRE(A.eval(1) == Rational(factorial(n)));
    for (long i = 0; i <= A.degree(); ++i) {
      REQUIRE(A.coeff(static_cast<std::size_t>(i)).sign() > 0);
      REQUIRE(A.coeff(static_cast<std::size_t>(i)) == A.coeff(static_cast<std::size_t>(A.degree() - i)));
    }
    PolyQ residual = -(t * A);
    for (unsigned k = 0; k <= n; ++k) residual += Rational(binomial(n, k)) * table[k].poly * t_minus_1.pow(n - k);
    REQUIRE(residual == (n == 0 ? PolyQ({1, -1}) : PolyQ()));
  }
}

TEST_CASE("generating-function coefficients carry the sign (-1)^n") {
  CHECK(eulerian_series_coeff(0, 5) == 1);
  CHECK(eulerian_series_coeff(1, 2) == -1);
  CHECK(eulerian_series_coeff(2, 2) == 3);
  const std::vector<Rational> base = {0, 2, -1, Rational(1, 2), Rational(5, 3)};
  for (unsigned n = 0; n <= 25; ++n) {
    std::vector<Rational> points = base;
    for (long x = 3; points.size() < n + 1; ++x) points.emplace_back(x);
    const PolyQ A = eulerian_poly(n).poly;
    for (const auto& x0 : points) {
      Rational expected = A.eval(x0);
      if (n % 2 == 1) expected = -expected;
      REQUIRE(eulerian_series_coeff(n, x0) == expected);
    }
  }
  try {
    eulerian_series_coeff(3, 1);
    FAIL("expected PoleAtOne");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleAtOne);
  }
}

TEST_CASE("witt_value") {
  CHECK(witt_value(1, 17) == 1);
  CHECK(witt_value(2, 2) == -1);
  CHECK(witt_value(0, 7) == 1);
  CHECK(witt_value(3, 8) == 33);
  try {
    witt_value(2, -1);
    FAIL("expected PoleAtMinusOne");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleAtMinusOne);
  }
}
