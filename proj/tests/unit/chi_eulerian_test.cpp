#include "../oracles.hpp"

#include <chieuler/chi_eulerian.hpp>
#include <chieuler/error.hpp>
#include <chieuler/eulerian.hpp>
#include <chieuler/series.hpp>

#include <doctest.h>

using namespace chieuler;

namespace {

DirichletCharacter quadratic3() { return enumerate_characters(3)[1]; }

// A_{0..n,chi}(-q) for a real character straight from the generating
// function, by truncated series division.
std::vector<Rational> by_series_division(unsigned n, const DirichletCharacter& chi, const Rational& q) {
  const long d = static_cast<long>(chi.modulus());
  const Rational s = Rational(1) + q;
  TruncSeries num(n);
  for (long l = 0; l < d; ++l) {
    const CycElem v = char_eval(chi, l);
    REQUIRE(v.is_rational());
    Rational c = (l % 2 == 0 ? Rational(1) : Rational(-1)) * q.pow(d - l + 1) * v.rational_part() * s;
    TruncSeries term = TruncSeries::exp(-Rational(l) * s, n);
    for (std::size_t i = 0; i <= n; ++i) term[i] *= c;
    num += term;
  }
  const TruncSeries den = TruncSeries::exp(-Rational(d) * s, n) + TruncSeries::constant(q.pow(d), n);
  return series_div(num, den).coefficients();
}

}  // namespace

TEST_CASE("spot values for the quadratic character mod 3") {
  const auto chi = quadratic3();
  CHECK(chi_eulerian(0, chi, 2) == CycElem::rational(-4));
  CHECK(chi_eulerian(1, chi, 2) == CycElem::rational(12));
  CHECK(chi_eulerian_geometric(0, chi, 2) == CycElem::rational(-4));
  CHECK(chi_eulerian_geometric(1, chi, 2) == CycElem::rational(12));
  // -q^2 (1+q)^2 / (1+q^3) at q = 2
  CHECK(chi_eulerian(0, chi, 2) == CycElem::rational(Rational(-4 * 9, 9)));
}

TEST_CASE("recurrence, geometric closed form and series division agree") {
  for (long d : {1, 3, 5, 9}) {
    for (const auto& chi : enumerate_characters(d)) {
      for (const Rational& q : {Rational(2), Rational(3), Rational(7, 2), Rational(-3, 5)}) {
        const auto table = chi_eulerian_table(8, chi, q);
        for (unsigned n = 0; n <= 8; ++n) REQUIRE(table[n] == chi_eulerian_geometric(n, chi, q));
        if (chi.order() <= 2) {
          const auto ref = by_series_division(8, chi, q);
          for (unsigned n = 0; n <= 8; ++n) REQUIRE(table[n] == CycElem::rational(ref[n]));
        }
      }
    }
  }
}

TEST_CASE("real characters give rational values") {
  for (long d : {3, 5, 9, 15}) {
    for (const auto& chi : enumerate_characters(d)) {
      if (chi.order() > 2) continue;
      for (unsigned n = 0; n <= 5; ++n) CHECK(chi_eulerian(n, chi, Rational(5, 3)).is_rational());
    }
  }
}

TEST_CASE("modulus 1 gives q^2 times the classical value") {
  // The definition's kernel q^{d-l+1} at d = 1 contributes q^2.
  const auto chi0 = enumerate_characters(1)[0];
  for (const Rational& q : {Rational(2), Rational(3), Rational(5), Rational(7, 3)}) {
    for (unsigned n = 0; n <= 12; ++n) REQUIRE(chi_eulerian(n, chi0, q) == CycElem::rational(q * q * witt_value(n, q)));
  }
}

TEST_CASE("linearity in the character") {
  // sum_chi chi(l) = phi(d) [l = 1 mod d], so the character sum of the values
  // equals phi(d) times the value built from the indicator of l = 1.
  const long d = 5;
  const Rational q(3);
  for (unsigned n = 0; n <= 6; ++n) {
    CycElem total;
    for (const auto& chi : enumerate_characters(d)) total += chi_eulerian(n, chi, q);
    // Indicator kernel: only l = 1 survives, with weight phi(d) = 4.
    const Rational s = Rational(1) + q;
    TruncSeries num(n);
    TruncSeries term = TruncSeries::exp(-s, n);
    const Rational c = Rational(-1) * q.pow(d - 1 + 1) * Rational(4) * s;
    for (std::size_t i = 0; i <= n; ++i) num[i] = term[i] * c;
    const TruncSeries den = TruncSeries::exp(-Rational(d) * s, n) + TruncSeries::constant(q.pow(d), n);
    REQUIRE(total == CycElem::rational(series_div(num, den)[n]));
  }
}

TEST_CASE("poles") {
  const auto chi = quadratic3();
  for (const Rational& q : {Rational(0), Rational(-1)}) {
    try {
      chi_eulerian(2, chi, q);
      FAIL("expected PoleQ");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::PoleQ);
    }
  }
}

TEST_CASE("Taylor-coefficient series check") {
  const auto chi = quadratic3();
  const auto r0 = chi_eulerian_series_check(0, chi, 2, 128);
  CHECK(r0.passed);
  // -4 / (q (1+q)) = -2/3
  CHECK(abs(r0.lhs.re - Real(Rational(-2, 3), 200)) < Real::exp2(-120, 64));
  CHECK(chi_eulerian_series_check(1, chi, 2, 128).passed);
  for (long d : {1, 3, 5, 9}) {
    for (const auto& c : enumerate_characters(d)) {
      for (const Rational& q : {Rational(2), Rational(3), Rational(7, 2)}) {
        for (unsigned n = 0; n <= 8; ++n) REQUIRE(chi_eulerian_series_check(n, c, q, 128).passed);
      }
    }
  }
  try {
    chi_eulerian_series_check(1, chi, 1, 128);
    FAIL("expected ConvergenceDomain");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConvergenceDomain);
  }
}

TEST_CASE("weight-zero q-Euler and q-Genocchi") {
  CHECK(weight_zero_euler(0, 5, Rational(1, 3)) == 1);
  CHECK(weight_zero_euler(1, 2, 0) == Rational(-2, 3));
  CHECK(weight_zero_euler(1, 2, Rational(2, 3)) == 0);
  CHECK(weight_zero_genocchi(1, 2, 0) == 1);
  CHECK(weight_zero_genocchi(2, 2, 0) == Rational(-4, 3));
  // q = 1 is allowed: E_2(0) = (2*0 - (E_0 + 2 E_1)) / 2 with E_1 = -1/2.
  CHECK(weight_zero_euler(2, 1, 0) == 0);
  CHECK(weight_zero_genocchi(3, 1, 0) == 0);
  CHECK_THROWS_AS(weight_zero_euler(2, -1, 0), Error);
}

TEST_CASE("distribution identity") {
  const auto chi = quadratic3();
  const auto rep = verify_distribution(0, chi, q_samples(distribution_sample_bound(0, 3), {2}), Variant::corrected);
  CHECK(rep.passed());
  CHECK(rep.ratio_is_q2);
  const auto& s = rep.samples.front();
  CHECK(s.q == 2);
  CHECK(s.rhs == CycElem::rational(-1));
  CHECK(s.lhs_corrected == CycElem::rational(-1));
  CHECK(s.lhs_printed == CycElem::rational(-4));
  CHECK(s.ratio == CycElem::rational(4));

  const auto printed = verify_distribution(0, chi, q_samples(distribution_sample_bound(0, 3), {2}), Variant::printed);
  CHECK_FALSE(printed.passed());

  const auto few = verify_distribution(1, chi, {2, 3}, Variant::corrected);
  CHECK_FALSE(few.sufficient_samples);
  CHECK_FALSE(few.passed());

  CHECK_THROWS_AS(verify_distribution(0, chi, {0}, Variant::corrected), Error);
}

TEST_CASE("q_samples") {
  const auto s = q_samples(6);
  CHECK(s == std::vector<Rational>{2, 3, Rational(3, 2), 4, Rational(4, 3), 5});
  const auto seeded = q_samples(3, {7, 2, 7});
  CHECK(seeded == std::vector<Rational>{7, 2, 3});
}
