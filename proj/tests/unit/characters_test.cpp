#include "../oracles.hpp"

#include <chieuler/characters.hpp>
#include <chieuler/error.hpp>

#include <doctest.h>

#include <numeric>
#include <set>

using namespace chieuler;

namespace {

const CycElem& one() {
  static const CycElem v = CycElem::rational(1);
  return v;
}

}  // namespace

TEST_CASE("unit group structure") {
  const auto g9 = unit_group(9);
  CHECK(g9->generators() == std::vector<unsigned long>{2});
  CHECK(g9->orders() == std::vector<unsigned long>{6});
  const auto g15 = unit_group(15);
  CHECK(g15->orders() == std::vector<unsigned long>{2, 4});
  CHECK(g15->generators()[0] % 3 == 2);
  CHECK(g15->generators()[1] % 5 == 2);
  const auto g1 = unit_group(1);
  CHECK(g1->generators().empty());
  CHECK(g1->totient() == 1);
  try {
    unit_group(12);
    FAIL("expected EvenModulus");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EvenModulus);
  }
}

TEST_CASE("unit groups agree with brute force for odd d <= 99") {
  for (long d = 1; d <= 99; d += 2) {
    const auto g = unit_group(d);
    const auto ud = static_cast<unsigned long>(d);
    REQUIRE(g->totient() == oracle::totient(ud));
    unsigned long prod = 1;
    for (std::size_t i = 0; i < g->orders().size(); ++i) {
      prod *= g->orders()[i];
      REQUIRE(oracle::mult_order(g->generators()[i], ud) == g->orders()[i]);
    }
    REQUIRE(prod == oracle::totient(ud));
    // dlog is a bijection onto the exponent tuples.
    std::set<std::vector<unsigned long>> seen;
    for (long a = 0; a < d; ++a) {
      if (std::gcd(a, d) != 1 || d == 1) continue;
      const auto& e = g->dlog(a);
      unsigned long x = 1;
      for (std::size_t i = 0; i < e.size(); ++i) {
        for (unsigned long j = 0; j < e[i]; ++j) x = x * g->generators()[i] % ud;
      }
      REQUIRE(x == static_cast<unsigned long>(a));
      seen.insert(e);
    }
    if (d > 1) REQUIRE(seen.size() == oracle::totient(ud));
  }
}

TEST_CASE("enumeration examples") {
  const auto c3 = enumerate_characters(3);
  REQUIRE(c3.size() == 2);
  CHECK(c3[0].is_principal());
  CHECK(char_eval(c3[1], 2) == CycElem::rational(-1));
  std::multiset<unsigned long> orders;
  for (const auto& chi : enumerate_characters(5)) orders.insert(chi.order());
  CHECK(orders == std::multiset<unsigned long>{1, 2, 4, 4});
  const auto c1 = enumerate_characters(1);
  REQUIRE(c1.size() == 1);
  for (long a = -3; a < 5; ++a) CHECK(char_eval(c1[0], a) == one());
  CHECK(char_eval(enumerate_characters(9)[0], 4) == one());
  for (const auto& chi : enumerate_characters(15)) CHECK(char_eval(chi, 0).is_zero());
}

TEST_CASE("conductors") {
  const auto c9 = enumerate_characters(9);
  CHECK(conductor(c9[0]) == 1);
  for (const auto& chi : c9) {
    if (chi.order() == 2) CHECK(conductor(chi) == 3);
    if (chi.order() == 6) CHECK(conductor(chi) == 9);
  }
  for (long d = 1; d <= 99; d += 2) {
    for (const auto& chi : enumerate_characters(d)) REQUIRE(conductor(chi) == oracle::conductor_by_components(chi));
  }
}

TEST_CASE("orthogonality") {
  for (long d : {3, 5, 9, 15}) {
    const auto chars = enumerate_characters(d);
    for (const auto& a : chars) {
      for (const auto& b : chars) {
        const auto bc = b.conj();
        CycElem sum;
        for (long x = 0; x < d; ++x) sum += char_eval(a, x) * char_eval(bc, x);
        const long expected = a == b ? static_cast<long>(oracle::totient(static_cast<unsigned long>(d))) : 0;
        REQUIRE(sum == CycElem::rational(expected));
      }
    }
  }
}

TEST_CASE("complete multiplicativity and value orders for d <= 45") {
  for (long d = 1; d <= 45; d += 2) {
    for (const auto& chi : enumerate_characters(d)) {
      for (long a = 0; a < d; ++a) {
        const CycElem ca = char_eval(chi, a);
        if (std::gcd(a, d) == 1) {
          // Value order divides value_order.
          CycElem power = one();
          for (unsigned long j = 0; j < chi.value_order(); ++j) power *= ca;
          REQUIRE(power == one());
        } else if (d > 1) {
          REQUIRE(ca.is_zero());
        }
        for (long b = 0; b < d; ++b) REQUIRE(char_eval(chi, a * b) == ca * char_eval(chi, b));
      }
      // Periodicity, including negative arguments.
      REQUIRE(char_eval(chi, -1) == char_eval(chi, d - 1));
    }
  }
}
