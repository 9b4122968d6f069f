#include <chieuler/error.hpp>
#include <chieuler/eulerian.hpp>
#include <chieuler/series.hpp>

namespace chieuler {

std::vector<EulerianPoly> eulerian_table(unsigned n) {
  const PolyQ t_minus_one{Rational(-1), Rational(1)};
  // (t-1)^j for j < n
  std::vector<PolyQ> powers{PolyQ::constant(1)};
  for (unsigned j = 1; j < n; ++j) powers.push_back(powers.back() * t_minus_one);

  std::vector<EulerianPoly> table;
  table.reserve(n + 1);
  table.push_back({0, PolyQ::constant(1)});
  for (unsigned m = 1; m <= n; ++m) {
    PolyQ acc;
    for (unsigned k = 0; k < m; ++k) {
      acc += Rational(binomial(m, k)) * (table[k].poly * powers[m - 1 - k]);
    }
    table.push_back({m, std::move(acc)});
  }
  return table;
}

EulerianPoly eulerian_poly(unsigned n) { return eulerian_table(n).back(); }

Rational eulerian_series_coeff(unsigned n, const Rational& x0) {
  if (x0 == Rational(1)) throw Error(ErrorKind::PoleAtOne, "generating function has a pole at x = 1");
  const Rational one_minus = Rational(1) - x0;
  TruncSeries num = TruncSeries::constant(one_minus, n);
  TruncSeries den = TruncSeries::exp(one_minus, n) - TruncSeries::constant(x0, n);
  return series_div(num, den)[n];
}

Rational witt_value(unsigned n, const Rational& q) {
  if (q == Rational(-1)) throw Error(ErrorKind::PoleAtMinusOne, "q = -1 is excluded");
  return eulerian_poly(n).poly.eval(-q);
}

}  // namespace chieuler
