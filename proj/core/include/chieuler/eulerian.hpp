#pragma once

#include <chieuler/poly.hpp>
#include <chieuler/rational.hpp>

#include <vector>

namespace chieuler {

struct EulerianPoly {
  unsigned n = 0;
  PolyQ poly;
};

/// A_0..A_n from (t-1) A_n = sum_{k<n} C(n,k) A_k (t-1)^{n-k}.
std::vector<EulerianPoly> eulerian_table(unsigned n);
EulerianPoly eulerian_poly(unsigned n);

/// t^n/n! coefficient of (1 - x0)/(e^{t(1-x0)} - x0), by series division.
/// Equals (-1)^n A_n(x0). Throws PoleAtOne for x0 = 1.
Rational eulerian_series_coeff(unsigned n, const Rational& x0);

/// A_n(-q). Throws PoleAtMinusOne for q = -1.
Rational witt_value(unsigned n, const Rational& q);

}  // namespace chieuler
