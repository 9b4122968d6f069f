#pragma once

#include <chieuler/bigfloat.hpp>
#include <chieuler/characters.hpp>
#include <chieuler/rational.hpp>

#include <functional>

namespace chieuler {

struct LValue {
  Rational s_re;
  Rational s_im;
  Rational q;
  long bits = 0;
  std::size_t terms = 0;
  Complex value;
  Real tail_bound;
  Real rounding_bound;
};

/// L_E(s|chi) = q (1+q)^{1-s} sum_{m>=1} (-1)^m chi(m) q^{-m} m^{-s}.
/// The series converges for every s when q > 1 (ConvergenceDomain otherwise).
/// The partial sum stops at the first M (doubling) whose certified tail,
/// times the prefactor, is below 2^{4-bits}.
LValue l_eulerian(const Rational& s_re, const Rational& s_im, const DirichletCharacter& chi,
                  const Rational& q, long bits);

struct InterpolationReport {
  unsigned n = 0;
  LValue l_value;
  Complex expected;  // (-1)^n A_{n,chi}(-q)
  Real error;
  Real bound;        // tail + rounding
  bool passed = false;
};

/// L_E(-n|chi) against (-1)^n A_{n,chi}(-q).
InterpolationReport verify_interpolation(unsigned n, const DirichletCharacter& chi,
                                         const Rational& q, long bits);

struct QuadratureResult {
  Real value;
  Real error_estimate;
  int levels = 0;
};

/// Tanh-sinh quadrature of f over [a, b] at the working precision of a.
/// Algebraic endpoint singularities are absorbed by the transform; f is
/// never evaluated exactly at a or b.
QuadratureResult tanh_sinh(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                           const Real& tolerance);

struct MellinReport {
  Rational s;
  unsigned long m = 0;
  Rational q;
  long bits = 0;
  Real cutoff;      // T
  Real quadrature;  // (1/Gamma(s)) int_0^T t^{s-1} e^{-m(1+q)t} dt
  Real closed_form; // (m(1+q))^{-s}
  Real error;
  Real tolerance;   // 2^{-bits/2}
  bool passed = false;
};

/// Term-wise Mellin identity for real s > 0 (DomainError otherwise),
/// m >= 1 and q > -1.
MellinReport mellin_term_check(const Rational& s, unsigned long m, const Rational& q, long bits);

}  // namespace chieuler
